import pytest

from sevlab.data import DATASET_NAMES, HP2_PAIR_TABLE, dataset, m1_vertices, pair_permutation
from sevlab.errors import UnknownDataset
from sevlab.exact import group_closure, orbits
from sevlab.simplicial import is_automorphism

DIGESTS = {
    "RP2_min": "692c7d97f4417170841c8e1a56982a0325ca6646970966bf9244f96ed9dca4d3",
    "CP2_min": "50b16a88ed616efe8f6028423ee1ba0d8d0c96d076c4dba7387075600eef52e5",
    "CP2_dictionary": "1974bcbbc82e7ba5002e8a31f2e9a11fa2522e6f72cbf6aff274ae0027e45940",
    "CP2_generators": "f538b7330268fb227f3a0e398fa6261492a9150fadec9f433a4b36fbcc0f90a2",
    "HP2_generators": "c6f8dbb1bb9b65ed93d1367dfa1ad0255e91d7b1708bb19468f32533463f6cfc",
    "HP2_pair_table": "e0af94de3d8616f5434034c61d962c828aecf973f3406a547555174e3f1a2052",
    "HP2_M1": "f86487b70fa8561a934656eee66c99b6e519fcda2152af33f5e8c2d70e3d2029",
}


@pytest.mark.parametrize("name", DATASET_NAMES)
def test_digests_frozen(name):
    assert dataset(name).digest() == DIGESTS[name]


def test_unknown():
    with pytest.raises(UnknownDataset):
        dataset("OP2_min")


def test_cp2_generators_are_automorphisms():
    c = dataset("CP2_min").complex
    assert all(is_automorphism(c, g) for g in dataset("CP2_generators").generators.values())


def test_pair_table_is_a_bijection():
    assert sorted(HP2_PAIR_TABLE.values()) == list(range(1, 16))
    assert len(HP2_PAIR_TABLE) == 15


def test_hp2_group():
    gens = list(dataset("HP2_generators").generators.values())
    assert group_closure(gens).order() == 60
    pg = [pair_permutation(g) for g in gens]
    assert group_closure(pg).order() == 60
    assert len(orbits(pg, list(range(1, 16)))) == 1


def test_m1_vertices():
    assert m1_vertices() == [3, 4, 7, 10, 11, 12, 13, 14, 15]


def test_rp2_vertices_are_quadratic_monomials():
    d = dataset("RP2_min")
    assert list(d.dictionary.values()) == ["11", "12", "13", "22", "23", "33"]
    assert len(d.complex.facets) == 10
