from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from sevlab.data import FACE_TABLE, LINK_TABLE, dataset
from sevlab.errors import NotAnAutomorphism, NotPure
from sevlab.exact import Permutation
from sevlab.simplicial import (
    SimplicialComplex,
    automorphism_group,
    check_manifold_properties,
    f_vector,
    h_doubleprime,
    h_from_f,
    is_pseudomanifold,
    klee_solve,
    link_f_vectors,
    link_facet_formula,
    so_vector_power_dim,
    verify_automorphisms,
)

ALG = [("R", 1), ("C", 2), ("H", 4), ("O", 8)]


@pytest.mark.parametrize("alg,a", ALG)
def test_klee_table(alg, a):
    assert list(klee_solve(a).f[1:]) == FACE_TABLE[alg]


@pytest.mark.parametrize("alg,a", ALG)
def test_links(alg, a):
    assert list(link_f_vectors(a).f[1:]) == LINK_TABLE[alg]


@pytest.mark.parametrize("a,n", [(1, 5), (2, 20), (4, 294), (8, 63206)])
def test_link_facets(a, n):
    assert link_facet_formula(a) == n == so_vector_power_dim(a)


def test_h_vectors():
    rp2 = dataset("RP2_min").complex
    cp2 = dataset("CP2_min").complex
    assert h_from_f(f_vector(rp2)).h == (1, 3, 6, 0)
    assert h_from_f(f_vector(cp2)).h == (1, 4, 10, 20, -1, 2)


def test_h_doubleprime():
    assert h_doubleprime(1) == (1, 3, 1)
    assert h_doubleprime(2) == (1, 4, 10, 4, 1)


def _simplex_boundary(d):
    return SimplicialComplex(d + 2, combinations(range(1, d + 3), d + 1))


@given(st.integers(1, 6))
def test_sphere_boundary_face_numbers(d):
    # the boundary of a (d+1)-simplex has f_k = C(d+2, k+1) and h = (1, ..., 1)
    c = _simplex_boundary(d)
    from math import comb

    assert f_vector(c).f[1:] == tuple(comb(d + 2, k + 1) for k in range(d + 1))
    assert set(h_from_f(f_vector(c)).h) == {1}
    assert is_pseudomanifold(c)


@settings(max_examples=20, deadline=None)
@given(st.permutations(list(range(1, 10))))
def test_relabelling_preserves_properties(perm):
    c = dataset("CP2_min").complex.permuted(Permutation(perm))
    rep = check_manifold_properties(c, 2)
    assert not rep.failures and rep.euler == 3


def test_rp2_properties():
    rep = check_manifold_properties(dataset("RP2_min").complex, 1)
    assert not rep.failures and rep.euler == 1


def test_not_pure():
    with pytest.raises(NotPure):
        check_manifold_properties(SimplicialComplex(4, [[1, 2, 3], [3, 4]]), 1)


def test_automorphism_orders():
    assert len(automorphism_group(dataset("RP2_min").complex)) == 60
    assert len(automorphism_group(dataset("CP2_min").complex)) == 54


def test_verify_generators():
    c = dataset("CP2_min").complex
    g = dataset("CP2_generators").generators
    h = verify_automorphisms(c, [g["h1"], g["h2"]])
    assert (h.order, h.transitive) == (9, True)
    assert [len(o) for o in h.facet_orbits] == [9, 9, 9, 9]
    assert verify_automorphisms(c, list(g.values())).order == 18


def test_bad_generator():
    c = dataset("CP2_min").complex
    with pytest.raises(NotAnAutomorphism):
        verify_automorphisms(c, [Permutation.from_cycles("(12)", 9)])


def test_text_round_trip():
    c = dataset("CP2_min").complex
    assert SimplicialComplex.from_text(c.to_text()) == c


def test_link_of_cp2_vertex():
    lk = dataset("CP2_min").complex.link(1)
    assert f_vector(lk).f[1:] == tuple(LINK_TABLE["C"])
