from fractions import Fraction

import pytest

from sevlab.data import HP2_M1, dataset
from sevlab.wedge import (
    alt_square,
    bold_selection,
    compare_rp2_diagram,
    contraction_rank,
    coordinate_forms,
    cp2_match,
    decomposable,
    defectivity_check,
    enumerate_selections,
    full_wedge,
    generate_module,
    generic_decomposable_control,
    image_dims_a1,
    is_highest,
    l3_span,
    m1_weight_check,
    sym_square,
    top_span,
    wedge,
)


@pytest.fixture(scope="module")
def l3():
    return l3_span()


def test_l3_dimension(l3):
    assert l3.dim == 10
    assert l3.multiplicity_free


def test_diagram(l3):
    d = compare_rp2_diagram(l3)
    assert (d.matched, d.proportional, d.exact_sign) == (10, 10, 10)
    assert d.coefficient_two and not d.mismatches


def test_bold_selection_unique(l3):
    total, good, facets = enumerate_selections(l3)
    assert (total, good) == (128, 1)
    assert sorted(facets[0]) == dataset("RP2_min").complex.facets
    assert len(bold_selection(l3, dataset("RP2_min").complex)) == 10


def test_contraction_ranks(l3):
    bold = [{m: Fraction(1)} for m in bold_selection(l3, dataset("RP2_min").complex).values()]
    assert contraction_rank(bold, coordinate_forms(6)) == 15
    generic = {i: Fraction(i + 2) for i in range(6)}
    assert contraction_rank(bold, generic) == 10
    assert contraction_rank(full_wedge(6, 3), generic) == 10


def test_image_dims(l3):
    assert image_dims_a1(l3) == [10, 15, 6, 1]


def test_gl_dims_of_lowest_pieces():
    m = sym_square(3)
    span = generate_module(m, m.mono("(11)"))
    assert span.dim == 6


def test_wedge_is_graded_commutative():
    u = decomposable([{0: 1}, {1: 1}])
    v = decomposable([{2: 1}])
    assert wedge(u, v) == wedge(v, u)
    assert wedge(v, v) == {}


@pytest.mark.parametrize("a,dim", [(1, 10), (2, 36)])
def test_defectivity(a, dim):
    d = defectivity_check(a)
    assert d.dim == dim and d.vanishing


def test_negative_control():
    assert generic_decomposable_control(0)
    assert generic_decomposable_control(7)


def test_cp2_match():
    r = cp2_match(top_span(2), dataset("CP2_min").complex, dataset("CP2_dictionary").dictionary, dataset("CP2_generators").generators)
    assert r.highest_facet == (3, 4, 6, 8, 9)
    assert r.support_sizes == {1: 9, 2: 18, 4: 9}
    assert r.weight_orbits == r.h_orbits == 4
    assert not r.failures


def test_m1():
    r = m1_weight_check(HP2_M1)
    assert r.weight == (5, 5, 2, 2, 2, 2)
    assert r.highest and r.dim == 490


def test_non_highest_monomial():
    m = alt_square(6)
    assert not is_highest(m, m.mono("(34)"))
