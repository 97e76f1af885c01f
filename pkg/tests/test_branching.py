import random
from fractions import Fraction

import pytest

from sevlab.branching import (
    SchemeMismatch,
    cartan_splitting_at,
    cartan_splitting_check,
    check_scheme_at,
    euler_char_at_point,
    expected_invariant_pattern,
    higher_invariants,
    invariant_dims,
    invariants_ct,
    kostant_restriction_check,
    regular_points,
    restriction_scheme,
    sl2_decomposition,
)
from sevlab.errors import UnsupportedCase
from sevlab.lie import weyl_dim


@pytest.mark.parametrize("a,chi", [(1, 1), (2, 3), (4, 3)])
def test_euler(a, chi):
    pts = regular_points(restriction_scheme(a), 5, seed=a)
    assert [euler_char_at_point(a, p) for p in pts] == [chi] * 5


def test_euler_real_at_two():
    assert euler_char_at_point(1, [Fraction(2)]) == 1


@pytest.mark.parametrize("a", [1, 2, 4])
def test_scheme_and_kostant_restriction(a):
    s = restriction_scheme(a)
    p = regular_points(s, 1, seed=11)[0]
    assert check_scheme_at(s, p)
    assert kostant_restriction_check(a, p)


def test_scheme_rejects_wrong_target():
    s = restriction_scheme(2)
    bad = type(s)(s.a, s.levi, s.target, s.projection, (2, 0), s.j_levi, "wrong")
    with pytest.raises(SchemeMismatch):
        check_scheme_at(bad, [Fraction(2), Fraction(3)])


def test_target_dimension_is_3a_plus_2():
    for a in (1, 2, 4, 8):
        s = restriction_scheme(a)
        assert weyl_dim(s.target, s.j_phi) == 3 * a + 2


def test_sl2_decomposition():
    chi = {(4,): 1, (2,): 1, (0,): 2, (-2,): 1, (-4,): 1}
    assert sl2_decomposition(chi) == {4: 1, 0: 1}


@pytest.mark.parametrize("a", [1, 2, 4])
def test_rules_agree_with_constant_terms(a):
    r = invariant_dims(a)
    assert r.consistent


def test_invariant_patterns():
    assert invariant_dims(2).by_rule == [1, 0, 1, 0, 1]
    assert invariant_dims(4).by_rule == [1, 0, 0, 0, 1, 0, 0, 0, 1]
    # real case: only the constants, L^2 = V6+V2+V4 and L^3 = V6+V2 under SO(3)
    assert invariant_dims(1).by_rule == [1, 0, 0]


def test_signed_invariants_give_euler():
    for a, chi in ((1, 1), (2, 3), (4, 3)):
        assert sum((-1) ** k * x for k, x in enumerate(invariant_dims(a).by_rule)) == chi


@pytest.mark.parametrize("a", [1, 2, 4])
def test_cartan_splitting(a):
    assert cartan_splitting_check(a, 6)
    p = regular_points(restriction_scheme(a), 1, seed=3)[0]
    assert cartan_splitting_at(a, 2, p)


def test_higher_invariants():
    assert higher_invariants(2, 2) == invariant_dims(2).by_rule
    assert higher_invariants(4, 2) == invariant_dims(4).by_rule
    assert higher_invariants(1, 2) == invariant_dims(1).by_rule
    assert higher_invariants(4, 3) == expected_invariant_pattern(4, 3)
    for n in (2, 3, 4, 5, 6):
        assert higher_invariants(2, n) == expected_invariant_pattern(2, n)
        assert higher_invariants(4, n) == expected_invariant_pattern(4, n)


def test_higher_invariants_real():
    assert higher_invariants(1, 3) == [1, 0, 0, 1]


def test_unsupported():
    with pytest.raises(UnsupportedCase):
        invariant_dims(8)
    with pytest.raises(UnsupportedCase):
        higher_invariants(8, 2)


def test_points_are_deterministic():
    s = restriction_scheme(4)
    assert regular_points(s, 3, seed=5) == regular_points(s, 3, seed=5)
