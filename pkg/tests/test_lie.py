from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from sevlab.errors import SingularPoint
from sevlab.lie import (
    build_root_system,
    char_eval,
    dominant_conjugate,
    freudenthal_weights,
    levi_dual,
    weyl_dim,
)

# number of positive roots and Weyl group orders (standard tables)
TABLE = [
    ("A", 1, 1, 2), ("A", 2, 3, 6), ("A", 5, 15, 720), ("B", 2, 4, 8), ("B", 3, 9, 48),
    ("C", 3, 9, 48), ("D", 4, 12, 192), ("D", 6, 30, 23040), ("F", 4, 24, 1152),
    ("E", 6, 36, 51840), ("E", 7, 63, 2903040),
]


@pytest.mark.parametrize("kind,rank,npos,order", TABLE)
def test_root_counts_and_weyl_orders(kind, rank, npos, order):
    rs = build_root_system(kind, rank)
    assert len(rs.positive_roots) == npos
    assert rs.weyl_order == order


@pytest.mark.parametrize("label,mu,dim", [
    ("E6", (1, 0, 0, 0, 0, 0), 27), ("E6", (0, 1, 0, 0, 0, 0), 78), ("E7", (0, 0, 0, 0, 0, 0, 1), 56),
    ("E7", (1, 0, 0, 0, 0, 0, 0), 133), ("F4", (0, 0, 0, 1), 26), ("F4", (1, 0, 0, 0), 52),
    ("C3", (0, 1, 0), 14), ("B2", (2, 0), 14), ("D4", (0, 1, 0, 0), 28), ("A2", (1, 1), 8),
])
def test_known_dimensions(label, mu, dim):
    assert weyl_dim(build_root_system(label), mu) == dim


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["A2", "B2", "C3", "A3"]), st.lists(st.integers(0, 2), min_size=3, max_size=3))
def test_freudenthal_total_matches_weyl(label, w):
    rs = build_root_system(label)
    mu = tuple(w[: rs.rank])
    assert freudenthal_weights(rs, mu).dim == weyl_dim(rs, mu)


@pytest.mark.parametrize("label,mu", [("A2", (2, 1)), ("B2", (1, 1)), ("C3", (0, 1, 0)), ("F4", (0, 0, 0, 1))])
def test_character_formula_matches_weight_sum(label, mu):
    rs = build_root_system(label)
    pt = [Fraction(2, 3), Fraction(-5, 2), Fraction(3, 7), Fraction(7, 4)][: rs.rank]
    direct = Fraction(0)
    for w, m in freudenthal_weights(rs, mu).all_weights().items():
        term = Fraction(m)
        for x, e in zip(pt, w):
            term *= x ** e
        direct += term
    assert char_eval(rs, mu, pt) == direct


def test_singular_point():
    with pytest.raises(SingularPoint):
        char_eval(build_root_system("A1"), (1,), [Fraction(1)])


def test_dominant_conjugate_and_dual():
    rs = build_root_system("A2")
    assert dominant_conjugate(rs, (-1, 0))[0] == (0, 1)
    assert levi_dual(rs, None, (2, 1)) == (1, 2)
    e6 = build_root_system("E6")
    assert levi_dual(e6, None, (1, 0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0, 1)


def test_levi_dimension():
    # D5 on nodes 2..6 of E6: node 6 ends the long arm (vector), node 2 a spinor
    e6 = build_root_system("E6")
    d5 = [2, 3, 4, 5, 6]
    assert weyl_dim(e6, (0, 0, 0, 0, 0, 1), levi_subset=d5) == 10
    assert weyl_dim(e6, (0, 1, 0, 0, 0, 0), levi_subset=d5) == 16


def test_unsupported_type():
    from sevlab.errors import UnsupportedType

    with pytest.raises(UnsupportedType):
        build_root_system("E", 8)


def test_budget_env(monkeypatch):
    from sevlab.errors import BudgetExceeded

    monkeypatch.setenv("SEVLAB_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        freudenthal_weights(build_root_system("A2"), (3, 3))
