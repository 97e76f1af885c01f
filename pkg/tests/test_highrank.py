from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from sevlab.cominuscule import identify_interval, make_pair
from sevlab.errors import OutOfRange, UnsupportedCase
from sevlab.highrank import (
    L_highrank,
    alternating_sum,
    cartan_power_label,
    completeness,
    conjugate,
    d_minus,
    d_plus,
    expected_alternating_sum,
    f_closed_form,
    f_highrank,
    frobenius,
    schur_dim,
    strict_partitions,
    top_power,
    u_dim,
    wedge_decomp_highrank,
)
from sevlab.lie import build_root_system, weyl_dim


def ssyt_count(lam, n):
    """Brute-force count of semistandard tableaux of shape lam in 1..n."""
    cells = [(i, j) for i, r in enumerate(lam) for j in range(r)]
    count = 0
    for fill in product(range(1, n + 1), repeat=len(cells)):
        t = dict(zip(cells, fill))
        if all(t[(i, j)] <= t[(i, j + 1)] for (i, j) in cells if (i, j + 1) in t) and all(
            t[(i, j)] < t[(i + 1, j)] for (i, j) in cells if (i + 1, j) in t
        ):
            count += 1
    return count


@pytest.mark.parametrize("lam,n", [((1,), 3), ((2, 1), 3), ((3, 3), 3), ((2, 2, 1), 3), ((2, 1, 1), 4), ((4,), 2)])
def test_schur_dim_against_tableaux(lam, n):
    assert schur_dim(lam, n) == ssyt_count(lam, n)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=5, max_size=5))
def test_schur_dim_against_weyl(parts):
    lam = tuple(sorted(parts, reverse=True))
    sl = [lam[i] - lam[i + 1] for i in range(4)]
    assert schur_dim(lam, 5) == weyl_dim(build_root_system("A", 4), sl)


def test_schur_dim_too_many_rows():
    assert schur_dim((1, 1, 1, 1), 3) == 0


def test_d_plus_examples():
    assert d_plus((1,)) == (1, 1)
    assert d_plus((3,)) == (3, 1, 1, 1)
    assert d_plus((2, 1)) == (2, 2, 2)
    assert d_plus((5, 4)) == (5, 5, 2, 2, 2, 2)
    assert d_minus((1,)) == (2,)
    assert d_minus((2, 1)) == (3, 3)


@given(st.sets(st.integers(1, 7), min_size=1, max_size=4))
def test_d_plus_is_frobenius_shift(s):
    lam = tuple(sorted(s, reverse=True))
    mu = d_plus(lam)
    assert sum(mu) == 2 * sum(lam)
    arms, legs = frobenius(mu)
    assert legs == lam and arms == tuple(x - 1 for x in lam)
    assert conjugate(conjugate(mu)) == mu


def test_top_of_quaternionic_plane():
    mu = d_plus((5, 4))
    assert schur_dim(mu, 6) == 490


@pytest.mark.parametrize("a", [1, 2, 4])
@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_completeness(a, n):
    assert completeness(a, n)


@pytest.mark.parametrize("alg,a", [("R", 1), ("C", 2), ("H", 4)])
def test_rank_two_agreement(alg, a):
    assert f_highrank(a, 2) == identify_interval(make_pair(alg)).dims()


def test_wedge_decomp_examples():
    assert sum(d for _, d in wedge_decomp_highrank(2, 2, 3)) == 84
    assert wedge_decomp_highrank(4, 2, 0) == [(((),), 1)]
    with pytest.raises(OutOfRange):
        wedge_decomp_highrank(1, 2, 7)


@pytest.mark.parametrize("a", [1, 2])
@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8])
def test_closed_forms(a, n):
    assert [f_closed_form(a, n, k) for k in range(a * n + 1)] == f_highrank(a, n)


def test_closed_form_examples():
    assert f_closed_form(1, 2, 2) == 10
    assert f_closed_form(2, 2, 4) == 36
    assert f_closed_form(1, 3, 0) == 10


def test_other_reading_fails():
    assert f_closed_form(2, 2, 1, reading="denominator") != f_highrank(2, 2)[1]


@pytest.mark.parametrize("a", [1, 2, 4])
@pytest.mark.parametrize("n", range(2, 9))
def test_alternating_sums(a, n):
    assert alternating_sum(a, n) == expected_alternating_sum(a, n)


def test_alternating_examples():
    assert alternating_sum(2, 4) == 5
    assert alternating_sum(1, 3) == 0
    assert alternating_sum(2, 2) == 3


@pytest.mark.parametrize("a", [1, 2, 4])
@pytest.mark.parametrize("n", range(2, 7))
def test_top_is_cartan_power(a, n):
    (lab, _), = L_highrank(a, n)[a * n + 1]
    N = u_dim(a, n)
    pad = lambda mu: tuple(mu) + (0,) * (N - len(mu))
    sl = lambda mu: tuple(pad(mu)[i] - pad(mu)[i + 1] for i in range(N - 1))
    assert [sl(m) for m in lab] == [sl(m) for m in cartan_power_label(a, n)]


def test_top_power():
    assert top_power(2, 3) == 3
    assert top_power(8, 2) == 5


def test_unsupported():
    with pytest.raises(UnsupportedCase):
        L_highrank(8, 2)


def test_strict_partitions():
    assert strict_partitions(5, 5) == [(5,), (4, 1), (3, 2)]
