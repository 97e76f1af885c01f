"""Restriction of the graded family L^k to the stabiliser SO(phi) of a
general linear form, at the level of characters.

Each scheme sends Levi fundamental coordinates to fundamental coordinates of
the target group by an integer matrix; it is accepted only after checking
that J restricts to J_phi + 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .cominuscule import LSequence, all_components, identify_interval, make_pair
from .errors import SingularPoint, UnsupportedCase
from .exact import LaurentPoly
from .highrank import L_highrank, conjugate, sl_label, u_dim
from .simplicial import chi_top
from .lie import (
    RootSystem,
    alternant,
    build_root_system,
    char_eval,
    eval_terms,
    freudenthal_weights,
    weyl_dim,
    weyl_orbit,
)


def _a5_to_c3() -> List[List[int]]:
    # A5 fundamental coords -> eps exponents lambda_i = sum_{j>=i} n_j,
    # then x_i = lambda_i - lambda_{i+3}, then C3 fundamental coords
    rows = []
    for n in np.eye(5, dtype=int):
        lam = [int(sum(n[i:])) for i in range(5)] + [0]
        m = [lam[i] - lam[i + 3] for i in range(3)]
        rows.append([m[0] - m[1], m[1] - m[2], m[2]])
    return [list(r) for r in np.array(rows).T]


@dataclass
class RestrictionScheme:
    a: int
    levi: RootSystem
    target: RootSystem
    projection: List[List[int]]
    j_phi: Tuple[int, ...]
    j_levi: Tuple[int, ...]
    description: str

    def project(self, w: Sequence[int]) -> Tuple[int, ...]:
        return tuple(sum(r[i] * w[i] for i in range(len(w))) for r in self.projection)


@lru_cache(maxsize=None)
def restriction_scheme(a: int) -> RestrictionScheme:
    pair = make_pair(a)
    levi = pair.ambient.sub(pair.levi_subset)
    seq = identify_interval(pair)
    j_levi = seq.L[1][0].levi_weight
    if a == 1:
        T = build_root_system("A", 1)
        P = [[2, 2]]
        phi = (4,)
        desc = "GL3 at (t, 1, 1/t) with t = s^2; SO(3) as A1 spin 2"
    elif a == 2:
        T = build_root_system("A", 2)
        P = [[1, 0, 1, 0], [0, 1, 0, 1]]
        phi = (1, 1)
        desc = "both GL3 factors at the same SL3 torus point"
    elif a == 4:
        T = build_root_system("C", 3)
        P = _a5_to_c3()
        phi = (0, 1, 0)
        desc = "GL6 at (x1, x2, x3, 1/x1, 1/x2, 1/x3); Sp6 = C3"
    elif a == 8:
        T = build_root_system("F", 4)
        P = [[0, 1, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0], [0, 0, 1, 0, 1, 0], [1, 0, 0, 0, 0, 1]]
        phi = (0, 0, 0, 1)
        desc = "E6 restricted to the fixed points of its diagram involution, F4"
    else:
        raise UnsupportedCase(f"a={a}")
    return RestrictionScheme(a, levi, T, P, phi, j_levi, desc)


_ALT_CACHE: Dict[Tuple[int, Tuple[int, ...]], Dict] = {}


def _restricted_alternant(scheme: RestrictionScheme, lam: Tuple[int, ...]) -> Dict:
    key = (scheme.a, lam)
    if key not in _ALT_CACHE:
        _ALT_CACHE[key] = alternant(scheme.levi, lam, scheme.projection)
    return _ALT_CACHE[key]


def restricted_char(scheme: RestrictionScheme, levi_weight: Sequence[int], point: Sequence[Fraction]) -> Fraction:
    """Character of the Levi module of the given highest weight at the image
    of a target torus point."""
    rho = scheme.levi.rho
    den = eval_terms(_restricted_alternant(scheme, rho), point)
    if den == 0:
        raise SingularPoint("restricted Weyl denominator vanishes")
    lam = tuple(int(x) + 1 for x in levi_weight)
    return eval_terms(_restricted_alternant(scheme, lam), point) / den


def random_point(rank: int, rng: random.Random) -> List[Fraction]:
    out = []
    while len(out) < rank:
        x = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
        if abs(x) != 1:
            out.append(x)
    return out


def regular_points(scheme: RestrictionScheme, count: int, seed: int = 0) -> List[List[Fraction]]:
    """Target torus points at which both Weyl denominators are nonzero."""
    rng = random.Random(seed)
    pts = []
    while len(pts) < count:
        p = random_point(scheme.target.rank, rng)
        try:
            check_scheme_at(scheme, p)
        except SingularPoint:
            continue
        pts.append(p)
    return pts


class SchemeMismatch(AssertionError):
    pass


def check_scheme_at(scheme: RestrictionScheme, point) -> bool:
    """J restricted equals J_phi plus a trivial line at this point."""
    lhs = restricted_char(scheme, scheme.j_levi, point)
    rhs = char_eval(scheme.target, scheme.j_phi, point) + 1
    if lhs != rhs:
        raise SchemeMismatch(f"restriction of J is not J_phi + 1 at {point}")
    return True


def euler_char_at_point(a: int, point, L: Optional[LSequence] = None) -> Fraction:
    """sum_k (-1)^{k+1} [L^k] restricted, evaluated at a target torus point."""
    scheme = restriction_scheme(a)
    check_scheme_at(scheme, point)
    L = L or identify_interval(make_pair(a))
    total = Fraction(0)
    for k, comps in sorted(L.L.items()):
        for c in comps:
            total += (-1) ** (k + 1) * restricted_char(scheme, c.levi_weight, point)
    return total


def kostant_restriction_check(a: int, point) -> bool:
    """wedge^k J restricted equals the sum of its Kostant pieces, for every k."""
    scheme = restriction_scheme(a)
    pair = make_pair(a)
    jw = restricted_weights(scheme, scheme.j_levi)
    vals = []
    for w, m in jw.items():
        vals += [eval_terms({w: 1}, point)] * m
    # elementary symmetric functions of the restricted eigenvalues
    e = [Fraction(1)] + [Fraction(0)] * len(vals)
    for v in vals:
        for k in range(len(vals), 0, -1):
            e[k] += e[k - 1] * v
    got = [Fraction(0)] * (len(vals) + 1)
    for c in all_components(pair):
        got[c.degree] += restricted_char(scheme, c.levi_weight, point)
    return got == e


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


def restricted_weights(scheme: RestrictionScheme, levi_weight: Sequence[int]) -> Dict[Tuple[int, ...], int]:
    """Restricted character as exponent -> multiplicity."""
    ws = freudenthal_weights(scheme.levi, tuple(levi_weight))
    out: Dict[Tuple[int, ...], int] = {}
    for dom, m in ws.multiplicities.items():
        for w in weyl_orbit(scheme.levi, dom):
            e = scheme.project(w)
            out[e] = out.get(e, 0) + m
    return out


@lru_cache(maxsize=None)
def _delta(target: str) -> Dict[Tuple[int, ...], int]:
    T = build_root_system(target)
    d: Dict[Tuple[int, ...], int] = {(0,) * T.rank: 1}
    for c in T.positive_roots:
        a = T.root_to_weight(c)
        nd = dict(d)
        for e, x in d.items():
            k = tuple(p - q for p, q in zip(e, a))
            nd[k] = nd.get(k, 0) - x
        d = {e: x for e, x in nd.items() if x}
    return d


def invariants_ct(scheme: RestrictionScheme, levi_weight: Sequence[int]) -> int:
    """Trivial multiplicity: constant term of chi * prod_{alpha>0} (1 - e^{-alpha})."""
    chi = restricted_weights(scheme, levi_weight)
    delta = _delta(scheme.target.type_label)
    return sum(x * chi.get(tuple(-p for p in e), 0) for e, x in delta.items())


def restricted_laurent(scheme: RestrictionScheme, levi_weight: Sequence[int]) -> LaurentPoly:
    names = [f"z{i + 1}" for i in range(scheme.target.rank)]
    return LaurentPoly(names, restricted_weights(scheme, levi_weight))


def sl2_decomposition(chi: Dict[Tuple[int, ...], int]) -> Dict[int, int]:
    """Highest weights (in fundamental coordinates) of an sl2 character."""
    c = {e[0]: m for e, m in chi.items() if m}
    out: Dict[int, int] = {}
    while c:
        top = max(c)
        m = c[top]
        if m < 0 or top < 0:
            raise ValueError("not an sl2 character")
        out[top] = out.get(top, 0) + m
        for e in range(top, -top - 1, -2):
            c[e] = c.get(e, 0) - m
            if not c[e]:
                del c[e]
    return out


def _gl6_partition(levi_weight: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(levi_weight[i:]) for i in range(5)) + (0,)


def rule_invariants(a: int, levi_weight: Sequence[int]) -> int:
    """Invariant count by the classical rule for each scheme."""
    if a == 1:
        chi = restricted_weights(restriction_scheme(1), levi_weight)
        return sl2_decomposition(chi).get(0, 0)
    if a == 2:
        n1, n2, n4, n5 = levi_weight
        return int((n4, n5) == (n2, n1))
    if a == 4:
        mu = _gl6_partition(levi_weight)
        return int(all(x % 2 == 0 for x in conjugate(mu))) if any(mu) else 1
    raise UnsupportedCase(f"a={a}")


@dataclass
class InvariantReport:
    a: int
    by_rule: List[int]
    by_constant_term: List[int]

    @property
    def consistent(self) -> bool:
        return self.by_rule == self.by_constant_term


def invariant_dims(a: int, L: Optional[LSequence] = None) -> InvariantReport:
    """Invariant lines in L^{k+1}, k = 0..2a."""
    if a not in (1, 2, 4):
        raise UnsupportedCase(f"a={a}")
    scheme = restriction_scheme(a)
    L = L or identify_interval(make_pair(a))
    rule, ct = [], []
    for k in range(1, 2 * a + 2):
        comps = L.L.get(k, [])
        rule.append(sum(rule_invariants(a, c.levi_weight) for c in comps))
        ct.append(sum(invariants_ct(scheme, c.levi_weight) for c in comps))
    return InvariantReport(a, rule, ct)


def expected_invariant_pattern(a: int, n: int = 2) -> List[int]:
    return [int(k % a == 0) for k in range(a * n + 1)]


def _schur_invariant(a: int, n: int, label) -> int:
    N = u_dim(a, n)
    if a == 1:
        (mu,) = label
        mu = tuple(mu) + (0,) * (N - len(mu))
        return int(all(x % 2 == 0 for x in mu) or (len([x for x in mu if x]) == N and all(x % 2 for x in mu)))
    if a == 2:
        lu, lv = label
        return int(sl_label(lu, N) == sl_label(lv, N))
    (mu,) = label
    return int(all(x % 2 == 0 for x in conjugate(mu)))


def higher_invariants(a: int, n: int) -> List[int]:
    """Invariant lines in L^{k+1} of J_{n+1}, k = 0..an, by the classical rules:
    O(n+1) even-part rule (with det twist for SO), diagonal duality for
    U (x) U^dual, and even-column rule for Sp(2n+2)."""
    if a not in (1, 2, 4) or n < 2 or n > 8:
        raise UnsupportedCase(f"a={a}, n={n}")
    L = L_highrank(a, n)
    return [sum(_schur_invariant(a, n, lab) for lab, _ in L[k + 1]) for k in range(a * n + 1)]


def cartan_splitting_check(a: int, k_max: int = 6) -> bool:
    """dim J^{(k)} = sum_{l<=k} dim J_phi^{(l)}."""
    scheme = restriction_scheme(a)
    pair = make_pair(a)
    full = [0] * pair.ambient.rank
    for i, x in zip(pair.levi_subset, scheme.j_levi):
        full[i - 1] = x
    for k in range(k_max + 1):
        lhs = weyl_dim(pair.ambient, [k * x for x in full], pair.levi_subset)
        rhs = sum(weyl_dim(scheme.target, [l * x for x in scheme.j_phi]) for l in range(k + 1))
        if lhs != rhs:
            return False
    return True


def cartan_splitting_at(a: int, k: int, point) -> bool:
    """Character form of the splitting at one point."""
    scheme = restriction_scheme(a)
    lhs = restricted_char(scheme, tuple(k * x for x in scheme.j_levi), point)
    rhs = sum(char_eval(scheme.target, [l * x for x in scheme.j_phi], point) for l in range(k + 1))
    return lhs == rhs
