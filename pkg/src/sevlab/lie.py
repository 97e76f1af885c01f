"""Root systems, weights, Weyl groups and characters for types A-F.

Roots are stored by their coefficients on the simple roots; weights by
their coordinates on the fundamental weights. Ambient realisations follow
Bourbaki's tables (trace-zero frame for A_n, epsilon basis for B/C/D, the
E8 frame for E6/E7, R^4 for F4) and are only used to derive the Gram matrix
and for display.
"""

from __future__ import annotations

import os
from collections import deque
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from .errors import (
    BudgetExceeded,
    ClosureCapExceeded,
    NonIntegerResult,
    NotDominant,
    SingularPoint,
    UnsupportedType,
)

Weight = Tuple[int, ...]
RootVec = Tuple[int, ...]

WEYL_CAP = 60_000
DEFAULT_BUDGET = 20_000_000

_H = Fraction(1, 2)


def _e(n: int, *entries) -> Tuple[Fraction, ...]:
    v = [Fraction(0)] * n
    for idx, c in entries:
        v[idx - 1] += Fraction(c)
    return tuple(v)


def _ambient_simple_roots(kind: str, rank: int) -> List[Tuple[Fraction, ...]]:
    if kind == "A":
        if rank < 1:
            raise UnsupportedType(f"A{rank}")
        n = rank + 1
        return [_e(n, (i, 1), (i + 1, -1)) for i in range(1, rank + 1)]
    if kind in "BCD":
        lo = {"B": 2, "C": 2, "D": 3}[kind]
        if rank < lo:
            raise UnsupportedType(f"{kind}{rank}")
        n = rank
        roots = [_e(n, (i, 1), (i + 1, -1)) for i in range(1, rank)]
        if kind == "B":
            roots.append(_e(n, (n, 1)))
        elif kind == "C":
            roots.append(_e(n, (n, 2)))
        else:
            roots.append(_e(n, (n - 1, 1), (n, 1)))
        return roots
    if kind == "E" and rank in (6, 7):
        a1 = _e(8, (1, _H), (8, _H), *[(j, -_H) for j in range(2, 8)])
        roots = [a1, _e(8, (1, 1), (2, 1)), _e(8, (2, 1), (1, -1))]
        for i in range(4, rank + 1):
            roots.append(_e(8, (i - 1, 1), (i - 2, -1)))
        return roots
    if kind == "F" and rank == 4:
        return [
            _e(4, (2, 1), (3, -1)),
            _e(4, (3, 1), (4, -1)),
            _e(4, (4, 1)),
            _e(4, (1, _H), (2, -_H), (3, -_H), (4, -_H)),
        ]
    raise UnsupportedType(f"{kind}{rank}")


def _dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


class RootSystem:
    """Root datum of a (possibly reducible) root system given by a Gram matrix
    of simple roots. Nodes are numbered 1..rank in the public API."""

    def __init__(self, label: str, gram: Sequence[Sequence[Fraction]], simple_roots=None):
        self.type_label = label
        self.gram = [[Fraction(x) for x in row] for row in gram]
        self.rank = len(self.gram)
        r = self.rank
        # cartan[i][j] = <alpha_i, alpha_j^vee>; row i is alpha_i in fundamental coordinates
        self.cartan_matrix = [
            [int(2 * self.gram[i][j] / self.gram[j][j]) for j in range(r)] for i in range(r)
        ]
        for i in range(r):
            for j in range(r):
                if 2 * self.gram[i][j] / self.gram[j][j] != self.cartan_matrix[i][j]:
                    raise UnsupportedType("non-crystallographic Gram matrix")
        self.simple_roots = simple_roots
        self._half_norm = [self.gram[i][i] / 2 for i in range(r)]

    # -- roots -------------------------------------------------------------

    @cached_property
    def positive_roots(self) -> List[RootVec]:
        """Positive roots (simple-root coefficients), by height then lexicographically."""
        r = self.rank
        A = self.cartan_matrix
        simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        roots = set(simple)
        layer = list(simple)
        while layer:
            nxt = set()
            for beta in layer:
                for i in range(r):
                    p = 0
                    b = list(beta)
                    while True:
                        b[i] -= 1
                        if tuple(b) in roots:
                            p += 1
                        else:
                            break
                    pair = sum(beta[j] * A[j][i] for j in range(r))
                    if p - pair > 0:
                        up = list(beta)
                        up[i] += 1
                        nxt.add(tuple(up))
            nxt -= roots
            roots |= nxt
            layer = sorted(nxt)
        return sorted(roots, key=lambda c: (sum(c), c))

    @cached_property
    def highest_root(self) -> RootVec:
        if len(self.components()) != 1:
            raise ValueError("highest root needs an irreducible system")
        return max(self.positive_roots, key=sum)

    def root_norm(self, c: RootVec) -> Fraction:
        g = self.gram
        r = self.rank
        return sum((c[i] * c[j] * g[i][j] for i in range(r) for j in range(r) if c[i] and c[j]), Fraction(0))

    def root_to_weight(self, c: Sequence[int]) -> Weight:
        A = self.cartan_matrix
        r = self.rank
        return tuple(sum(c[i] * A[i][j] for i in range(r)) for j in range(r))

    def pairing(self, lam: Sequence, c: RootVec) -> Fraction:
        """<lam, beta^vee> for a weight in fundamental coordinates and a root."""
        num = sum((Fraction(c[i]) * lam[i] * self._half_norm[i] for i in range(self.rank) if c[i]), Fraction(0))
        return 2 * num / self.root_norm(c)

    @cached_property
    def coroots(self) -> List[Tuple[Fraction, ...]]:
        """Positive coroots in simple-coroot coefficients."""
        out = []
        for c in self.positive_roots:
            n = self.root_norm(c)
            out.append(tuple(Fraction(c[i]) * self.gram[i][i] / n for i in range(self.rank)))
        return out

    @cached_property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @cached_property
    def fundamental_weights(self) -> List[Tuple[Fraction, ...]]:
        """Fundamental weights in the ambient frame (rationals)."""
        if self.simple_roots is None:
            raise ValueError("no ambient realisation")
        X = self.inverse_cartan
        dim = len(self.simple_roots[0])
        return [
            tuple(sum((X[i][k] * self.simple_roots[k][t] for k in range(self.rank)), Fraction(0)) for t in range(dim))
            for i in range(self.rank)
        ]

    @cached_property
    def inverse_cartan(self) -> List[List[Fraction]]:
        """X with X @ cartan = I, so fundamental weight i = sum_k X[i][k] alpha_k."""
        r = self.rank
        # solve X A = I  <=>  A^T X^T = I
        M = [[Fraction(self.cartan_matrix[j][i]) for j in range(r)] + [Fraction(int(i == j)) for j in range(r)] for i in range(r)]
        for c in range(r):
            p = next(i for i in range(c, r) if M[i][c])
            M[c], M[p] = M[p], M[c]
            inv = 1 / M[c][c]
            M[c] = [x * inv for x in M[c]]
            for i in range(r):
                if i != c and M[i][c]:
                    f = M[i][c]
                    M[i] = [x - f * y for x, y in zip(M[i], M[c])]
        XT = [row[r:] for row in M]
        return [[XT[j][i] for j in range(r)] for i in range(r)]

    @cached_property
    def weight_gram(self) -> List[List[Fraction]]:
        """(varpi_i, varpi_j)."""
        X = self.inverse_cartan
        return [[X[i][j] * self._half_norm[j] for j in range(self.rank)] for i in range(self.rank)]

    def inner(self, lam: Sequence, mu: Sequence) -> Fraction:
        G = self.weight_gram
        r = self.rank
        return sum((Fraction(lam[i]) * mu[j] * G[i][j] for i in range(r) if lam[i] for j in range(r) if mu[j]), Fraction(0))

    def root_of_weight(self, lam: Sequence) -> Tuple[Fraction, ...]:
        """Simple-root coefficients of a weight given in fundamental coordinates."""
        X = self.inverse_cartan
        r = self.rank
        return tuple(sum((Fraction(lam[i]) * X[i][k] for i in range(r)), Fraction(0)) for k in range(r))

    # -- subsystems --------------------------------------------------------

    def sub(self, nodes: Iterable[int], label: str | None = None) -> "RootSystem":
        """Root subsystem spanned by the given simple roots (1-based nodes)."""
        nodes = sorted(nodes)
        gram = [[self.gram[i - 1][j - 1] for j in nodes] for i in nodes]
        simple = [self.simple_roots[i - 1] for i in nodes] if self.simple_roots else None
        return RootSystem(label or f"{self.type_label}[{','.join(map(str, nodes))}]", gram, simple)

    def components(self) -> List[List[int]]:
        """Connected components of the Dynkin diagram (1-based)."""
        r = self.rank
        seen = set()
        comps = []
        for s in range(r):
            if s in seen:
                continue
            comp = []
            stack = [s]
            seen.add(s)
            while stack:
                i = stack.pop()
                comp.append(i + 1)
                for j in range(r):
                    if j not in seen and self.cartan_matrix[i][j]:
                        seen.add(j)
                        stack.append(j)
            comps.append(sorted(comp))
        return comps

    # -- Weyl group --------------------------------------------------------

    def reflect(self, lam: Sequence, i: int) -> tuple:
        """Simple reflection s_i (1-based) on fundamental coordinates."""
        row = self.cartan_matrix[i - 1]
        c = lam[i - 1]
        return tuple(x - c * a for x, a in zip(lam, row))

    @cached_property
    def exponents(self) -> List[int]:
        heights: Dict[int, int] = {}
        for c in self.positive_roots:
            h = sum(c)
            heights[h] = heights.get(h, 0) + 1
        out = []
        for k in range(1, max(heights, default=0) + 1):
            cnt = heights.get(k, 0)
            nxt = heights.get(k + 1, 0)
            out += [k] * (cnt - nxt)
        out += [0] * (self.rank - len(out))
        return sorted(out)

    @cached_property
    def weyl_order(self) -> int:
        n = 1
        for m in self.exponents:
            n *= m + 1
        return n

    def weyl_matrices(self, cap: int = WEYL_CAP) -> Tuple[np.ndarray, np.ndarray]:
        """All Weyl group elements as integer matrices on fundamental
        coordinates (column convention), with their signs det(w)."""
        if self.weyl_order > cap:
            raise ClosureCapExceeded(f"|W({self.type_label})| = {self.weyl_order} exceeds cap {cap}")
        key = "_weyl_cache"
        cached = self.__dict__.get(key)
        if cached is not None:
            return cached
        r = self.rank
        gens = []
        for i in range(r):
            M = np.eye(r, dtype=np.int64)
            M[:, i] -= np.array(self.cartan_matrix[i], dtype=np.int64)
            gens.append(M)
        rho = np.ones(r, dtype=np.int64)
        e = np.eye(r, dtype=np.int64)
        seen = {tuple(rho): 0}
        mats = [e]
        signs = [1]
        queue = deque([0])
        while queue:
            idx = queue.popleft()
            w = mats[idx]
            for g in gens:
                m = g @ w
                k = tuple(m @ rho)
                if k not in seen:
                    seen[k] = len(mats)
                    mats.append(m)
                    signs.append(-signs[idx])
                    queue.append(len(mats) - 1)
        out = (np.stack(mats), np.array(signs, dtype=np.int64))
        if len(mats) != self.weyl_order:
            raise RuntimeError("Weyl closure size disagrees with exponent formula")
        self.__dict__[key] = out
        return out

    def __repr__(self):
        return f"RootSystem({self.type_label}, rank={self.rank})"


def build_root_system(type_label: str, rank: int | None = None) -> RootSystem:
    """Root system of type A_n, B_n, C_n, D_n, E6, E7 or F4 (Bourbaki numbering)."""
    label = str(type_label).strip().upper()
    if rank is None:
        kind, rank = label[0], int(label[1:])
    else:
        kind = label[0]
        if len(label) > 1 and int(label[1:]) != rank:
            raise UnsupportedType(f"{type_label} with rank {rank}")
    roots = _ambient_simple_roots(kind, int(rank))
    gram = [[_dot(a, b) for b in roots] for a in roots]
    return RootSystem(f"{kind}{rank}", gram, roots)


def product_system(*systems: RootSystem) -> RootSystem:
    r = sum(s.rank for s in systems)
    gram = [[Fraction(0)] * r for _ in range(r)]
    off = 0
    for s in systems:
        for i in range(s.rank):
            for j in range(s.rank):
                gram[off + i][off + j] = s.gram[i][j]
        off += s.rank
    return RootSystem("x".join(s.type_label for s in systems), gram)


# ---------------------------------------------------------------------------
# dimensions and duality
# ---------------------------------------------------------------------------


def _levi_roots(rs: RootSystem, levi: Iterable[int] | None) -> List[RootVec]:
    if levi is None:
        return rs.positive_roots
    allowed = {i - 1 for i in levi}
    return [c for c in rs.positive_roots if all(i in allowed for i, x in enumerate(c) if x)]


def weyl_dim(rs: RootSystem, mu: Sequence, levi_subset: Iterable[int] | None = None) -> int:
    """Dimension of the irreducible (Levi) module of highest weight ``mu``."""
    nodes = range(1, rs.rank + 1) if levi_subset is None else list(levi_subset)
    for i in nodes:
        if mu[i - 1] < 0:
            raise NotDominant(f"weight {tuple(mu)} has negative label at node {i}")
    num = Fraction(1)
    for c in _levi_roots(rs, levi_subset):
        lam_rho = [Fraction(m) + 1 for m in mu]
        num *= rs.pairing(lam_rho, c) / rs.pairing(rs.rho, c)
    if num.denominator != 1:
        raise NonIntegerResult(f"Weyl dimension {num} is not an integer")
    return int(num)


def dominant_conjugate(rs: RootSystem, lam: Sequence, nodes: Iterable[int] | None = None) -> Tuple[tuple, int]:
    """Dominant element of the W_J-orbit of ``lam`` and the number of
    reflections used, for the parabolic subgroup on ``nodes``."""
    nodes = list(range(1, rs.rank + 1)) if nodes is None else list(nodes)
    lam = tuple(lam)
    steps = 0
    while True:
        for i in nodes:
            if lam[i - 1] < 0:
                lam = rs.reflect(lam, i)
                steps += 1
                break
        else:
            return lam, steps


def levi_dual(rs: RootSystem, levi_subset: Iterable[int] | None, mu: Sequence) -> tuple:
    """Highest weight (Levi coordinates kept in place) of the dual of the Levi
    module with highest weight ``mu``: the dominant conjugate of -mu, i.e.
    -w0(mu), which on each factor is the diagram involution."""
    nodes = list(range(1, rs.rank + 1)) if levi_subset is None else sorted(levi_subset)
    for i in nodes:
        if mu[i - 1] < 0:
            raise NotDominant(f"weight {tuple(mu)} not dominant on the Levi")
    neg = tuple(-x for x in mu)
    dom, _ = dominant_conjugate(rs, neg, nodes)
    return tuple(dom[i - 1] for i in nodes)


def weyl_group_elements(rs: RootSystem, cap: int = WEYL_CAP) -> List[np.ndarray]:
    mats, _ = rs.weyl_matrices(cap)
    return list(mats)


# ---------------------------------------------------------------------------
# characters
# ---------------------------------------------------------------------------


def alternant(rs: RootSystem, lam: Sequence[int], projection=None) -> Dict[tuple, int]:
    """sum_w det(w) e^{w(lam)}, merged by exponent. ``projection`` (an integer
    matrix) pushes exponents to a subtorus before merging."""
    mats, signs = rs.weyl_matrices()
    v = np.array([int(x) for x in lam], dtype=np.int64)
    exps = mats @ v
    if projection is not None:
        exps = exps @ np.asarray(projection, dtype=np.int64).T
    uniq, inv = np.unique(exps, axis=0, return_inverse=True)
    coeffs = np.zeros(len(uniq), dtype=np.int64)
    np.add.at(coeffs, inv.ravel(), signs)
    return {tuple(int(x) for x in uniq[i]): int(coeffs[i]) for i in range(len(uniq)) if coeffs[i]}


def eval_terms(terms: Dict[tuple, int], point: Sequence[Fraction]) -> Fraction:
    """Exact value of sum c * z^e using integer arithmetic throughout."""
    if not terms:
        return Fraction(0)
    point = [Fraction(z) for z in point]
    if any(z == 0 for z in point):
        raise SingularPoint("torus coordinates must be nonzero")
    r = len(point)
    lo = [min(e[i] for e in terms) for i in range(r)]
    hi = [max(e[i] for e in terms) for i in range(r)]
    nums = [abs(z.numerator) for z in point]
    dens = [z.denominator for z in point]
    sgn = [1 if z > 0 else -1 for z in point]
    pow_n = [[nums[i] ** k for k in range(hi[i] - lo[i] + 1)] for i in range(r)]
    pow_d = [[dens[i] ** k for k in range(hi[i] - lo[i] + 1)] for i in range(r)]
    total = 0
    for e, c in terms.items():
        t = c
        for i in range(r):
            k = e[i] - lo[i]
            t *= pow_n[i][k] * pow_d[i][hi[i] - lo[i] - k]
            if sgn[i] < 0 and e[i] % 2:
                t = -t
        total += t
    # each term carried an extra factor n^{-lo} d^{hi}
    scale = Fraction(1)
    for i in range(r):
        scale *= Fraction(nums[i]) ** lo[i] / Fraction(dens[i]) ** hi[i]
    return total * scale


def char_eval(rs: RootSystem, mu: Sequence[int], point: Sequence, projection=None) -> Fraction:
    """Character of V_mu at a torus point via the Weyl character formula.

    ``point`` gives e^{varpi_i} for each fundamental weight; with
    ``projection`` it lives on the subtorus where e^{lam} is evaluated at
    exponent ``projection @ lam``.
    """
    lam = [int(m) + 1 for m in mu]
    num = alternant(rs, lam, projection)
    den = alternant(rs, rs.rho, projection)
    d = eval_terms(den, point)
    if d == 0:
        raise SingularPoint(f"Weyl denominator vanishes at {list(point)}")
    return eval_terms(num, point) / d


def a_type_point(eigenvalues: Sequence) -> List[Fraction]:
    """Fundamental-torus coordinates e^{varpi_i} = x_1...x_i from the
    eigenvalues of an SL(n) torus element (their product must be 1)."""
    xs = [Fraction(x) for x in eigenvalues]
    prod = Fraction(1)
    for x in xs:
        prod *= x
    if prod != 1:
        raise ValueError("eigenvalues of an SL torus element must multiply to 1")
    out = []
    acc = Fraction(1)
    for x in xs[:-1]:
        acc *= x
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# weight multiplicities
# ---------------------------------------------------------------------------


class WeightSystem:
    """Dominant weights of V_highest with multiplicities and orbit sizes."""

    def __init__(self, rs: RootSystem, highest: Weight, multiplicities: Dict[Weight, int], orbit_sizes: Dict[Weight, int]):
        self.rs = rs
        self.highest = highest
        self.multiplicities = multiplicities
        self.orbit_sizes = orbit_sizes

    @property
    def dim(self) -> int:
        return sum(m * self.orbit_sizes[w] for w, m in self.multiplicities.items())

    def all_weights(self) -> Dict[Weight, int]:
        out = {}
        for w, m in self.multiplicities.items():
            for v in weyl_orbit(self.rs, w):
                out[v] = m
        return out


def weyl_orbit(rs: RootSystem, lam: Sequence[int]) -> List[Weight]:
    start = tuple(int(x) for x in lam)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for i in range(1, rs.rank + 1):
            if v[i - 1]:
                w = rs.reflect(v, i)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return sorted(seen)


def _budget() -> int:
    return int(os.environ.get("SEVLAB_BUDGET", DEFAULT_BUDGET))


def freudenthal_weights(rs: RootSystem, mu: Sequence[int], budget: int | None = None) -> WeightSystem:
    """Weight multiplicities of V_mu by Freudenthal's recursion."""
    mu = tuple(int(x) for x in mu)
    if any(x < 0 for x in mu):
        raise NotDominant(f"{mu} is not dominant")
    budget = _budget() if budget is None else budget
    dim = weyl_dim(rs, mu)
    if dim > budget:
        raise BudgetExceeded(f"dim V_{mu} = {dim} exceeds budget {budget}")
    pos = [rs.root_to_weight(c) for c in rs.positive_roots]
    # dominant weights below mu: chains of dominant weights differing by positive roots
    dom = {mu}
    stack = [mu]
    while stack:
        lam = stack.pop()
        for a in pos:
            nu = tuple(x - y for x, y in zip(lam, a))
            if all(x >= 0 for x in nu) and nu not in dom:
                dom.add(nu)
                stack.append(nu)
    depth = {w: sum(rs.root_of_weight(tuple(m - x for m, x in zip(mu, w)))) for w in dom}
    order = sorted(dom, key=lambda w: (depth[w], w))
    rho = rs.rho
    mr = tuple(m + r for m, r in zip(mu, rho))
    top = rs.inner(mr, mr)
    mult: Dict[Weight, int] = {}
    for w in order:
        if w == mu:
            mult[w] = 1
            continue
        s = Fraction(0)
        for a in pos:
            k = 1
            while True:
                v = tuple(x + k * y for x, y in zip(w, a))
                d, _ = dominant_conjugate(rs, v)
                m = mult.get(d, 0) if d in dom else 0
                if not m:
                    break
                s += m * rs.inner(v, a)
                k += 1
        wr = tuple(x + r for x, r in zip(w, rho))
        val = 2 * s / (top - rs.inner(wr, wr))
        if val.denominator != 1:
            raise NonIntegerResult(f"multiplicity {val} at {w}")
        if val:
            mult[w] = int(val)
    orbit_sizes = {w: len(weyl_orbit(rs, w)) for w in mult}
    ws = WeightSystem(rs, mu, mult, orbit_sizes)
    if ws.dim != dim:
        raise NonIntegerResult(f"Freudenthal dimension {ws.dim} != Weyl dimension {dim}")
    return ws
