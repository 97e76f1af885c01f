"""Simplicial complexes, face numbers, Klee's relations and symmetry checks."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms import isomorphism

from .errors import NonIntegralLinkCount, NonIntegralSolution, NotAnAutomorphism, NotPure
from .exact import Permutation, PermGroup, group_closure, orbits, solve_linear_system

Face = Tuple[int, ...]


class SimplicialComplex:
    """A complex given by its facets on vertices 1..n_vertices."""

    def __init__(self, n_vertices: int, facets: Iterable[Iterable[int]]):
        self.n_vertices = int(n_vertices)
        fs = sorted({tuple(sorted(f)) for f in facets}, key=lambda f: (len(f), f))
        for f in fs:
            if not f or f[0] < 1 or f[-1] > self.n_vertices or len(set(f)) != len(f):
                raise ValueError(f"bad facet {f}")
        sets = [frozenset(f) for f in fs]
        for i, s in enumerate(sets):
            for t in sets[i + 1:]:
                if s < t:
                    raise ValueError(f"facet {sorted(s)} lies in {sorted(t)}")
        self.facets: List[Face] = fs

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1 if self.facets else -1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def faces(self, k: int) -> set:
        """Faces of dimension k."""
        out = set()
        for f in self.facets:
            if len(f) >= k + 1:
                out.update(combinations(f, k + 1))
        return out

    def all_faces(self) -> set:
        out = set()
        for k in range(self.dim + 1):
            out |= self.faces(k)
        return out

    def link(self, v: int) -> "SimplicialComplex":
        fs = [tuple(x for x in f if x != v) for f in self.facets if v in f]
        verts = sorted({x for f in fs for x in f})
        relabel = {x: i + 1 for i, x in enumerate(verts)}
        return SimplicialComplex(len(verts), [[relabel[x] for x in f] for f in fs])

    def permuted(self, p: Permutation) -> "SimplicialComplex":
        return SimplicialComplex(self.n_vertices, [[p(x) for x in f] for f in self.facets])

    def to_text(self) -> str:
        lines = [f"n_vertices={self.n_vertices}"]
        lines += [" ".join(map(str, f)) for f in self.facets]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SimplicialComplex":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not lines or not lines[0].startswith("n_vertices="):
            raise ValueError("missing n_vertices header")
        n = int(lines[0].split("=", 1)[1])
        return cls(n, [[int(x) for x in ln.split()] for ln in lines[1:]])

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.n_vertices == other.n_vertices and self.facets == other.facets

    def __repr__(self):
        return f"SimplicialComplex(n_vertices={self.n_vertices}, facets={len(self.facets)})"


@dataclass(frozen=True)
class FVector:
    d: int
    f: Tuple[int, ...]  # f_{-1}, f_0, ..., f_d

    def __getitem__(self, k: int) -> int:
        return self.f[k + 1]

    def euler(self) -> int:
        return sum((-1) ** k * self[k] for k in range(self.d + 1))


@dataclass(frozen=True)
class HVector:
    h: Tuple[Fraction, ...]


def f_vector(c: SimplicialComplex) -> FVector:
    d = c.dim
    return FVector(d, (1,) + tuple(len(c.faces(k)) for k in range(d + 1)))


def h_from_f(fv: FVector) -> HVector:
    d = fv.d
    f = fv.f
    h = []
    for i in range(d + 2):
        h.append(Fraction(sum((-1) ** (i - j) * comb(d + 1 - j, i - j) * f[j] for j in range(i + 1))))
    return HVector(tuple(h))


def chi_top(a: int) -> int:
    """Euler characteristic of the projective plane over the algebra of dimension a."""
    return 1 if a == 1 else 3


def klee_system(a: int) -> Tuple[List[List[Fraction]], List[Fraction]]:
    """Linear system in f_0..f_{2a}: tight prefix plus Klee's relations."""
    d = 2 * a
    N = 3 * a + 3
    chi = chi_top(a)
    # h_i as a linear form in (f_0..f_d); f_{-1} = 1 moves to the right side
    def h_row(i):
        row = [Fraction(0)] * (d + 1)
        const = Fraction((-1) ** i * comb(d + 1, i))
        for j in range(1, i + 1):
            row[j - 1] += (-1) ** (i - j) * comb(d + 1 - j, i - j)
        return row, const

    A, b = [], []
    for k in range(a + 1):
        row = [Fraction(0)] * (d + 1)
        row[k] = Fraction(1)
        A.append(row)
        b.append(Fraction(comb(N, k + 1)))
    for i in range(d + 2):
        hi, ci = h_row(d + 1 - i)
        lo, cl = h_row(i)
        A.append([x - y for x, y in zip(hi, lo)])
        b.append(Fraction((-1) ** i * comb(d + 1, i) * (chi - 2)) - (ci - cl))
    return A, b


def klee_solve(a: int) -> FVector:
    A, b = klee_system(a)
    x = solve_linear_system(A, b)
    if any(v.denominator != 1 for v in x):
        raise NonIntegralSolution(f"non-integral face numbers {x}")
    return FVector(2 * a, (1,) + tuple(int(v) for v in x))


def link_f_vectors(a: int) -> FVector:
    """Face numbers of a vertex link, assuming vertex transitivity."""
    fv = klee_solve(a)
    N = 3 * a + 3
    out = []
    for j in range(2 * a):
        num = (j + 2) * fv[j + 1]
        if num % N:
            raise NonIntegralLinkCount(f"({j + 2})*f_{j + 1}/{N} is not an integer")
        out.append(num // N)
    return FVector(2 * a - 1, (1,) + tuple(out))


def link_facet_formula(a: int) -> int:
    v = Fraction(3 * a + 2, a + 2) * comb(2 * a + 1, a + 1)
    if v.denominator != 1:
        raise NonIntegralLinkCount(f"{v}")
    return int(v)


def so_vector_power_dim(a: int) -> int:
    """dim of the so(a+4) module with highest weight a times the vector weight."""
    from .lie import build_root_system, weyl_dim

    m = a + 4
    rs = build_root_system("B", m // 2) if m % 2 else build_root_system("D", m // 2)
    mu = [0] * rs.rank
    mu[0] = a
    return weyl_dim(rs, mu)


def h_doubleprime(a: int) -> Tuple[int, ...]:
    half = [comb(a + k + 1, k) for k in range(a + 1)]
    vec = tuple(half + half[-2::-1])
    assert vec == vec[::-1]
    return vec


# ---------------------------------------------------------------------------
# properties of explicit complexes
# ---------------------------------------------------------------------------


@dataclass
class PropertyReport:
    tight: bool
    dual: bool
    defective: bool
    pseudo: bool
    euler: int
    failures: List[str] = field(default_factory=list)


def is_pseudomanifold(c: SimplicialComplex) -> bool:
    if not c.facets or not c.is_pure():
        return False
    ridges = Counter()
    for f in c.facets:
        for r in combinations(f, len(f) - 1):
            ridges[r] += 1
    return all(v == 2 for v in ridges.values())


def check_manifold_properties(c: SimplicialComplex, a: int) -> PropertyReport:
    if not c.is_pure():
        raise NotPure("facets of different sizes")
    N = c.n_vertices
    verts = range(1, N + 1)
    faces = c.all_faces()
    fails = []
    tight = all(s in faces for k in range(1, a + 2) for s in combinations(verts, k))
    if not tight:
        fails.append("tight")
    dual = True
    for size in range(a + 1, 2 * a + 3):
        for s in combinations(verts, size):
            comp = tuple(v for v in verts if v not in s)
            if (s in faces) == (comp in faces):
                dual = False
                break
        if not dual:
            fails.append("dual")
            break
    defective = all(len(set(f) & set(g)) >= a for f, g in combinations(c.facets, 2))
    if not defective:
        fails.append("defective")
    pseudo = is_pseudomanifold(c)
    if not pseudo:
        fails.append("pseudo")
    return PropertyReport(tight, dual, defective, pseudo, f_vector(c).euler(), fails)


# ---------------------------------------------------------------------------
# symmetries
# ---------------------------------------------------------------------------


@dataclass
class AutomorphismReport:
    order: int
    transitive: bool
    facet_orbits: List[List[Face]]
    group: PermGroup


def is_automorphism(c: SimplicialComplex, p: Permutation) -> bool:
    return c.permuted(p).facets == c.facets


def verify_automorphisms(c: SimplicialComplex, gens: Sequence[Permutation], cap: int = 100_000) -> AutomorphismReport:
    for g in gens:
        if len(g.images) != c.n_vertices or not is_automorphism(c, g):
            raise NotAnAutomorphism(f"{g} does not preserve the facets", g)
    if not gens:
        gens = [Permutation(list(range(1, c.n_vertices + 1)))]
    grp = group_closure(list(gens), cap)
    transitive = len(orbits(grp, list(range(1, c.n_vertices + 1)))) == 1
    fo = orbits(grp, [frozenset(f) for f in c.facets])
    fo = [sorted(tuple(sorted(s)) for s in o) for o in fo]
    return AutomorphismReport(grp.order(), transitive, sorted(fo), grp)


def automorphism_group(c: SimplicialComplex) -> List[Permutation]:
    """Every vertex permutation preserving the facet set, found by matching
    the vertex-facet incidence graph with itself."""
    g = nx.Graph()
    for v in range(1, c.n_vertices + 1):
        g.add_node(("v", v), kind="v")
    for f in c.facets:
        g.add_node(("f", f), kind="f")
        for v in f:
            g.add_edge(("v", v), ("f", f))
    gm = isomorphism.GraphMatcher(g, g, node_match=lambda x, y: x["kind"] == y["kind"])
    out = set()
    for m in gm.isomorphisms_iter():
        out.add(Permutation([m[("v", v)][1] for v in range(1, c.n_vertices + 1)]))
    return sorted(out, key=lambda p: p.images)
