"""Graded pieces of the abelian nilradical g_1 of a cominuscule parabolic,
their order ideals, and the Kostant decomposition of its exterior powers."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import OutOfRange, TooLarge, TopNotFound, TopNotUnique, UnsupportedPair
from .lie import RootSystem, build_root_system, dominant_conjugate, levi_dual, weyl_dim

ALGEBRAS = {"R": 1, "C": 2, "H": 4, "O": 8}
_BY_A = {v: k for k, v in ALGEBRAS.items()}


@dataclass
class CominusculePair:
    algebra: str
    a: int
    ambient: RootSystem
    node: int
    levi_subset: Tuple[int, ...]
    n: int = 2

    @property
    def dim_g1(self) -> int:
        return len(build_g1_poset(self).roots)


def _ambient_for(a: int, n: int) -> Tuple[str, int, int]:
    if a == 1:
        return "C", n + 1, n + 1
    if a == 2:
        return "A", 2 * n + 1, n + 1
    if a == 4:
        return "D", 2 * n + 2, 2 * n + 2
    if a == 8 and n == 2:
        return "E", 7, 7
    raise UnsupportedPair(f"a={a}, n={n}")


def make_pair(algebra, n: int = 2) -> CominusculePair:
    """Pair for J_{n+1}(A_C): algebra given as R/C/H/O or as a = 1/2/4/8."""
    if isinstance(algebra, str) and algebra.upper() in ALGEBRAS:
        a = ALGEBRAS[algebra.upper()]
    else:
        try:
            a = int(algebra)
        except (TypeError, ValueError):
            raise UnsupportedPair(str(algebra)) from None
    if a not in _BY_A or n < 1:
        raise UnsupportedPair(f"a={a}, n={n}")
    kind, rank, node = _ambient_for(a, n)
    rs = build_root_system(kind, rank)
    levi = tuple(i for i in range(1, rank + 1) if i != node)
    return CominusculePair(_BY_A[a], a, rs, node, levi, n)


# ---------------------------------------------------------------------------
# the g_1 poset and its ideals
# ---------------------------------------------------------------------------


@dataclass
class G1Poset:
    roots: List[Tuple[int, ...]]
    covers: List[Tuple[int, int]]
    labels: List[int] = field(default_factory=list)

    def __len__(self):
        return len(self.roots)

    def leq(self, i: int, j: int) -> bool:
        return all(x <= y for x, y in zip(self.roots[i], self.roots[j]))

    @property
    def down_masks(self) -> List[int]:
        """Bit mask of the principal lower ideal of each element."""
        cached = getattr(self, "_down", None)
        if cached is None:
            m = len(self.roots)
            cached = [sum(1 << j for j in range(m) if self.leq(j, i)) for i in range(m)]
            self._down = cached
        return cached

    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.roots)))
        g.add_edges_from(self.covers)
        return g


_POSET_CACHE: Dict[Tuple[str, int, int], G1Poset] = {}


def build_g1_poset(pair: CominusculePair) -> G1Poset:
    key = (pair.ambient.type_label, pair.node, pair.ambient.rank)
    if key in _POSET_CACHE:
        return _POSET_CACHE[key]
    i0 = pair.node - 1
    roots = [c for c in pair.ambient.positive_roots if c[i0] == 1]
    if not roots:
        raise UnsupportedPair(f"node {pair.node} not cominuscule")
    if any(c[i0] > 1 for c in pair.ambient.positive_roots):
        raise UnsupportedPair(f"node {pair.node} not cominuscule in {pair.ambient.type_label}")
    index = {c: k for k, c in enumerate(roots)}
    covers = []
    labels = []
    for k, c in enumerate(roots):
        lab = None
        for i in range(len(c)):
            if c[i]:
                d = list(c)
                d[i] -= 1
                d = tuple(d)
                if d in index:
                    covers.append((index[d], k))
                    lab = i + 1 if lab is None else lab
        labels.append(pair.node if lab is None else lab)
    p = G1Poset(roots, sorted(covers), labels)
    _POSET_CACHE[key] = p
    return p


@dataclass(frozen=True)
class IdealElement:
    members: int
    rank: int
    reduced_word: Tuple[int, ...]

    def indices(self) -> List[int]:
        return [i for i in range(self.members.bit_length()) if self.members >> i & 1]

    def __le__(self, other):
        return self.members & ~other.members == 0


def _reduced_word(rs: RootSystem, poset: G1Poset, order: Sequence[int]) -> Tuple[int, ...]:
    """Word s_{i1}...s_{ik} whose inversion set is the given roots, added
    in the given (linear-extension) order."""
    A = rs.cartan_matrix
    r = rs.rank
    word: List[int] = []
    for idx in order:
        beta = list(poset.roots[idx])
        for i in word:
            p = sum(beta[j] * A[j][i - 1] for j in range(r))
            beta[i - 1] -= p
        nz = [j for j, x in enumerate(beta) if x]
        if len(nz) != 1 or beta[nz[0]] != 1:
            raise RuntimeError("ideal is not an inversion set")
        word.append(nz[0] + 1)
    return tuple(word)


_IDEAL_CACHE: Dict[int, List[IdealElement]] = {}


def enumerate_ideals(p: G1Poset, rs: Optional[RootSystem] = None) -> List[IdealElement]:
    """All lower order ideals, sorted by rank then member mask."""
    m = len(p.roots)
    down = p.down_masks
    strict = [d & ~(1 << i) for i, d in enumerate(down)]
    seen = {0}
    layer = [0]
    masks = [0]
    while layer:
        nxt = set()
        for s in layer:
            for i in range(m):
                if not s >> i & 1 and strict[i] & ~s == 0:
                    t = s | (1 << i)
                    if t not in seen:
                        seen.add(t)
                        nxt.add(t)
        layer = sorted(nxt)
        masks += layer
    out = []
    heights = [sum(c) for c in p.roots]
    for s in masks:
        order = sorted((i for i in range(m) if s >> i & 1), key=lambda i: (heights[i], i))
        word = _reduced_word(rs, p, order) if rs is not None else tuple(p.labels[i] for i in order)
        out.append(IdealElement(s, bin(s).count("1"), word))
    return out


def pair_ideals(pair: CominusculePair) -> List[IdealElement]:
    key = id(build_g1_poset(pair))
    if key not in _IDEAL_CACHE:
        _IDEAL_CACHE[key] = enumerate_ideals(build_g1_poset(pair), pair.ambient)
    return _IDEAL_CACHE[key]


# ---------------------------------------------------------------------------
# Kostant components
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KostantComponent:
    ideal: IdealElement
    kostant_weight: Tuple[int, ...]
    levi_weight: Tuple[int, ...]
    central_charge: Fraction
    dim: int

    @property
    def degree(self) -> int:
        return self.ideal.rank


def kostant_component(pair: CominusculePair, v: IdealElement) -> KostantComponent:
    rs = pair.ambient
    poset = build_g1_poset(pair)
    total = [0] * rs.rank
    for i in v.indices():
        for j, x in enumerate(poset.roots[i]):
            total[j] += x
    kw = rs.root_to_weight(total)
    # the raw sum is lowest for the Levi; its W_L-conjugate is the highest weight
    dom, _ = dominant_conjugate(rs, kw, pair.levi_subset)
    levi_w = tuple(dom[i - 1] for i in pair.levi_subset)
    i0 = pair.node - 1
    w0 = [int(j == i0) for j in range(rs.rank)]
    half = rs.gram[i0][i0] / 2
    charge = v.rank * half / rs.inner(w0, w0)
    return KostantComponent(v, kw, levi_w, charge, weyl_dim(rs, dom, pair.levi_subset))


def all_components(pair: CominusculePair) -> List[KostantComponent]:
    return [kostant_component(pair, v) for v in pair_ideals(pair)]


def wedge_decomposition(pair: CominusculePair, k: int) -> List[KostantComponent]:
    n = len(build_g1_poset(pair))
    if not 0 <= k <= n:
        raise OutOfRange(f"k={k} outside 0..{n}")
    return [kostant_component(pair, v) for v in pair_ideals(pair) if v.rank == k]


def levi_restrict(pair: CominusculePair, weight: Sequence) -> Tuple:
    return tuple(weight[i - 1] for i in pair.levi_subset)


def levi_weight_dim(pair: CominusculePair, levi_w: Sequence) -> int:
    full = [0] * pair.ambient.rank
    for i, x in zip(pair.levi_subset, levi_w):
        full[i - 1] = x
    return weyl_dim(pair.ambient, full, pair.levi_subset)


def dual_levi_weight(pair: CominusculePair, levi_w: Sequence) -> Tuple:
    full = [0] * pair.ambient.rank
    for i, x in zip(pair.levi_subset, levi_w):
        full[i - 1] = x
    return levi_dual(pair.ambient, pair.levi_subset, full)


# ---------------------------------------------------------------------------
# the interval I = [s, t] and the graded family L^k
# ---------------------------------------------------------------------------


@dataclass
class LSequence:
    a: int
    pair: CominusculePair
    s: IdealElement
    t: IdealElement
    interval: List[IdealElement]
    L: Dict[int, List[KostantComponent]]

    def dims(self) -> List[int]:
        return [sum(c.dim for c in self.L.get(k, [])) for k in range(1, 2 * self.a + 2)]

    def counts(self) -> List[int]:
        return [len(self.L.get(k, [])) for k in range(1, 2 * self.a + 2)]


def target_levi_weight(pair: CominusculePair) -> Tuple[Fraction, ...]:
    theta = pair.ambient.root_to_weight(pair.ambient.highest_root)
    d = Fraction(pair.a, 2) + 1
    return tuple(d * theta[i - 1] for i in pair.levi_subset)


def identify_interval(pair: CominusculePair) -> LSequence:
    if pair.n != 2:
        raise UnsupportedPair("the interval is defined for rank-2 pairs")
    a = pair.a
    ideals = pair_ideals(pair)
    comps = {v.members: kostant_component(pair, v) for v in ideals}
    ones = [v for v in ideals if v.rank == 1]
    if len(ones) != 1:
        raise TopNotUnique("no unique rank-1 ideal")
    s = ones[0]
    target = target_levi_weight(pair)
    tops = [v for v in ideals if v.rank == 2 * a + 1 and comps[v.members].levi_weight == target]
    if not tops:
        raise TopNotFound(f"no rank-{2 * a + 1} ideal with Levi weight {target}")
    if len(tops) > 1:
        raise TopNotUnique(f"{len(tops)} candidate tops")
    t = tops[0]
    interval = [v for v in ideals if s <= v and v <= t]
    L: Dict[int, List[KostantComponent]] = {}
    for v in interval:
        L.setdefault(v.rank, []).append(comps[v.members])
    return LSequence(a, pair, s, t, interval, L)


def expected_component_count(a: int, k: int) -> int:
    """Number of irreducible pieces of L^{k+1}, with the upper range read as
    a+1 <= k <= 3a/2."""
    h = Fraction(a, 2)
    if 0 <= k <= h - 1 or 3 * h + 1 <= k <= 2 * a:
        return 1
    if h <= k <= a - 1 or a + 1 <= k <= 3 * h:
        return 2
    if k == a:
        return 3
    return 0


@dataclass
class StructureReport:
    a: int
    tightness: bool
    duality: bool
    partition: bool
    counts: Optional[bool]
    edges: bool
    component_counts: List[int]
    dims: List[int]
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def edge_criterion(pair: CominusculePair) -> Tuple[bool, List[str]]:
    """Covers of ideals <=> Kostant weights differing by a root of g_1."""
    rs = pair.ambient
    poset = build_g1_poset(pair)
    g1 = {rs.root_to_weight(c) for c in poset.roots}
    comps = all_components(pair)
    bad = []
    for u in comps:
        for v in comps:
            diff = tuple(x - y for x, y in zip(v.kostant_weight, u.kostant_weight))
            is_cover = v.ideal.rank == u.ideal.rank + 1 and u.ideal <= v.ideal
            if is_cover != (diff in g1):
                bad.append(f"{u.ideal.members:b} -> {v.ideal.members:b}")
    return not bad, bad


def check_structure(pair: CominusculePair) -> StructureReport:
    a = pair.a
    N = 3 * a + 3
    seq = identify_interval(pair)
    ideals = pair_ideals(pair)
    by_rank: Dict[int, List[KostantComponent]] = {}
    for c in all_components(pair):
        by_rank.setdefault(c.degree, []).append(c)
    fails = []

    tight = all(
        Counter(c.levi_weight for c in seq.L.get(k, [])) == Counter(c.levi_weight for c in by_rank.get(k, []))
        for k in range(1, a + 2)
    )
    if not tight:
        fails.append("tightness")

    dual_ok = True
    for k in range(N + 1):
        lhs = Counter(c.levi_weight for c in by_rank.get(k, []))
        rhs = Counter(c.levi_weight for c in seq.L.get(k, []))
        rhs.update(dual_levi_weight(pair, c.levi_weight) for c in seq.L.get(N - k, []))
        if k in (0, N):
            rhs.update([by_rank[k][0].levi_weight])
        if lhs != rhs:
            dual_ok = False
            fails.append(f"duality at k={k}")

    partition = len(seq.interval) * 2 + 2 == len(ideals)
    if not partition:
        fails.append("partition")

    counts_ok = None
    if a != 1:
        counts_ok = all(len(seq.L.get(k + 1, [])) == expected_component_count(a, k) for k in range(0, 2 * a + 1))
        if not counts_ok:
            fails.append("component counts")

    edges_ok, _ = edge_criterion(pair)
    if not edges_ok:
        fails.append("edge criterion")
    return StructureReport(a, tight, dual_ok, partition, counts_ok, edges_ok, seq.counts(), seq.dims(), fails)


# ---------------------------------------------------------------------------
# lattice structure and pictures
# ---------------------------------------------------------------------------


def _order_graph(elements: List[IdealElement]) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(v.members for v in elements)
    for u in elements:
        for v in elements:
            if u.members != v.members and u <= v:
                g.add_edge(u.members, v.members)
    return g


@dataclass
class BirkhoffReport:
    distributive: bool
    join_irreducibles: int
    isomorphic_to_g1: bool
    interval_size: Optional[int]
    isomorphic_to_interval: Optional[bool]


def birkhoff_check(pair: CominusculePair) -> BirkhoffReport:
    poset = build_g1_poset(pair)
    ideals = pair_ideals(pair)
    masks = {v.members for v in ideals}
    distributive = all((u.members & v.members) in masks and (u.members | v.members) in masks for u in ideals for v in ideals)
    lower_covers = Counter()
    for v in ideals:
        for u in ideals:
            if u.rank + 1 == v.rank and u <= v:
                lower_covers[v.members] += 1
    ji = [v for v in ideals if lower_covers[v.members] == 1]
    principal = set(poset.down_masks)
    distributive = distributive and {v.members for v in ji} == principal
    ji_graph = nx.transitive_reduction(_order_graph(ji))
    iso_g1 = nx.is_isomorphic(ji_graph, poset.graph())
    size = iso_i = None
    if pair.n == 2:
        seq = identify_interval(pair)
        size = len(seq.interval)
        iso_i = len(seq.interval) == len(ji) and nx.is_isomorphic(ji_graph, nx.transitive_reduction(_order_graph(seq.interval)))
    return BirkhoffReport(distributive, len(ji), iso_g1, size, iso_i)


def hasse_dot(pair: CominusculePair, highlight: str = "both", limit: int = 10_000) -> str:
    """Graphviz picture of the ideal lattice, one rank per row."""
    if highlight not in ("interval", "dual", "both", "none"):
        raise ValueError(f"unknown highlight {highlight!r}")
    poset = build_g1_poset(pair)
    ideals = pair_ideals(pair)
    if len(ideals) > limit:
        raise TooLarge(f"{len(ideals)} ideals exceed {limit}")
    colour: Dict[int, str] = {}
    if highlight != "none" and pair.n == 2:
        seq = identify_interval(pair)
        inside = {v.members for v in seq.interval}
        ends = {0, (1 << len(poset)) - 1}
        for v in ideals:
            if v.members in ends:
                colour[v.members] = "black"
            elif v.members in inside:
                if highlight in ("interval", "both"):
                    colour[v.members] = "blue"
            elif highlight in ("dual", "both"):
                colour[v.members] = "red"
    name = {v.members: f"v{i}" for i, v in enumerate(ideals)}
    lines = [f'digraph "{pair.algebra}P{pair.n}" {{', "  rankdir=BT;", "  node [shape=point];"]
    ranks: Dict[int, List[str]] = {}
    for v in ideals:
        ranks.setdefault(v.rank, []).append(name[v.members])
        attrs = [f'label="{v.rank}"']
        if v.members in colour:
            attrs.append(f"color={colour[v.members]}")
        lines.append(f"  {name[v.members]} [{', '.join(attrs)}];")
    for r in sorted(ranks):
        lines.append(f"  {{rank=same; {' '.join(ranks[r])};}}")
    for v in ideals:
        for i in v.indices():
            u = v.members & ~(1 << i)
            if u in name:
                lines.append(f"  {name[u]} -> {name[v.members]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def completeness(pair: CominusculePair) -> bool:
    n = len(build_g1_poset(pair))
    tot = Counter()
    for c in all_components(pair):
        tot[c.degree] += c.dim
    return all(tot[k] == comb(n, k) for k in range(n + 1))
