"""Exterior powers of small GL-modules in explicit weight bases.

Three models are provided: S^2 C^3 (a=1), C^3 (x) C^3 (a=2) and
wedge^2 C^6 (for the quaternionic data). Basis vectors are labelled by
index strings such as "12"; wedge monomials are sorted tuples of basis
positions, and vectors are sparse dicts monomial -> Fraction.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import (
    DimensionMismatch,
    MultiplicityNotFree,
    NotHighestWeight,
    SelectionAmbiguous,
    SelectionMissing,
)
from .exact import Echelon, Permutation, orbits
from .lie import build_root_system, weyl_dim
from .simplicial import SimplicialComplex, is_pseudomanifold

Mono = Tuple[int, ...]
Vec = Dict[Mono, Fraction]


def _sort_sign(seq: Sequence[int]) -> Tuple[int, Optional[Tuple[int, ...]]]:
    """Sign of the sorting permutation and the sorted tuple (None on repeats)."""
    s = list(seq)
    if len(set(s)) != len(s):
        return 0, None
    sign = 1
    for i in range(len(s)):
        for j in range(len(s) - 1 - i):
            if s[j] > s[j + 1]:
                s[j], s[j + 1] = s[j + 1], s[j]
                sign = -sign
    return sign, tuple(s)


def _add(out: Vec, key: Mono, c) -> None:
    v = out.get(key, 0) + c
    if v:
        out[key] = Fraction(v)
    else:
        out.pop(key, None)


class GLModel:
    """A module V of a product of general linear groups with a weight basis.

    Each basis label is a tuple of letters (factor, index). The kind fixes
    how letters recombine: "sym" (commuting), "alt" (anticommuting) or
    "tensor" (one letter per factor).
    """

    def __init__(self, name: str, kind: str, gl_sizes: Sequence[int], letters: List[Tuple[Tuple[int, int], ...]]):
        self.name = name
        self.kind = kind
        self.gl_sizes = tuple(gl_sizes)
        self.letters = letters
        self.labels = ["".join(str(i) for _, i in lt) for lt in letters]
        self.index = {lt: k for k, lt in enumerate(letters)}
        self.label_index = {lab: k for k, lab in enumerate(self.labels)}
        self.weights = [self._weight(lt) for lt in letters]
        self._ops: Dict[Tuple[int, int, int], Dict[int, Dict[int, int]]] = {}

    @property
    def dim(self) -> int:
        return len(self.labels)

    def _weight(self, lt) -> Tuple[int, ...]:
        w = []
        for f, n in enumerate(self.gl_sizes):
            w += [sum(1 for g, i in lt if g == f and i == k) for k in range(1, n + 1)]
        return tuple(w)

    def _canon(self, lt) -> Tuple[int, Optional[tuple]]:
        if self.kind == "sym":
            return 1, tuple(sorted(lt))
        if self.kind == "alt":
            idx = [i for _, i in lt]
            s, srt = _sort_sign(idx)
            if not s:
                return 0, None
            return s, tuple((lt[0][0], i) for i in srt)
        return 1, tuple(lt)

    def gl_op(self, factor: int, a: int, b: int) -> Dict[int, Dict[int, int]]:
        """Matrix of E_ab (u_b -> u_a) on V, acting on letters as a derivation."""
        key = (factor, a, b)
        if key not in self._ops:
            m: Dict[int, Dict[int, int]] = {}
            for k, lt in enumerate(self.letters):
                col: Dict[int, int] = {}
                for p, (f, i) in enumerate(lt):
                    if f == factor and i == b:
                        new = list(lt)
                        new[p] = (f, a)
                        s, c = self._canon(new)
                        if s:
                            j = self.index[c]
                            col[j] = col.get(j, 0) + s
                col = {j: c for j, c in col.items() if c}
                if col:
                    m[k] = col
            self._ops[key] = m
        return self._ops[key]

    def raising(self) -> List[Tuple[int, int, int]]:
        return [(f, i, i + 1) for f, n in enumerate(self.gl_sizes) for i in range(1, n)]

    def lowering(self) -> List[Tuple[int, int, int]]:
        return [(f, i + 1, i) for f, n in enumerate(self.gl_sizes) for i in range(1, n)]

    # -- wedge monomials -----------------------------------------------------

    def mono(self, text: str) -> Vec:
        """Parse "(11)(12)(13)" in the written factor order into a signed vector."""
        labs = re.findall(r"\(([^)]*)\)", text)
        idx = [self.label_index[x] for x in labs]
        s, srt = _sort_sign(idx)
        return {srt: Fraction(s)} if s else {}

    def parse(self, text: str) -> Vec:
        """Parse sums like "(11)(22)(33)+2(12)(23)(13)"."""
        out: Vec = {}
        for coef, body in re.findall(r"([+-]?\s*\d*)\s*((?:\([^)]*\))+)", text):
            c = coef.replace(" ", "")
            c = 1 if c in ("", "+") else -1 if c == "-" else int(c)
            for m, v in self.mono(body).items():
                _add(out, m, c * v)
        return out

    def show(self, m: Mono) -> str:
        return "".join(f"({self.labels[i]})" for i in m)

    def weight(self, m: Mono) -> Tuple[int, ...]:
        w = [0] * len(self.weights[0])
        for i in m:
            for t, x in enumerate(self.weights[i]):
                w[t] += x
        return tuple(w)

    def vec_weight(self, v: Vec) -> Tuple[int, ...]:
        ws = {self.weight(m) for m in v}
        if len(ws) != 1:
            raise ValueError("not a weight vector")
        return ws.pop()

    def apply(self, op: Tuple[int, int, int], v: Vec) -> Vec:
        """Leibniz action of E_ab on a wedge vector."""
        mat = self.gl_op(*op)
        out: Vec = {}
        for m, c in v.items():
            for p, i in enumerate(m):
                col = mat.get(i)
                if not col:
                    continue
                for j, x in col.items():
                    new = m[:p] + (j,) + m[p + 1:]
                    s, srt = _sort_sign(new)
                    if s:
                        _add(out, srt, c * x * s)
        return out

    def lowering_op(self, op_index: int, v: Vec) -> Vec:
        return self.apply(self.lowering()[op_index], v)

    def split_weight(self, w: Sequence[int]) -> List[Tuple[int, ...]]:
        out, pos = [], 0
        for n in self.gl_sizes:
            out.append(tuple(w[pos:pos + n]))
            pos += n
        return out

    def gl_dim(self, w: Sequence[int]) -> int:
        """Dimension of the irreducible module of GL highest weight w."""
        d = 1
        for part in self.split_weight(w):
            if any(x < y for x, y in zip(part, part[1:])):
                raise NotHighestWeight(f"{part} is not dominant")
            if len(part) == 1:
                continue
            rs = build_root_system("A", len(part) - 1)
            d *= weyl_dim(rs, [x - y for x, y in zip(part, part[1:])])
        return d


def sym_square(n: int = 3) -> GLModel:
    lts = [((0, i), (0, j)) for i in range(1, n + 1) for j in range(i, n + 1)]
    return GLModel(f"S2C{n}", "sym", [n], lts)


def tensor_model(n: int = 3, m: int = 3) -> GLModel:
    lts = [((0, i), (1, j)) for i in range(1, n + 1) for j in range(1, m + 1)]
    return GLModel(f"C{n}xC{m}", "tensor", [n, m], lts)


def alt_square(n: int = 6) -> GLModel:
    lts = [((0, i), (0, j)) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return GLModel(f"L2C{n}", "alt", [n], lts)


def model_for(a: int) -> GLModel:
    if a == 1:
        return sym_square(3)
    if a == 2:
        return tensor_model(3, 3)
    if a == 4:
        return alt_square(6)
    raise ValueError(f"no wedge model for a={a}")


# ---------------------------------------------------------------------------
# module generation
# ---------------------------------------------------------------------------


def is_highest(model: GLModel, v: Vec) -> bool:
    return bool(v) and all(not model.apply(op, v) for op in model.raising())


@dataclass
class ModuleSpan:
    model: GLModel
    degree: int
    highest: Vec
    by_weight: Dict[Tuple[int, ...], List[Vec]]

    @property
    def dim(self) -> int:
        return sum(len(b) for b in self.by_weight.values())

    @property
    def basis(self) -> List[Vec]:
        return [v for w in sorted(self.by_weight) for v in self.by_weight[w]]

    def multiplicity_free(self) -> bool:
        return all(len(b) == 1 for b in self.by_weight.values())


def generate_module(model: GLModel, highest: Vec, expected_dim: Optional[int] = None) -> ModuleSpan:
    """Span of all lowering-operator images of a highest weight vector."""
    if not highest:
        raise NotHighestWeight("zero vector")
    if not is_highest(model, highest):
        raise NotHighestWeight("vector is not killed by the raising operators")
    hw = model.vec_weight(highest)
    degree = len(next(iter(highest)))
    ech: Dict[Tuple[int, ...], Echelon] = defaultdict(Echelon)
    by_weight: Dict[Tuple[int, ...], List[Vec]] = defaultdict(list)
    ech[hw].add(highest)
    by_weight[hw].append(dict(highest))
    queue = [highest]
    lows = model.lowering()
    while queue:
        nxt = []
        for v in queue:
            for op in lows:
                u = model.apply(op, v)
                if not u:
                    continue
                w = model.vec_weight(u)
                if ech[w].add(u):
                    by_weight[w].append(u)
                    nxt.append(u)
        queue = nxt
    span = ModuleSpan(model, degree, dict(highest), dict(by_weight))
    want = model.gl_dim(hw) if expected_dim is None else expected_dim
    if span.dim != want:
        raise DimensionMismatch(f"generated {span.dim}, expected {want}")
    return span


def normalize(v: Vec) -> Vec:
    """Scale so the smallest coefficient in absolute value becomes +1."""
    if not v:
        return {}
    key = min(sorted(v), key=lambda m: abs(v[m]))
    c = v[key]
    return {m: x / c for m, x in v.items()}


def proportional(u: Vec, v: Vec) -> bool:
    if set(u) != set(v):
        return False
    if not u:
        return True
    m = next(iter(u))
    r = u[m] / v[m]
    return all(u[k] == r * v[k] for k in u)


def diagram_supports(span: ModuleSpan) -> List[Tuple[Tuple[int, ...], Vec]]:
    if not span.multiplicity_free():
        raise MultiplicityNotFree("some weight space of the span has dimension > 1")
    return [(w, normalize(span.by_weight[w][0])) for w in sorted(span.by_weight, reverse=True)]


# ---------------------------------------------------------------------------
# the a=1 diagram and its bold terms
# ---------------------------------------------------------------------------

RP2_DIAGRAM = [
    ("(11)(12)(13)", "(11)(12)(13)"),
    ("(11)(12)(23)+(11)(22)(13)", "(11)(22)(13)"),
    ("(11)(22)(23)+(12)(22)(13)", "(11)(22)(23)"),
    ("(11)(12)(33)+(11)(23)(13)", "(11)(12)(33)"),
    ("(12)(22)(23)", "(12)(22)(23)"),
    ("(11)(22)(33)+2(12)(23)(13)", "(12)(23)(13)"),
    ("(13)(22)(23)+(12)(22)(33)", "(12)(22)(33)"),
    ("(11)(23)(33)+(12)(33)(13)", "(11)(23)(33)"),
    ("(12)(23)(33)+(13)(22)(33)", "(13)(22)(33)"),
    ("(13)(23)(33)", "(13)(23)(33)"),
]


def l3_span() -> ModuleSpan:
    m = sym_square(3)
    return generate_module(m, m.mono("(11)(12)(13)"))


@dataclass
class DiagramReport:
    matched: int
    proportional: int
    exact_sign: int
    coefficient_two: bool
    mismatches: List[str] = field(default_factory=list)


def compare_rp2_diagram(span: ModuleSpan) -> DiagramReport:
    """Match each transcribed vector with the computed weight vector of its weight."""
    m = span.model
    sup = dict(diagram_supports(span))
    matched = prop = exact = 0
    two = False
    bad = []
    for text, _ in RP2_DIAGRAM:
        v = m.parse(text)
        w = m.vec_weight(v)
        if w not in sup:
            bad.append(f"{text}: weight {w} absent")
            continue
        matched += 1
        u = sup[w]
        if set(u) != set(v):
            bad.append(f"{text}: support differs")
            continue
        ratios = sorted({abs(x) for x in u.values()})
        if ratios == [1, 2]:
            two = True
        if proportional(u, v):
            prop += 1
            if normalize(v) == u:
                exact += 1
        else:
            bad.append(f"{text}: coefficients differ up to sign")
    return DiagramReport(matched, prop, exact, two, bad)


def mono_vertices(model: GLModel, m: Mono, vertex_of: Dict[str, int]) -> Tuple[int, ...]:
    return tuple(sorted(vertex_of[model.labels[i]] for i in m))


def bold_selection(span: ModuleSpan, complex_: SimplicialComplex, vertex_of: Optional[Dict[str, int]] = None) -> Dict[Tuple[int, ...], Mono]:
    """For each weight vector, the unique support monomial that is a facet."""
    m = span.model
    if vertex_of is None:
        vertex_of = {lab: k + 1 for k, lab in enumerate(m.labels)}
    facets = set(complex_.facets)
    out = {}
    for w, v in diagram_supports(span):
        hits = [x for x in sorted(v) if mono_vertices(m, x, vertex_of) in facets]
        if not hits:
            raise SelectionMissing(f"no facet in the support at weight {w}")
        if len(hits) > 1:
            raise SelectionAmbiguous(f"{len(hits)} facets at weight {w}")
        out[w] = hits[0]
    chosen = {mono_vertices(m, x, vertex_of) for x in out.values()}
    if chosen != facets:
        raise SelectionMissing("selected monomials do not exhaust the facets")
    return out


def is_closed_surface(c: SimplicialComplex) -> bool:
    """Pseudomanifold whose vertex links are single cycles."""
    if not is_pseudomanifold(c):
        return False
    for v in range(1, c.n_vertices + 1):
        lk = c.link(v)
        if not lk.facets:
            return False
        g = defaultdict(set)
        for x, y in lk.facets:
            g[x].add(y)
            g[y].add(x)
        if any(len(s) != 2 for s in g.values()):
            return False
        seen, stack = set(), [next(iter(g))]
        while stack:
            x = stack.pop()
            if x not in seen:
                seen.add(x)
                stack.extend(g[x])
        if len(seen) != len(g):
            return False
    return True


def enumerate_selections(span: ModuleSpan) -> Tuple[int, int, List[List[Tuple[int, ...]]]]:
    """Try every choice of one monomial per weight vector. Returns the number
    of choices, how many give a closed surface, and those facet lists."""
    m = span.model
    vertex_of = {lab: k + 1 for k, lab in enumerate(m.labels)}
    sups = [sorted(v) for _, v in diagram_supports(span)]
    total = 0
    good = []
    for pick in product(*sups):
        total += 1
        facets = [mono_vertices(m, x, vertex_of) for x in pick]
        if len(set(facets)) != len(facets):
            continue
        try:
            c = SimplicialComplex(len(m.labels), facets)
        except ValueError:
            continue
        if is_closed_surface(c):
            good.append(sorted(facets))
    return total, len(good), good


# ---------------------------------------------------------------------------
# contractions and products
# ---------------------------------------------------------------------------


def contract(phi: Dict[int, Fraction], v: Vec) -> Vec:
    """Interior product by a linear form given on basis positions."""
    out: Vec = {}
    for m, c in v.items():
        for p, i in enumerate(m):
            x = phi.get(i)
            if x:
                _add(out, m[:p] + m[p + 1:], (-1) ** p * c * x)
    return out


def _as_positions(model: Optional[GLModel], phi) -> Dict[int, Fraction]:
    if model is None:
        return {int(k): Fraction(x) for k, x in phi.items() if x}
    return {model.label_index[k] if isinstance(k, str) else k: Fraction(x) for k, x in phi.items() if x}


def contraction_rank(space: Iterable[Vec], phi, model: Optional[GLModel] = None) -> int:
    """Rank of the image of the contraction. ``phi`` is one linear form
    (dict basis -> coefficient) or a list of forms, in which case the image
    of space (x) span(forms) is measured."""
    forms = phi if isinstance(phi, (list, tuple)) else [phi]
    forms = [_as_positions(model, f) for f in forms]
    ech = Echelon()
    for v in space:
        for f in forms:
            u = contract(f, v)
            if u:
                ech.add(u)
    return ech.rank


def full_wedge(n: int, k: int) -> List[Vec]:
    return [{m: Fraction(1)} for m in combinations(range(n), k)]


def coordinate_forms(n: int) -> List[Dict[int, Fraction]]:
    return [{i: Fraction(1)} for i in range(n)]


def wedge(u: Vec, v: Vec) -> Vec:
    out: Vec = {}
    for m, c in u.items():
        for n, d in v.items():
            s, srt = _sort_sign(m + n)
            if s:
                _add(out, srt, s * c * d)
    return out


def decomposable(vectors: Sequence[Dict[int, Fraction]]) -> Vec:
    """v_1 ^ ... ^ v_k for vectors given as dicts position -> coefficient."""
    out: Vec = {(): Fraction(1)}
    for x in vectors:
        out = wedge(out, {(i,): Fraction(c) for i, c in x.items() if c})
    return out


def image_dims_a1(span: ModuleSpan) -> List[int]:
    """dim Im(L (x) wedge^{top-k} V^dual -> wedge^k V) for k = top..0."""
    n = span.model.dim
    forms = coordinate_forms(n)
    cur = span.basis
    dims = [len(cur)]
    for _ in range(span.degree):
        ech = Echelon()
        nxt = []
        for v in cur:
            for f in forms:
                u = contract(f, v)
                if u and ech.add(u):
                    nxt.append(u)
        cur = nxt
        dims.append(len(cur))
    return dims


# ---------------------------------------------------------------------------
# highest weight vectors by linear algebra
# ---------------------------------------------------------------------------


def weight_monomials(model: GLModel, k: int, w: Sequence[int]) -> List[Mono]:
    w = tuple(w)
    return [m for m in combinations(range(model.dim), k) if model.weight(m) == w]


def nullspace(columns: List[Vec]) -> List[Dict[int, Fraction]]:
    """Kernel of the linear map sending e_j to columns[j]."""
    n = len(columns)
    rows: Dict[Mono, Dict[int, Fraction]] = defaultdict(dict)
    for j, col in enumerate(columns):
        for key, c in col.items():
            rows[key][j] = Fraction(c)
    pivots: Dict[int, Dict[int, Fraction]] = {}
    for r in rows.values():
        r = dict(r)
        for p, prow in pivots.items():
            if p in r:
                f = r[p]
                for j, x in prow.items():
                    r[j] = r.get(j, 0) - f * x
                r = {j: x for j, x in r.items() if x}
        if not r:
            continue
        p = min(r)
        inv = 1 / r[p]
        r = {j: x * inv for j, x in r.items()}
        for q in list(pivots):
            if p in pivots[q]:
                f = pivots[q][p]
                row = dict(pivots[q])
                for j, x in r.items():
                    row[j] = row.get(j, 0) - f * x
                pivots[q] = {j: x for j, x in row.items() if x}
        pivots[p] = r
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for fj in free:
        v = {fj: Fraction(1)}
        for p, row in pivots.items():
            if fj in row:
                v[p] = -row[fj]
        basis.append(v)
    return basis


def highest_weight_vectors(model: GLModel, k: int, w: Sequence[int]) -> List[Vec]:
    monos = weight_monomials(model, k, w)
    cols = []
    for m in monos:
        img: Vec = {}
        for t, op in enumerate(model.raising()):
            for key, c in model.apply(op, {m: Fraction(1)}).items():
                img[(t,) + key] = c
        cols.append(img)
    return [{monos[j]: c for j, c in v.items()} for v in nullspace(cols)]


def dual_component_weight(model: GLModel, top_highest: Sequence[int]) -> Tuple[int, ...]:
    """Highest weight of (L)^dual (x) det V inside wedge^{N-k} V, where L has
    highest weight ``top_highest``."""
    det = [0] * len(model.weights[0])
    for w in model.weights:
        for t, x in enumerate(w):
            det[t] += x
    low = []
    for part in model.split_weight(top_highest):
        low += list(reversed(part))
    return tuple(d - x for d, x in zip(det, low))


def top_span(a: int) -> ModuleSpan:
    """L^{2a+1} for a in {1, 2}."""
    model = model_for(a)
    if a == 1:
        return generate_module(model, model.mono("(11)(12)(13)"))
    if a == 2:
        return generate_module(model, model.mono("(11)(12)(13)(21)(31)"))
    raise ValueError("explicit top modules only for a = 1, 2")


@dataclass
class DefectivityReport:
    a: int
    highest: Vec
    dim: int
    pairs: int
    vanishing: bool


def defectivity_check(a: int) -> DefectivityReport:
    """All products of two vectors of the component dual to L^{2a+1} inside
    wedge^{a+2} J vanish in wedge^{2a+4} J."""
    top = top_span(a)
    model = top.model
    w = dual_component_weight(model, model.vec_weight(top.highest))
    hws = highest_weight_vectors(model, a + 2, w)
    if len(hws) != 1:
        raise NotHighestWeight(f"{len(hws)} highest weight vectors of weight {w}")
    span = generate_module(model, hws[0])
    if span.dim != top.dim:
        raise DimensionMismatch(f"dual component has dim {span.dim}, expected {top.dim}")
    basis = span.basis
    ok = True
    pairs = 0
    for i, u in enumerate(basis):
        for v in basis[i:]:
            pairs += 1
            if wedge(u, v):
                ok = False
    return DefectivityReport(a, hws[0], span.dim, pairs, ok)


def generic_decomposable_control(seed: int = 0) -> bool:
    """Two random decomposable 3-vectors of C^6 have nonzero product."""
    import random

    rng = random.Random(seed)
    vecs = [{i: Fraction(rng.randint(-9, 9)) for i in range(6)} for _ in range(6)]
    return bool(wedge(decomposable(vecs[:3]), decomposable(vecs[3:])))


# ---------------------------------------------------------------------------
# CP^2 dictionary checks
# ---------------------------------------------------------------------------


@dataclass
class CP2Report:
    highest_facet: Tuple[int, ...]
    orbit_facets: List[Tuple[int, ...]]
    orbit_facets_ok: bool
    weight_orbits: int
    h_orbits: int
    orbits_match: bool
    support_sizes: Dict[int, int]
    one_facet_each: bool
    twisted_ok: bool
    h_index_action: bool
    tau_transpose: bool
    failures: List[str] = field(default_factory=list)


def _label_perm(model: GLModel, sa: Sequence[int], sb: Sequence[int], transpose: bool = False):
    def f(lab: str) -> str:
        i, j = int(lab[0]), int(lab[1])
        i, j = sa[i - 1], sb[j - 1]
        return f"{j}{i}" if transpose else f"{i}{j}"
    return f


def _cycle3(k: int) -> Tuple[int, int, int]:
    return tuple(((x - 1 + k) % 3) + 1 for x in (1, 2, 3))


def _match(span: ModuleSpan, vertex_of: Dict[str, int], facets: set) -> Tuple[bool, Dict, Dict]:
    model = span.model
    per_weight = {}
    sizes: Dict[int, int] = defaultdict(int)
    ok = True
    for w, v in diagram_supports(span):
        sizes[len(v)] += 1
        hits = [mono_vertices(model, x, vertex_of) for x in v if mono_vertices(model, x, vertex_of) in facets]
        if len(hits) != 1:
            ok = False
        else:
            per_weight[w] = hits[0]
    ok = ok and set(per_weight.values()) == facets
    return ok, per_weight, dict(sizes)


def cp2_match(span: ModuleSpan, complex_: SimplicialComplex, dictionary: Dict[int, str], generators: Dict[str, Permutation]) -> CP2Report:
    model = span.model
    facets = set(complex_.facets)
    vertex_of = {lab: v for v, lab in dictionary.items()}
    fails = []
    hmono = next(iter(span.highest))
    hfacet = mono_vertices(model, hmono, vertex_of)
    if hfacet not in facets:
        fails.append("highest weight monomial is not a facet")
    # the W-orbit of the highest monomial
    orbit = set()
    for sa in permutations((1, 2, 3)):
        for sb in permutations((1, 2, 3)):
            f = _label_perm(model, sa, sb)
            orbit.add(tuple(sorted(vertex_of[f(model.labels[i])] for i in hmono)))
    orbit_ok = len(orbit) == 9 and orbit <= facets
    if not orbit_ok:
        fails.append("W-orbit of the highest monomial")
    ok, per_weight, sizes = _match(span, vertex_of, facets)
    if not ok:
        fails.append("one facet per weight vector")
    if not set(sizes) <= {1, 2, 4}:
        fails.append(f"support sizes {sorted(sizes)}")
    # weight orbits under S3 x S3 versus facet orbits under H
    def w_act(w, sa, sb):
        A, B = w[:3], w[3:]
        return tuple(A[sa.index(i + 1)] for i in range(3)) + tuple(B[sb.index(i + 1)] for i in range(3))
    weights = sorted(per_weight)
    worbits = []
    seen = set()
    for w in weights:
        if w in seen:
            continue
        orb = {w_act(w, sa, sb) for sa in permutations((1, 2, 3)) for sb in permutations((1, 2, 3))}
        seen |= orb
        worbits.append(orb)
    H = [generators["h1"], generators["h2"]]
    horbits = orbits(H, list(facets))
    w_partition = sorted(sorted(per_weight[w] for w in orb if w in per_weight) for orb in worbits)
    h_partition = sorted(sorted(o) for o in horbits)
    match = w_partition == h_partition
    if not match:
        fails.append("W-orbits of weights versus H-orbits of facets")
    # transposed dictionary
    tdict = {v: lab[::-1] for v, lab in dictionary.items()}
    tok, _, _ = _match(span, {lab: v for v, lab in tdict.items()}, facets)
    if not tok:
        fails.append("transposed dictionary")
    # H acts by cyclic shifts of the indices, tau by transposition
    def realises(p: Permutation, transpose: bool, cyclic: bool) -> bool:
        group = [_cycle3(k) for k in range(3)] if cyclic else list(permutations((1, 2, 3)))
        for sa in group:
            for sb in group:
                f = _label_perm(model, sa, sb, transpose)
                if all(vertex_of[f(dictionary[v])] == p(v) for v in dictionary):
                    return True
        return False
    h_ok = all(realises(g, False, True) for g in H)
    tau_ok = realises(generators["tau"], True, False) and all(
        generators["tau"](v) == vertex_of[dictionary[v][::-1]] for v in dictionary
    )
    if not h_ok:
        fails.append("H versus A3 x A3")
    if not tau_ok:
        fails.append("tau versus transpose")
    return CP2Report(hfacet, sorted(orbit), orbit_ok, len(worbits), len(horbits), match, sizes, ok, tok, h_ok, tau_ok, fails)


# ---------------------------------------------------------------------------
# the simplex M1 in wedge^9 (wedge^2 C^6)
# ---------------------------------------------------------------------------


@dataclass
class M1Report:
    weight: Tuple[int, ...]
    highest: bool
    dim: int


def m1_weight_check(pairs: Sequence[str]) -> M1Report:
    model = alt_square(6)
    v = model.mono("".join(f"({p})" for p in pairs))
    w = model.vec_weight(v)
    hi = is_highest(model, v)
    return M1Report(w, hi, model.gl_dim(w) if hi else 0)
