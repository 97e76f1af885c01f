"""Exact arithmetic kernel: rationals, Laurent polynomials, permutations,
finite permutation groups and sparse row reduction over Q."""

from __future__ import annotations

import re
from collections import deque
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .errors import (
    ClosureCapExceeded,
    DegreeMismatch,
    InconsistentSystem,
    ZeroSubstitution,
)

Q = Fraction
BigRational = Fraction

Exponent = Tuple[int, ...]


def as_q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------


class LaurentPoly:
    """Sparse Laurent polynomial with rational coefficients.

    ``terms`` maps integer exponent vectors to nonzero Fractions.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, object] = ()):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean: Dict[Exponent, Fraction] = {}
        for exp, c in dict(terms).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} has wrong length for {self.variables}")
            c = as_q(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean

    @classmethod
    def constant(cls, variables: Sequence[str], c) -> "LaurentPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def monomial(cls, variables: Sequence[str], exp: Exponent, c=1) -> "LaurentPoly":
        return cls(variables, {tuple(exp): c})

    def _check(self, other: "LaurentPoly") -> None:
        if self.variables != other.variables:
            raise ValueError("variable lists differ")

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        return LaurentPoly.constant(self.variables, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.variables, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.variables, other)
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, exp: Exponent) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coeff((0,) * len(self.variables))

    def map_exponents(self, variables: Sequence[str], f) -> "LaurentPoly":
        """Push the polynomial forward along an exponent map ``f``."""
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            e2 = tuple(f(e))
            out[e2] = out.get(e2, 0) + c
        return LaurentPoly(variables, out)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def laurent_eval(p: LaurentPoly, point: Mapping[str, object]) -> Fraction:
    """Evaluate ``p`` exactly at ``point`` (symbol -> rational)."""
    vals = [as_q(point[v]) for v in p.variables]
    total = Fraction(0)
    for exp, c in p.terms.items():
        term = c
        for v, x, k in zip(p.variables, vals, exp):
            if k < 0 and x == 0:
                raise ZeroSubstitution(f"variable {v} has negative exponent and value 0")
            term *= x ** k
        total += term
    return total


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------


class Permutation:
    """Bijection of the points 1..m, stored as the tuple of images.

    ``p * q`` applies ``q`` first, then ``p``.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(range(1, m + 1))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> "Permutation":
        """Build from cycle notation: a string like ``"(147)(258)"`` (single-digit
        points) or ``"(1 4 7)(10 11)"``, or a list of tuples."""
        if isinstance(cycles, str):
            parsed = []
            for body in re.findall(r"\(([^)]*)\)", cycles):
                body = body.strip()
                if not body:
                    continue
                if " " in body or "," in body:
                    pts = [int(t) for t in re.split(r"[ ,]+", body) if t]
                else:
                    pts = [int(ch) for ch in body]
                parsed.append(pts)
            cycles = parsed
        img = list(range(1, degree + 1))
        for cyc in cycles:
            cyc = list(cyc)
            for i, a in enumerate(cyc):
                if not 1 <= a <= degree:
                    raise ValueError(f"point {a} outside 1..{degree}")
                img[a - 1] = cyc[(i + 1) % len(cyc)]
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")
        im = self.images
        return Permutation(tuple(im[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def order(self) -> int:
        from math import lcm

        return lcm(*[len(c) for c in self.cycles()]) if self.degree else 1

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, start=1))

    def act_on_set(self, s: Iterable[int]) -> Tuple[int, ...]:
        return tuple(sorted(self(x) for x in s))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return f"Permutation(id, degree={self.degree})"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


class PermGroup:
    """A finite permutation group with its elements materialised."""

    def __init__(self, generators: Sequence[Permutation], elements: frozenset):
        self.generators = tuple(generators)
        self.elements = elements

    @property
    def degree(self) -> int:
        return next(iter(self.elements)).degree

    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, p):
        return p in self.elements

    def __iter__(self):
        return iter(self.elements)

    def is_transitive(self, points: Iterable[int] | None = None) -> bool:
        pts = list(points) if points is not None else list(range(1, self.degree + 1))
        return len(orbits(self, pts)) == 1


def group_closure(gens: Sequence[Permutation], cap: int = 100_000) -> PermGroup:
    """Breadth-first closure of ``gens`` under composition; raises
    ClosureCapExceeded once more than ``cap`` elements appear."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    deg = gens[0].degree
    if any(g.degree != deg for g in gens):
        raise DegreeMismatch("generators act on different point sets")
    e = Permutation.identity(deg)
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g * x
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise ClosureCapExceeded(f"group exceeds cap {cap}")
                queue.append(y)
    return PermGroup(gens, frozenset(seen))


def orbits(group, domain: Iterable) -> List[Tuple]:
    """Orbits of ``group`` (a PermGroup or list of generators) on ``domain``.

    Domain elements are points (ints) or collections of points, acted on
    setwise. Each orbit is sorted; orbits are listed by their minimum.
    """
    gens = group.generators if isinstance(group, PermGroup) else list(group)
    items = [_canon(x) for x in domain]
    dom = set(items)
    if gens:
        deg = gens[0].degree
        for x in dom:
            pts = (x,) if isinstance(x, int) else x
            if any(not 1 <= p <= deg for p in pts):
                raise DegreeMismatch(f"domain element {x} outside 1..{deg}")
    seen = set()
    out = []
    for x in sorted(dom):
        if x in seen:
            continue
        orb = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for g in gens:
                z = g(y) if isinstance(y, int) else g.act_on_set(y)
                if z not in orb:
                    if z not in dom:
                        raise DegreeMismatch(f"domain not closed: {y} -> {z}")
                    orb.add(z)
                    stack.append(z)
        seen |= orb
        out.append(tuple(sorted(orb)))
    return out


def _canon(x):
    if isinstance(x, int):
        return x
    return tuple(sorted(x))


# ---------------------------------------------------------------------------
# Sparse row reduction over Q
# ---------------------------------------------------------------------------


class Echelon:
    """Incrementally maintained reduced basis of a space of sparse vectors.

    Vectors are dicts from hashable keys to Fractions. ``add`` returns True
    when the vector was independent of those already inserted.
    """

    def __init__(self):
        self.rows: Dict[object, Dict[object, Fraction]] = {}

    def reduce(self, v: Mapping) -> Dict[object, Fraction]:
        v = {k: as_q(c) for k, c in v.items() if c}
        # rows are fully reduced, so one pass over pivots present in v suffices
        for k in [k for k in v if k in self.rows]:
            c = v.get(k)
            if not c:
                continue
            for kk, cc in self.rows[k].items():
                nv = v.get(kk, 0) - c * cc
                if nv:
                    v[kk] = nv
                else:
                    v.pop(kk, None)
        return v

    def add(self, v: Mapping) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        pivot = min(r, key=_sort_key)
        c = r[pivot]
        r = {k: x / c for k, x in r.items()}
        for row in self.rows.values():
            if pivot in row:
                f = row[pivot]
                for k, x in r.items():
                    nv = row.get(k, 0) - f * x
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        self.rows[pivot] = r
        return True

    def contains(self, v: Mapping) -> bool:
        return not self.reduce(v)

    @property
    def rank(self) -> int:
        return len(self.rows)


def _sort_key(k):
    return (repr(type(k)), k) if not isinstance(k, tuple) else (len(k), k)


def rank(vectors: Iterable[Mapping]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return e.rank


def solve_linear_system(A: Sequence[Sequence], b: Sequence) -> List[Fraction]:
    """Exact solution of the (possibly overdetermined) system A x = b.

    Every equation is kept; redundant rows must reduce to 0 = 0, otherwise
    InconsistentSystem is raised. The solution must be unique.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    M = [[as_q(x) for x in row] + [as_q(bi)] for row, bi in zip(A, b)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, m):
        if M[i][n]:
            raise InconsistentSystem(f"equation {i} reduces to 0 = {M[i][n]}")
    if r < n:
        raise InconsistentSystem(f"system underdetermined: rank {r} < {n} unknowns")
    x = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        x[c] = M[i][n]
    return x
