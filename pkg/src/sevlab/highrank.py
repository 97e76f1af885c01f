"""Exterior powers of J_{n+1}(A_C) for a = 1, 2, 4 through Schur functors.

J is S^2 U (a=1, dim U = n+1), U (x) V (a=2, both of dim n+1) or
wedge^2 U (a=4, dim U = 2n+2).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, List, Sequence, Tuple

from .errors import NonIntegerResult, OutOfRange, UnsupportedCase

Partition = Tuple[int, ...]


def partition(parts: Sequence[int]) -> Partition:
    p = tuple(int(x) for x in parts if x)
    if any(x < y for x, y in zip(p, p[1:])) or any(x < 0 for x in p):
        raise ValueError(f"{tuple(parts)} is not a partition")
    return p


def strict_partition(parts: Sequence[int]) -> Partition:
    p = partition(parts)
    if any(x == y for x, y in zip(p, p[1:])):
        raise ValueError(f"{p} is not strict")
    return p


def conjugate(p: Sequence[int]) -> Partition:
    p = partition(p)
    return tuple(sum(1 for x in p if x > i) for i in range(p[0])) if p else ()


def d_plus(lam: Sequence[int]) -> Partition:
    """(l_1, l_2+1, ..., l_k+k-1, k^{l_k}, (k-1)^{l_{k-1}-l_k-1}, ..., 1^{l_1-l_2-1})."""
    lam = strict_partition(lam)
    k = len(lam)
    head = [lam[i] + i for i in range(k)]
    tail = [k] * lam[-1] if k else []
    for r in range(k - 1, 0, -1):
        tail += [r] * (lam[r - 1] - lam[r] - 1)
    return partition(head + tail)


def d_minus(lam: Sequence[int]) -> Partition:
    return conjugate(d_plus(lam))


def frobenius(p: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    p = partition(p)
    c = conjugate(p)
    r = sum(1 for i, x in enumerate(p) if x > i)
    return tuple(p[i] - i - 1 for i in range(r)), tuple(c[i] - i - 1 for i in range(r))


def schur_dim(lam: Sequence[int], n_vars: int) -> int:
    """dim S_lam C^n by the hook-content formula."""
    lam = partition(lam)
    if len(lam) > n_vars:
        return 0
    c = conjugate(lam)
    num = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            hook = row - j + c[j] - i - 1
            num *= Fraction(n_vars + j - i, hook)
    if num.denominator != 1:
        raise NonIntegerResult(str(num))
    return int(num)


def strict_partitions(k: int, max_part: int) -> List[Partition]:
    out = []

    def rec(rem, bound, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for x in range(min(rem, bound), 0, -1):
            rec(rem - x, x - 1, acc + [x])

    rec(k, max_part, [])
    return out


def partitions_in_box(k: int, rows: int, cols: int) -> List[Partition]:
    out = []

    def rec(rem, bound, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        if len(acc) == rows:
            return
        for x in range(min(rem, bound), 0, -1):
            rec(rem - x, x, acc + [x])

    rec(k, cols, [])
    return out


def dim_J(a: int, n: int) -> int:
    return {1: (n + 1) * (n + 2) // 2, 2: (n + 1) ** 2, 4: (n + 1) * (2 * n + 1)}[a]


def u_dim(a: int, n: int) -> int:
    if a not in (1, 2, 4):
        raise UnsupportedCase(f"a={a}")
    return 2 * n + 2 if a == 4 else n + 1


Label = Tuple[Partition, ...]


def wedge_decomp_highrank(a: int, n: int, k: int) -> List[Tuple[Label, int]]:
    """Irreducible pieces of wedge^k J with their dimensions."""
    N = u_dim(a, n)
    if not 0 <= k <= dim_J(a, n):
        raise OutOfRange(f"k={k}")
    out = []
    if a == 1:
        for lam in strict_partitions(k, N):
            mu = d_minus(lam)
            out.append(((mu,), schur_dim(mu, N)))
    elif a == 2:
        for lam in partitions_in_box(k, N, N):
            out.append(((lam, conjugate(lam)), schur_dim(lam, N) * schur_dim(conjugate(lam), N)))
    else:
        for lam in strict_partitions(k, N - 1):
            mu = d_plus(lam)
            out.append(((mu,), schur_dim(mu, N)))
    return out


def hook(i: int, j: int) -> Partition:
    """(i+1, 1^j)."""
    return (i + 1,) + (1,) * j


def L_highrank(a: int, n: int) -> Dict[int, List[Tuple[Label, int]]]:
    """The graded family L^1..L^{an+1}."""
    if a not in (1, 2, 4):
        raise UnsupportedCase(f"a={a}")
    if n < 1:
        raise OutOfRange(f"n={n}")
    N = u_dim(a, n)
    out: Dict[int, List[Tuple[Label, int]]] = {}
    for k in range(1, a * n + 2):
        comps = []
        if a == 1:
            mu = (k + 1,) + (1,) * (k - 1)
            comps.append(((mu,), schur_dim(mu, N)))
        elif a == 2:
            for i in range(k):
                j = k - 1 - i
                lu, lv = hook(i, j), hook(j, i)
                d = schur_dim(lu, N) * schur_dim(lv, N)
                if d:
                    comps.append(((lu, lv), d))
        else:
            for j in range(0, k):
                i = k - j
                if i > j and i <= N - 1:
                    mu = d_plus((i, j) if j else (i,))
                    comps.append(((mu,), schur_dim(mu, N)))
        out[k] = comps
    return out


def f_highrank(a: int, n: int) -> List[int]:
    """f_k^{a,n} = dim L^{k+1} for k = 0..an."""
    L = L_highrank(a, n)
    return [sum(d for _, d in L[k + 1]) for k in range(a * n + 1)]


def top_power(a: int, n: int) -> Fraction:
    """d with L^{an+1} the d-th Cartan power of J."""
    return Fraction(a * (n - 1), 2) + 1


def cartan_power_label(a: int, n: int) -> Label:
    """Schur label of J^{(d)}: d times the highest weight of J."""
    d = top_power(a, n)
    if a == 1:
        # S^2 U has highest weight 2e_1, so J^{(d)} = S_{2d}
        return ((int(2 * d),),)
    if a == 2:
        return ((int(d),), (int(d),))
    return ((int(d), int(d)),)


def sl_label(mu: Sequence[int], N: int) -> Tuple[int, ...]:
    mu = list(mu) + [0] * (N - len(mu))
    return tuple(mu[i] - mu[i + 1] for i in range(N - 1))


def f_closed_form(a: int, n: int, k: int, reading: str = "square") -> Fraction:
    """Closed forms for f_k^{1,n} and f_k^{2,n}. For a=2 the prefactor
    is read as ((n+1)/(k+1))^2 ("square") or (n+1)/(k+1)^2 ("denominator")."""
    if not 0 <= k <= a * n:
        raise OutOfRange(f"k={k}")
    if a == 1:
        return Fraction(comb(n + k + 2, k + 1) * comb(n + 1, k + 1), 2)
    if a == 2:
        s = sum(comb(n + i + 1, i) * comb(n, i) * comb(n + (k - i) + 1, k - i) * comb(n, k - i) for i in range(k + 1))
        pref = Fraction(n + 1, k + 1) ** 2 if reading == "square" else Fraction(n + 1, (k + 1) ** 2)
        return pref * s
    raise UnsupportedCase(f"no closed form for a={a}")


def alternating_sum(a: int, n: int) -> int:
    return sum((-1) ** k * f for k, f in enumerate(f_highrank(a, n)))


def expected_alternating_sum(a: int, n: int) -> int:
    return (1 + (-1) ** n) // 2 if a == 1 else n + 1


def completeness(a: int, n: int) -> bool:
    D = dim_J(a, n)
    return all(sum(d for _, d in wedge_decomp_highrank(a, n, k)) == comb(D, k) for k in range(D + 1))


def label_text(label: Label) -> str:
    return " (x) ".join("[" + "".join(map(str, mu)) + "]" if all(x < 10 for x in mu) else str(list(mu)) for mu in label)
