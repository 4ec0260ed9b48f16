"""Integer matrices: Smith normal form, rank, and kernels of reduction mod n.

Matrices are plain lists of rows of Python ints.  A ``k x 0`` matrix is a list
of ``k`` empty rows.
"""

from __future__ import annotations

import itertools
import math
from typing import List, Sequence

from .errors import DomainError, ResourceError

__all__ = [
    "DEFAULT_CAP",
    "identity",
    "matmul",
    "determinant",
    "smith_normal_form",
    "elementary_divisors",
    "rank",
    "kernel_size_mod_n",
    "enumerate_kernel_mod_n",
]

DEFAULT_CAP = 10**6

IntMatrix = List[List[int]]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _shape(m: Sequence[Sequence[int]]):
    k = len(m)
    s = len(m[0]) if k else 0
    if any(len(r) != s for r in m):
        raise DomainError("ragged integer matrix")
    return k, s


def matmul(a, b) -> IntMatrix:
    k, n = _shape(a)
    n2, s = _shape(b)
    if n != n2 and k and n2:
        raise DomainError(f"shape mismatch {k}x{n} @ {n2}x{s}")
    return [[sum(a[i][x] * b[x][j] for x in range(n)) for j in range(s)] for i in range(k)]


def determinant(m) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    n, s = _shape(m)
    if n != s:
        raise DomainError("determinant of a non-square matrix")
    a = [list(map(int, r)) for r in m]
    sign, prev = 1, 1
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) // prev
            a[i][c] = 0
        prev = a[c][c]
    return sign * (a[n - 1][n - 1] if n else 1)


def smith_normal_form(m):
    """Smith normal form ``U @ M @ V = diag(D)`` with unimodular ``U``, ``V``.

    Returns ``(divisors, U, V)``.  ``divisors`` has one entry per row of
    ``M``: the invariant factors in divisibility order, then zeros.

    Each stage pivots on the smallest nonzero entry (in absolute value) of the
    remaining block and clears its row and column by integer division; a
    nonzero remainder becomes the new, smaller pivot.

    >>> smith_normal_form([[4, 0], [0, 6]])[0]
    (2, 12)
    """
    k, s = _shape(m)
    a = [list(map(int, r)) for r in m]
    u = identity(k)
    v = identity(s)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst -= q * row_src
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    for t in range(min(k, s)):
        best = None
        for i in range(t, k):
            for j in range(t, s):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            dirty = False
            for i in range(t + 1, k):
                if a[i][t]:
                    add_row(i, t, a[i][t] // a[t][t])
                    if a[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, s):
                if a[t][j]:
                    add_col(j, t, a[t][j] // a[t][t])
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, k) for j in range(t + 1, s) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    divisors = tuple(a[i][i] if i < s else 0 for i in range(k))
    return divisors, u, v


def elementary_divisors(m) -> tuple:
    return smith_normal_form(m)[0]


def rank(m) -> int:
    """Rank over Q by fraction-free elimination (independent of the SNF)."""
    k, s = _shape(m)
    a = [list(map(int, r)) for r in m]
    r = 0
    for c in range(s):
        piv = next((i for i in range(r, k) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, k):
            if a[i][c]:
                f, g = a[i][c], a[r][c]
                a[i] = [x * g - y * f for x, y in zip(a[i], a[r])]
        r += 1
        if r == k:
            break
    return r


def kernel_size_mod_n(m, n: int) -> int:
    """``#{a in (Z/n)^k : a M = 0 mod n}``, equal to ``prod(gcd(d_i, n))``."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    return math.prod(math.gcd(d, n) for d in elementary_divisors(m))


def enumerate_kernel_mod_n(m, n: int, cap: int = DEFAULT_CAP):
    """All ``a`` in ``(Z/n)^k`` with ``a M = 0 mod n``, sorted lexicographically.

    Built from the SNF: with ``b = a U^{-1}`` the condition decouples into
    ``b_i d_i = 0 mod n``.
    """
    size = kernel_size_mod_n(m, n)
    if size > cap:
        raise ResourceError(f"kernel has {size} elements, above the cap of {cap}", cap=cap)
    divisors, u, _ = smith_normal_form(m)
    k = len(divisors)
    choices = []
    for d in divisors:
        step = n // math.gcd(d, n)
        choices.append(range(0, n, step))
    out = set()
    for b in itertools.product(*choices):
        a = tuple(sum(b[i] * u[i][j] for i in range(k)) % n for j in range(k))
        out.add(a)
    return sorted(out)
