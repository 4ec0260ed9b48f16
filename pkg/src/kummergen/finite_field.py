"""Factorization and residue-field tools for polynomials over F_p.

Factorization is the usual three stages: squarefree split, distinct-degree
split, then Cantor-Zassenhaus equal-degree splitting.  The random splitting
elements come from a ``random.Random(seed)``; the sorted output does not
depend on the seed.
"""

from __future__ import annotations

import random

from .errors import DomainError
from .linalg import solve_mod_p
from .poly import Poly, RatFunc, poly_gcd, squarefree_decompose

__all__ = [
    "MAX_PRIME",
    "is_prime",
    "powmod",
    "is_irreducible_fp",
    "factor_fp",
    "partial_fractions",
    "pth_root_mod",
    "poly_inverse_mod",
]

MAX_PRIME = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def _check_fp(f: Poly):
    if not f.p:
        raise DomainError("expected a polynomial over F_p")
    if f.p > MAX_PRIME:
        raise DomainError(f"characteristic {f.p} exceeds the supported bound 2^31")


def powmod(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly.one(base.p)
    base = base % mod
    while e:
        if e & 1:
            result = result * base % mod
        e >>= 1
        if e:
            base = base * base % mod
    return result


def _prime_divisors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_fp(q: Poly) -> bool:
    """Rabin's irreducibility test."""
    _check_fp(q)
    n = q.degree
    if n < 1:
        return False
    if n == 1:
        return True
    q = q.monic()
    p = q.p
    t = Poly.gen(p)
    for r in _prime_divisors(n):
        h = powmod(t, p ** (n // r), q) - t
        if not poly_gcd(h, q).is_one():
            return False
    return (powmod(t, p**n, q) - t).is_zero()


def _distinct_degree(f: Poly):
    p = f.p
    t = Poly.gen(p)
    out = []
    h = t
    i = 1
    while f.degree >= 2 * i:
        h = powmod(h, p, f)
        g = poly_gcd(h - t, f)
        if not g.is_one():
            out.append((g, i))
            f = f // g
            h = h % f
        i += 1
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _equal_degree(g: Poly, d: int, rng: random.Random):
    if g.degree == d:
        return [g]
    p = g.p
    n = g.degree
    while True:
        a = Poly([rng.randrange(p) for _ in range(n)], p)
        if a.is_constant():
            continue
        if p == 2:
            b = a % g
            acc = b
            for _ in range(d - 1):
                b = b * b % g
                acc = acc + b
        else:
            acc = powmod(a, (p**d - 1) // 2, g) - 1
        h = poly_gcd(acc, g) if acc else g
        if 0 < h.degree < n:
            return _equal_degree(h, d, rng) + _equal_degree(g // h, d, rng)


def factor_fp(f: Poly, seed: int = 0):
    """Irreducible monic factors of ``f`` over F_p with multiplicities.

    Sorted by degree, then by coefficients from the top down.

    >>> t = Poly.gen(2)
    >>> [(str(g), e) for g, e in factor_fp(t**3 + t)]
    [('t', 1), ('t + 1', 2)]
    """
    _check_fp(f)
    if f.is_zero():
        raise DomainError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    out = []
    for g, e in squarefree_decompose(f).factors:
        for block, d in _distinct_degree(g):
            for irr in _equal_degree(block, d, rng):
                out.append((irr.monic(), e))
    out.sort(key=lambda ge: ge[0].sort_key())
    return out


def poly_inverse_mod(a: Poly, m: Poly) -> Poly:
    """Inverse of ``a`` modulo ``m`` by the extended Euclidean algorithm."""
    r0, r1 = m, a % m
    s0, s1 = Poly.zero(a.p), Poly.one(a.p)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise DomainError(f"{a} is not invertible modulo {m}")
    return s0 * pow(r0.lc, -1, a.p) % m


def partial_fractions(f: RatFunc, seed: int = 0, factors=None):
    """Decompose ``f`` over F_p as polynomial part plus pole parts.

    Returns ``(poly_part, [(q, [(m, c), ...]), ...])`` meaning
    ``f == poly_part + sum(c / q**m)`` with ``deg c < deg q``; places are
    sorted, orders descending, zero numerators dropped.

    ``factors`` may supply irreducible polynomials known to cover the support
    of the denominator, skipping the factorization step.
    """
    p = f.p
    if not p:
        raise DomainError("partial fractions are implemented over F_p only")
    poly_part, rem = divmod(f.num, f.den)
    if f.den.is_one():
        return poly_part, []
    if factors is None:
        dfac = factor_fp(f.den, seed=seed)
    else:
        dfac = []
        rest = f.den
        for q in factors:
            e = 0
            while True:
                quo, r = divmod(rest, q)
                if r:
                    break
                rest, e = quo, e + 1
            if e:
                dfac.append((q, e))
        if not rest.is_constant():
            raise DomainError("supplied factors do not cover the denominator")
        dfac.sort(key=lambda ge: ge[0].sort_key())
    poles = []
    for q, e in dfac:
        qe = q**e
        cof = f.den // qe
        a = rem * poly_inverse_mod(cof, qe) % qe
        terms = []
        for i in range(e):
            a, c = divmod(a, q)
            if c:
                terms.append((e - i, c))
        terms.sort(key=lambda mc: -mc[0])
        if terms:
            poles.append((q, terms))
    return poly_part, poles


def pth_root_mod(c: Poly, q: Poly) -> Poly:
    """The unique ``e`` with ``deg e < deg q`` and ``e**p == c`` mod ``q``.

    Frobenius is F_p-linear on F_p[t]/q; we write its matrix on the basis
    ``1, t, ..., t^(d-1)`` and solve.
    """
    _check_fp(q)
    if not is_irreducible_fp(q):
        raise DomainError(f"{q} is reducible over F_{q.p}; factor it first")
    p = q.p
    d = q.degree
    c = c % q
    if c.is_constant():
        return c
    tp = powmod(Poly.gen(p), p, q)
    cols = []
    col = Poly.one(p)
    for _ in range(d):
        cols.append([col[i] for i in range(d)])
        col = col * tp % q
    a = [[cols[j][i] for j in range(d)] for i in range(d)]
    return Poly(solve_mod_p(a, [c[i] for i in range(d)], p), p)
