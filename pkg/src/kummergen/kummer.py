"""Kummer analysis of rationally parametrized curves in the torus G_m^k.

For a curve ``t -> (b_1(t), ..., b_k(t))`` over Q, the obstruction to
irreducibility of the pullback under ``[n]: x -> x^n`` is governed by which
monomials ``prod b_i^{a_i}`` are n-th powers in Qbar(t) up to a constant.
Writing every ``b_i`` over a common coprime basis of places gives an integer
exponent matrix ``M``; the monomial for ``a`` is an n-th power up to
constants exactly when ``a M = 0 mod n``.  This rests on three facts about
Qbar(t): constants are n-th powers, the divisor of a function determines it up
to a constant (trivial class group), and the valuation at infinity is minus
the sum of the finite ones, so it adds no condition.

Everything downstream is read off the Smith normal form ``d_1 | ... | d_k`` of
``M``: the number of components of ``[n]^{-1}(X)`` is ``prod gcd(d_i, n)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, ResourceError
from .lattice import DEFAULT_CAP, rank, smith_normal_form
from .linalg import field_rank
from .poly import Poly, RatFunc, gcdfree_basis, log_derivative, poly_lcm, squarefree_decompose

__all__ = [
    "TorusCurve",
    "ValuationMatrix",
    "KummerReport",
    "valuation_matrix",
    "is_free_rank",
    "is_free_alternant",
    "analyze",
    "is_n_kummer_generic",
    "is_kummer_generic",
    "component_count",
    "stabilizing_level",
    "verify_stabilizing",
    "oracle_is_nth_power",
    "oracle_component_count",
    "prime_factors",
]


def prime_factors(n: int) -> tuple:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


@dataclass(frozen=True)
class TorusCurve:
    """A curve in G_m^k given by k nonzero rational functions of ``t`` over Q."""

    coords: tuple

    def __post_init__(self):
        coords = tuple(c if isinstance(c, RatFunc) else RatFunc(c) for c in self.coords)
        if not coords:
            raise DomainError("a torus curve needs at least one coordinate")
        for i, c in enumerate(coords, 1):
            if c.p:
                raise DomainError(f"coordinate {i} is not over Q")
            if c.is_zero():
                raise DomainError(f"coordinate {i} is identically zero")
        object.__setattr__(self, "coords", coords)

    @property
    def k(self) -> int:
        return len(self.coords)

    def __str__(self):
        return ", ".join(str(c) for c in self.coords)


@dataclass(frozen=True)
class ValuationMatrix:
    basis: tuple
    matrix: tuple  # k rows of s ints


def valuation_matrix(curve: TorusCurve) -> ValuationMatrix:
    """Exponents of each coordinate over a gcd-free basis of the finite places.

    The basis is computed over Q, not over Qbar.  A basis polynomial may cover
    several Galois-conjugate roots; since the coordinates are defined over Q,
    all of those roots carry the same exponent, so splitting the column would
    only duplicate it.  Duplicate columns do not change the row lattice modulo
    any n, so no factorization over Q is needed.

    Constant factors are dropped: they are n-th powers for every n over an
    algebraically closed field.
    """
    polys = [c.num for c in curve.coords] + [c.den for c in curve.coords]
    basis, exps = gcdfree_basis(polys)
    k = curve.k
    matrix = tuple(
        tuple(a - b for a, b in zip(exps[i], exps[k + i])) for i in range(k)
    )
    return ValuationMatrix(tuple(basis), matrix)


def is_free_rank(curve: TorusCurve) -> bool:
    """True iff no nonzero character is constant on the curve (``rank M == k``)."""
    m = valuation_matrix(curve).matrix
    return rank([list(r) for r in m]) == curve.k


def is_free_alternant(curve: TorusCurve) -> bool:
    """Freeness through the logarithmic derivatives, bypassing ``M`` and the SNF.

    The summation map ``X^k -> G_m^k`` is dominant iff the alternant
    ``det[L_i(t_j)]`` of the log-derivatives ``L_i = b_i'/b_i`` is not
    identically zero, i.e. iff the ``L_i`` are linearly independent over the
    constants.  We clear a common denominator and take the rank of the
    numerator coefficient vectors.
    """
    logs = [log_derivative(c) for c in curve.coords]
    common = Poly.one()
    for lg in logs:
        common = poly_lcm(common, lg.den)
    rows = []
    for lg in logs:
        numer = lg.num * (common // lg.den)
        rows.append(list(numer.coeffs))
    width = max((len(r) for r in rows), default=0)
    rows = [r + [Fraction(0)] * (width - len(r)) for r in rows]
    return field_rank(rows) == curve.k


@dataclass(frozen=True)
class KummerReport:
    """Structure of ``T/Z`` for one curve.

    ``index`` is ``math.inf`` and ``exponent``/``stabilizing_level`` are
    ``None`` when the curve is not free.  ``obstruction_primes`` is ``None``
    for non-free curves, where every prime obstructs.
    """

    k: int
    divisors: tuple
    free: bool
    index: object
    exponent: object
    obstruction_primes: object
    kummer_generic: bool
    stabilizing_level: object
    valuation: ValuationMatrix = field(compare=True)

    @property
    def signature(self) -> str:
        tag = "free" if self.free else "non-free"
        return f"({tag}, ({','.join(map(str, self.divisors))}))"


def analyze(curve: TorusCurve) -> KummerReport:
    vm = valuation_matrix(curve)
    divisors, _, _ = smith_normal_form([list(r) for r in vm.matrix])
    free = all(divisors)
    dk = divisors[-1]
    if free:
        return KummerReport(
            k=curve.k,
            divisors=divisors,
            free=True,
            index=math.prod(divisors),
            exponent=dk,
            obstruction_primes=prime_factors(dk),
            kummer_generic=dk == 1,
            stabilizing_level=dk,
            valuation=vm,
        )
    return KummerReport(
        k=curve.k,
        divisors=divisors,
        free=False,
        index=math.inf,
        exponent=None,
        obstruction_primes=None,
        kummer_generic=False,
        stabilizing_level=None,
        valuation=vm,
    )


def _check_n(n):
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")


def component_count(report: KummerReport, n: int) -> int:
    """Number of irreducible components of ``[n]^{-1}(X)``."""
    _check_n(n)
    return math.prod(math.gcd(d, n) for d in report.divisors)


def is_n_kummer_generic(report: KummerReport, n: int) -> bool:
    _check_n(n)
    return all(math.gcd(d, n) == 1 for d in report.divisors)


def is_kummer_generic(report: KummerReport) -> bool:
    # only primes dividing d_k can obstruct, and non-free curves fail at every n
    return report.free and report.divisors[-1] == 1


def stabilizing_level(report: KummerReport) -> int:
    """Least ``m`` with ``mT <= Z``: the exponent ``d_k`` of ``T/Z``.

    Every irreducible component of ``[m]^{-1}(X)`` is then Kummer-generic.
    """
    if not report.free:
        raise DomainError("no stabilizing level exists: index infinite")
    return report.divisors[-1]


def verify_stabilizing(report: KummerReport, m: int, limit: int) -> bool:
    """Check ``c(m n) == c(m)`` for ``n = 1..limit``.

    The components of ``[m]^{-1}(X)`` are torsion translates of one another, so
    ``c(m n) = c(m) * c_Y(n)`` for any component ``Y``; equality for all ``n``
    says every component is Kummer-generic.
    """
    _check_n(m)
    _check_n(limit)
    base = component_count(report, m)
    return all(component_count(report, m * n) == base for n in range(1, limit + 1))


# -- brute-force oracles ---------------------------------------------------

def oracle_is_nth_power(f: RatFunc, n: int) -> bool:
    """True iff ``f = c * g^n`` for a constant ``c`` and ``g`` in Qbar(t).

    Over Qbar(t) this holds iff every multiplicity in the squarefree
    decompositions of numerator and denominator is divisible by ``n``.
    """
    _check_n(n)
    if f.is_zero():
        raise DomainError("zero is not in the multiplicative group")
    for poly in (f.num, f.den):
        for _, e in squarefree_decompose(poly).factors:
            if e % n:
                return False
    return True


def _irreducible_exponents(curve: TorusCurve):
    """Exponent of every Q-irreducible factor in every coordinate (via sympy)."""
    import sympy

    x = sympy.Symbol("t")
    table: dict = {}
    rows = []
    for c in curve.coords:
        row: dict = {}
        for poly, sign in ((c.num, 1), (c.den, -1)):
            if poly.is_constant():
                continue
            sp = sympy.Poly([sympy.Rational(q.numerator, q.denominator) for q in reversed(poly.coeffs)],
                            x, domain="QQ")
            _, facs = sp.factor_list()
            for g, e in facs:
                key = tuple(g.monic().all_coeffs())
                idx = table.setdefault(key, len(table))
                row[idx] = row.get(idx, 0) + sign * e
        rows.append(row)
    return [[row.get(j, 0) for j in range(len(table))] for row in rows]


def oracle_component_count(curve: TorusCurve, n: int, cap: int = DEFAULT_CAP,
                           method: str = "factor") -> int:
    """Count ``a in (Z/n)^k`` whose monomial ``prod b_i^{a_i}`` is an n-th power.

    ``method="expand"`` multiplies out every monomial and tests it with
    :func:`oracle_is_nth_power`; this is literal but slow.  ``method="factor"``
    factors each coordinate into irreducibles over Q once (sympy) and then
    checks, for each ``a``, that every irreducible occurs to a multiple of
    ``n``.  Neither route touches the gcd-free basis or the Smith form.
    """
    _check_n(n)
    k = curve.k
    if n**k > cap:
        raise ResourceError(f"oracle would enumerate {n}^{k} vectors, above the cap of {cap}", cap=cap)
    count = 0
    if method == "expand":
        for a in itertools.product(range(n), repeat=k):
            f = RatFunc(Poly.one())
            for c, ai in zip(curve.coords, a):
                if ai:
                    f = f * c**ai
            count += oracle_is_nth_power(f, n)
        return count
    if method != "factor":
        raise DomainError(f"unknown oracle method {method!r}")
    rows = _irreducible_exponents(curve)
    cols = list(zip(*rows)) if rows and rows[0] else []
    for a in itertools.product(range(n), repeat=k):
        if all(sum(ai * e for ai, e in zip(a, col)) % n == 0 for col in cols):
            count += 1
    return count
