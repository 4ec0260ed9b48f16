"""One-parameter families of torus curves: specialization, scans, degenerations.

A family's coordinates are rational functions in ``t`` whose coefficients are
polynomials in a parameter (``c`` by default).  Bivariate cancellation,
factorization, resultants and discriminants go through sympy; each fiber is
then analysed with the exact univariate machinery.

The candidate set returned by :func:`degeneration_candidates` is sound on the
families we test: away from its roots no two places of a fiber collide, none
escapes to infinity and no coordinate degenerates, so the valuation matrix
keeps its shape.  Minimality is not attempted, and sufficiency in general is
not proved.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import sympy

from .errors import DomainError, KummerError
from .expr import VAR, evaluate, parse_list, pretty
from .kummer import KummerReport, TorusCurve, analyze
from .poly import Poly, RatFunc

__all__ = ["FamilySpec", "ScanRow", "ScanResult", "specialize", "scan", "degeneration_candidates"]

_T = sympy.Symbol(VAR)


@dataclass(frozen=True)
class FamilySpec:
    coords: tuple  # expression trees in t and the parameter
    param: str = "c"

    @classmethod
    def parse(cls, text: str, param: str = "c") -> "FamilySpec":
        if param == VAR:
            raise DomainError(f"the parameter cannot be named {VAR!r}")
        family = cls(tuple(parse_list(text, params=(param,))), param)
        family._symbolic()  # reject degenerate coordinates early
        return family

    @property
    def k(self) -> int:
        return len(self.coords)

    def __str__(self):
        return ", ".join(pretty(n) for n in self.coords)

    def _symbolic(self):
        c = sympy.Symbol(self.param)
        env = {VAR: _T, self.param: c}
        out = []
        for i, node in enumerate(self.coords, 1):
            try:
                expr = evaluate(node, env, lambda v: sympy.Rational(v.numerator, v.denominator))
            except ZeroDivisionError:
                expr = sympy.zoo
            if expr.has(sympy.zoo, sympy.nan):
                raise DomainError(f"coordinate {i} divides by zero identically")
            num, den = sympy.fraction(sympy.cancel(sympy.together(expr)))
            if num == 0:
                raise DomainError(f"coordinate {i} is identically zero")
            out.append((sympy.Poly(num, _T, c), sympy.Poly(den, _T, c)))
        return c, out


def _frac(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def _specialize_poly(poly: sympy.Poly, value: Fraction) -> Poly:
    # poly in (t, c) -> univariate Poly in t over Q
    v = sympy.Rational(value.numerator, value.denominator)
    coeffs: dict = {}
    for (dt, dc), a in poly.terms():
        coeffs[dt] = coeffs.get(dt, 0) + a * v**dc
    deg = max(coeffs, default=0)
    return Poly([_frac(coeffs.get(i, 0)) for i in range(deg + 1)])


def specialize(family: FamilySpec, value) -> TorusCurve:
    """The fiber at ``param = value`` with coordinates in lowest terms."""
    value = Fraction(value)
    _, sym = family._symbolic()
    coords = []
    for i, (num, den) in enumerate(sym, 1):
        n = _specialize_poly(num, value)
        d = _specialize_poly(den, value)
        if d.is_zero():
            raise DomainError(f"coordinate {i} has a vanishing denominator at {family.param} = {value}")
        if n.is_zero():
            raise DomainError(f"coordinate {i} vanishes identically at {family.param} = {value}")
        coords.append(RatFunc(n, d))
    return TorusCurve(tuple(coords))


@dataclass(frozen=True)
class ScanRow:
    value: Fraction
    report: KummerReport | None = None
    signature: str | None = None
    error: str | None = None


@dataclass(frozen=True)
class ScanResult:
    rows: tuple
    strata: dict = field(compare=True)
    max_index: object = None

    def signatures(self):
        return sorted(self.strata)


def scan(family: FamilySpec, values: Sequence) -> ScanResult:
    """Analyse every fiber; bad specializations become error rows."""
    vals = sorted({Fraction(v) for v in values})
    if len(vals) != len(values):
        raise DomainError("scan values must be pairwise distinct")
    rows = []
    strata: dict = {}
    max_index = None
    for v in vals:
        try:
            report = analyze(specialize(family, v))
        except KummerError as exc:
            rows.append(ScanRow(v, error=str(exc)))
            continue
        sig = report.signature
        rows.append(ScanRow(v, report, sig))
        strata.setdefault(sig, []).append(v)
        if report.free and (max_index is None or report.index > max_index):
            max_index = report.index
    strata = {s: tuple(vs) for s, vs in sorted(strata.items())}
    return ScanResult(tuple(rows), strata, max_index)


def _to_univariate(expr, c) -> Poly:
    poly = sympy.Poly(expr, c)
    return Poly([_frac(a) for a in reversed(poly.all_coeffs())])


def degeneration_candidates(family: FamilySpec) -> list:
    """Polynomials in the parameter whose roots contain every exceptional fiber.

    Collected from the irreducible factors (over Q[t, c]) of all numerators
    and denominators: factors free of ``t``, leading coefficients in ``t``,
    discriminants, and pairwise resultants.  Returned monic, deduplicated and
    sorted; constants are dropped.
    """
    c, sym = family._symbolic()
    factors = []
    for num, den in sym:
        for poly in (num, den):
            for g, _ in sympy.factor_list(poly.as_expr(), _T, c)[1]:
                g = sympy.Poly(g, _T, c)
                if g.total_degree() > 0 and g not in factors:
                    factors.append(g)
    conds = []
    for g in factors:
        gt = sympy.Poly(g.as_expr(), _T)
        if gt.degree() == 0:
            conds.append(g.as_expr())
            continue
        conds.append(gt.LC())
        if gt.degree() >= 2:
            conds.append(sympy.discriminant(g.as_expr(), _T))
    for g, h in itertools.combinations(factors, 2):
        if sympy.Poly(g.as_expr(), _T).degree() and sympy.Poly(h.as_expr(), _T).degree():
            conds.append(sympy.resultant(g.as_expr(), h.as_expr(), _T))
    out = []
    for expr in conds:
        expr = sympy.expand(expr)
        if expr == 0 or not expr.has(c):
            continue
        poly = _to_univariate(expr, c).monic()
        if poly not in out:
            out.append(poly)
    out.sort(key=Poly.sort_key)
    return out
