"""Additive analogue in characteristic p: the Artin-Schreier map x -> x^p - x.

For a curve ``t -> (f_1, ..., f_k)`` in G_a^k over F_p, the pullback under
``wp(x) = x^p - x`` (coordinatewise) has as many irreducible components as
there are ``a in F_p^k`` with ``sum a_i f_i`` in ``wp(F) + constants``, where
``F = Fbar_p(t)``.  Membership is decided by reducing modulo ``wp(F)``: every
partial-fraction term whose pole order (or polynomial degree) is divisible by
``p`` can be traded for a lower one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DomainError, ResourceError
from .finite_field import MAX_PRIME, factor_fp, is_prime, partial_fractions, pth_root_mod
from .lattice import DEFAULT_CAP
from .linalg import field_rank
from .poly import Poly, RatFunc, poly_lcm

__all__ = [
    "AdditiveCurve",
    "WpReducedForm",
    "wp",
    "wp_reduce",
    "is_wp_member",
    "as_component_count",
    "is_as_generic_level1",
    "is_free_additive",
]


@dataclass(frozen=True)
class AdditiveCurve:
    p: int
    coords: tuple

    def __post_init__(self):
        if not is_prime(self.p) or self.p > MAX_PRIME:
            raise DomainError(f"p = {self.p} is not a supported prime")
        coords = tuple(c if isinstance(c, RatFunc) else RatFunc(c) for c in self.coords)
        if not coords:
            raise DomainError("an additive curve needs at least one coordinate")
        for i, c in enumerate(coords, 1):
            if c.p != self.p:
                raise DomainError(f"coordinate {i} is not over F_{self.p}")
        object.__setattr__(self, "coords", coords)

    @property
    def k(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class WpReducedForm:
    """Certificate ``f == wp(g) + r`` with ``r`` reduced."""

    g: RatFunc
    r: RatFunc


def wp(x: RatFunc) -> RatFunc:
    return x ** x.p - x


def _base_q_digits(f: Poly, q: Poly) -> list:
    """Digits ``s_j`` (each of degree < deg q) with ``f = sum s_j q^j``."""
    digits = []
    while not f.is_zero():
        f, d = divmod(f, q)
        digits.append(d)
    return digits


def wp_reduce(f: RatFunc, seed: int = 0) -> WpReducedForm:
    """Reduce ``f`` modulo ``wp(F_p(t))``.

    A pole term ``c / q^(p m)`` is removed by subtracting ``wp(e / q^m)`` where
    ``e^p = c`` in the residue field ``F_p[t]/q``; this only adds terms at ``q``
    of order below ``p m``, so one descending pass per place suffices.  A
    monomial ``c t^(p m)`` is removed by subtracting ``wp(c t^m)`` (``c^p = c``
    in F_p), which only adds the lower monomial ``c t^m``.
    """
    p = f.p
    if not p:
        raise DomainError("Artin-Schreier reduction needs characteristic p")
    zero = Poly.zero(p)
    factors = [q for q, _ in factor_fp(f.den, seed=seed)] if not f.den.is_constant() else []
    poly_part, poles = partial_fractions(f, seed=seed, factors=factors)
    g = RatFunc(zero)
    r = RatFunc(zero)
    for q, terms in poles:
        coef = dict(terms)
        for m in range(max(coef), 0, -1):
            c = coef.get(m, zero)
            if c.is_zero() or m % p:
                continue
            e = pth_root_mod(c, q)
            g = g + RatFunc(e, q ** (m // p))
            # e^p / q^m expands at q with orders m, m-1, ..., m-p+1 only
            for j, d in enumerate(_base_q_digits(e**p, q)):
                coef[m - j] = coef.get(m - j, zero) - d
            coef[m // p] = coef.get(m // p, zero) + e
        for m, c in coef.items():
            if not c.is_zero():
                r = r + RatFunc(c, q**m)
    cs = list(poly_part.coeffs)
    for j in range(len(cs) - 1, 0, -1):
        if j % p == 0 and cs[j]:
            c = cs[j]
            g = g + RatFunc(Poly.monomial(c, j // p, p))
            cs[j] = 0
            cs[j // p] = (cs[j // p] + c) % p
    return WpReducedForm(g, r + RatFunc(Poly(cs, p)))


def is_wp_member(f: RatFunc, seed: int = 0) -> bool:
    """True iff ``f`` lies in ``wp(F) + constants``."""
    return wp_reduce(f, seed=seed).r.is_constant()


def as_component_count(curve: AdditiveCurve, cap: int = DEFAULT_CAP, seed: int = 0) -> int:
    """Number of irreducible components of ``wp^{-1}(X)``.

    Enumerates ``a in F_p^k``.  Each coordinate is reduced once; reduced forms
    are closed under F_p-linear combinations (partial fractions are unique), so
    ``sum a_i f_i`` is a member iff ``sum a_i r_i`` is constant.
    """
    p, k = curve.p, curve.k
    if p**k > cap:
        raise ResourceError(f"enumeration of {p}^{k} vectors exceeds the cap of {cap}", cap=cap)
    rems = [wp_reduce(c, seed=seed).r for c in curve.coords]
    count = 0
    zero = RatFunc(Poly.zero(p))
    for a in itertools.product(range(p), repeat=k):
        s = zero
        for ai, r in zip(a, rems):
            if ai:
                s = s + r * ai
        count += s.is_constant()
    return count


def is_as_generic_level1(curve: AdditiveCurve, cap: int = DEFAULT_CAP, seed: int = 0) -> bool:
    return as_component_count(curve, cap=cap, seed=seed) == 1


def is_free_additive(curve: AdditiveCurve) -> bool:
    """Linear independence of the derivatives ``f_i'`` over the constants.

    The derivative kills exactly the constants and the p-th powers, so a
    Frobenius-type dependence such as ``(t, t^p)`` is caught.
    """
    p = curve.p
    ders = [c.derivative() for c in curve.coords]
    common = Poly.one(p)
    for d in ders:
        common = poly_lcm(common, d.den)
    rows = [list((d.num * (common // d.den)).coeffs) for d in ders]
    width = max((len(r) for r in rows), default=0)
    rows = [r + [0] * (width - len(r)) for r in rows]
    return field_rank(rows, p) == curve.k
