"""Dense univariate polynomials and rational functions over Q or F_p.

A single :class:`Poly` type covers both fields; the modulus ``p`` is the field
tag (``p == 0`` means the rationals, coefficients are ``Fraction``; otherwise
coefficients are ints in ``[0, p)``).  Values are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError

__all__ = [
    "Poly",
    "RatFunc",
    "SquarefreePart",
    "poly_gcd",
    "poly_lcm",
    "squarefree_decompose",
    "gcdfree_basis",
    "log_derivative",
]


def _coerce(c, p):
    if p:
        if isinstance(c, Fraction):
            if c.denominator % p == 0:
                raise DomainError(f"denominator of {c} is not invertible mod {p}")
            return c.numerator * pow(c.denominator, -1, p) % p
        return int(c) % p
    return Fraction(c)


def _inv(c, p):
    if not c:
        raise ZeroDivisionError("inverse of zero")
    if p:
        return pow(c, -1, p)
    return 1 / c


class Poly:
    """Polynomial in ``t`` with coefficients listed from the constant term up."""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs: Iterable = (), p: int = 0):
        cs = [_coerce(c, p) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def __reduce__(self):
        return (Poly._raw, (self.coeffs, self.p))

    @classmethod
    def _raw(cls, coeffs, p):
        # coeffs already reduced; only strips trailing zeros
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", tuple(cs))
        object.__setattr__(obj, "p", p)
        return obj

    @classmethod
    def zero(cls, p=0):
        return cls._raw((), p)

    @classmethod
    def one(cls, p=0):
        return cls.constant(1, p)

    @classmethod
    def constant(cls, c, p=0):
        return cls((c,), p)

    @classmethod
    def gen(cls, p=0):
        """The variable ``t``."""
        return cls((0, 1), p)

    @classmethod
    def monomial(cls, c, n, p=0):
        return cls([0] * n + [c], p)

    # -- basic queries -------------------------------------------------
    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self._zero_scalar()

    def _zero_scalar(self):
        return 0 if self.p else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self._zero_scalar()

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other, self.p)
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def sort_key(self):
        """Degree first, then coefficients from the top down."""
        return (self.degree, tuple(self.coeffs[::-1]))

    def _check(self, other):
        if isinstance(other, Poly):
            if other.p != self.p:
                raise DomainError(f"field mismatch: p={self.p} vs p={other.p}")
            return other
        return Poly.constant(other, self.p)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        if self.p:
            out = [c % self.p for c in out]
        return Poly._raw(out, self.p)

    __radd__ = __add__

    def __neg__(self):
        if self.p:
            return Poly._raw([(-c) % self.p for c in self.coeffs], self.p)
        return Poly._raw([-c for c in self.coeffs], self.p)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _coerce(other, self.p)
            if self.p:
                return Poly._raw([x * c % self.p for x in self.coeffs], self.p)
            return Poly._raw([x * c for x in self.coeffs], self.p)
        other = self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.p)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        if self.p:
            out = [c % self.p for c in out]
        return Poly._raw(out, self.p)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative exponent for a polynomial")
        result = Poly.one(self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return Poly.zero(p), self
        inv = _inv(other.lc, p)
        quo = [0] * (len(rem) - db)
        bc = other.coeffs
        # over F_p entries are reduced lazily, when read
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i] % p if p else rem[i]
            if not c:
                continue
            q = c * inv % p if p else c * inv
            quo[i - db] = q
            off = i - db
            for j in range(db + 1):
                rem[off + j] -= q * bc[j]
        low = [c % p for c in rem[:db]] if p else rem[:db]
        return Poly._raw(quo, p), Poly._raw(low, p)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise DomainError(f"{other} does not divide {self}")
        return q

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a scalar, a Poly or a RatFunc."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return self._zero_scalar()
        if self.p and isinstance(acc, int):
            return acc % self.p
        return acc

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:], self.p)

    def monic(self):
        if self.is_zero():
            return self
        return self * _inv(self.lc, self.p)

    def compose(self, other: "Poly") -> "Poly":
        other = self._check(other)
        acc = Poly.zero(self.p)
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def __repr__(self):
        cs = ", ".join(repr(_fmt_scalar(c)) if isinstance(c, Fraction) and c.denominator != 1
                       else str(int(c)) for c in self.coeffs)
        return f"Poly([{cs}], p={self.p})"

    def __str__(self):
        return format_poly(self)


def _fmt_scalar(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def format_poly(f: Poly, var: str = "t") -> str:
    """Render ``f`` in the input-expression syntax, highest degree first."""
    if f.is_zero():
        return "0"
    parts = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        neg = not f.p and c < 0
        mag = -c if neg else c
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            body = _fmt_scalar(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_scalar(mag)}*{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    if a.is_zero() and b.is_zero():
        raise DomainError("gcd of two zero polynomials is undefined")
    if a.p != b.p:
        raise DomainError("gcd of polynomials over different fields")
    while b:
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly.zero(a.p)
    return (a * b.exact_div(poly_gcd(a, b))).monic()


@dataclass(frozen=True)
class SquarefreePart:
    """``scalar * prod(g ** e for g, e in factors)``."""

    scalar: object
    factors: tuple

    def expand(self) -> Poly:
        p = self.factors[0][0].p if self.factors else (0 if isinstance(self.scalar, Fraction) else None)
        acc = None
        for g, e in self.factors:
            acc = g ** e if acc is None else acc * g ** e
        if acc is None:
            if p is None:
                raise DomainError("cannot infer field of an empty decomposition")
            return Poly.constant(self.scalar, p)
        return acc * self.scalar


def _pth_root_coeffs(f: Poly) -> Poly:
    # f(t) = g(t)^p with coefficients in F_p, so g(t) = sum c_{ip} t^i
    p = f.p
    return Poly._raw(f.coeffs[::p], p)


def _sqf_fp(f: Poly) -> list:
    """Squarefree factorization of a monic polynomial over F_p."""
    p = f.p
    out = []
    if f.is_constant():
        return out
    df = f.derivative()
    if df.is_zero():
        return [(g, e * p) for g, e in _sqf_fp(_pth_root_coeffs(f))]
    c = poly_gcd(f, df)
    w = f // c
    i = 1
    while not w.is_one():
        y = poly_gcd(w, c)
        fac = w // y
        if not fac.is_constant():
            out.append((fac, i))
        w = y
        c = c // y
        i += 1
    if not c.is_constant():
        out.extend((g, e * p) for g, e in _sqf_fp(_pth_root_coeffs(c)))
    return out


def _sqf_yun(f: Poly) -> list:
    """Yun's algorithm for a monic polynomial in characteristic 0."""
    out = []
    if f.is_constant():
        return out
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f // a
    c = df // a
    d = c - b.derivative()
    i = 1
    while not b.is_constant():
        g = poly_gcd(b, d)
        if not g.is_constant():
            out.append((g, i))
        b = b // g
        c = d // g
        d = c - b.derivative()
        i += 1
    return out


def squarefree_decompose(f: Poly) -> SquarefreePart:
    """Write ``f`` as scalar times a product of pairwise coprime squarefree powers.

    Over the rationals this is Yun's algorithm; over F_p the derivative can
    vanish on p-th powers, so those parts are split off and recursed on.
    Factors are sorted by exponent, then by :meth:`Poly.sort_key`.
    """
    if f.is_zero():
        raise DomainError("squarefree decomposition of the zero polynomial")
    scalar = f.lc
    g = f.monic()
    facs = _sqf_fp(g) if f.p else _sqf_yun(g)
    facs.sort(key=lambda ge: (ge[1], ge[0].sort_key()))
    return SquarefreePart(scalar, tuple(facs))


def gcdfree_basis(polys: Sequence[Poly]):
    """Coarsest coprime squarefree basis of a list of nonzero polynomials.

    Returns ``(basis, exponents)`` with ``monic(polys[i]) == prod(basis[j] **
    exponents[i][j])``.  Each input is first broken into its squarefree parts,
    then pairs with a nontrivial gcd ``g`` are split into ``a/g, g, b/g`` until
    the whole set is pairwise coprime.
    """
    pieces = []
    p = 0
    for f in polys:
        if f.is_zero():
            raise DomainError("gcd-free basis of a zero polynomial")
        p = f.p
        for g, _ in squarefree_decompose(f).factors:
            pieces.append(g)
    basis: list[Poly] = []
    for a in pieces:
        pending = [a]
        while pending:
            x = pending.pop()
            if x.is_constant():
                continue
            for idx, b in enumerate(basis):
                g = poly_gcd(x, b)
                if g.is_constant():
                    continue
                del basis[idx]
                for piece in (b // g, g):
                    if not piece.is_constant():
                        basis.append(piece.monic())
                pending.append(x // g)
                break
            else:
                basis.append(x.monic())
    basis.sort(key=Poly.sort_key)
    exponents = []
    for f in polys:
        rest = f.monic()
        row = []
        for b in basis:
            e = 0
            while True:
                q, r = divmod(rest, b)
                if r:
                    break
                rest = q
                e += 1
            row.append(e)
        if not rest.is_one():
            raise AssertionError(f"gcd-free basis failed to reconstruct {f}")
        exponents.append(row)
    return basis, exponents


class RatFunc:
    """Quotient ``num/den`` in lowest terms with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, p: int | None = None):
        if not isinstance(num, Poly):
            num = Poly.constant(num, p if p is not None else (den.p if isinstance(den, Poly) else 0))
        if den is None:
            den = Poly.one(num.p)
        elif not isinstance(den, Poly):
            den = Poly.constant(den, num.p)
        if den.p != num.p:
            raise DomainError("numerator and denominator over different fields")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = num, Poly.one(num.p)
        else:
            g = poly_gcd(num, den)
            if not g.is_one():
                num, den = num // g, den // g
            s = _inv(den.lc, num.p)
            num, den = num * s, den * s
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def __reduce__(self):
        return (RatFunc, (self.num, self.den))

    @classmethod
    def gen(cls, p=0):
        return cls(Poly.gen(p))

    @property
    def p(self) -> int:
        return self.num.p

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def _lift(self, other):
        if isinstance(other, RatFunc):
            if other.p != self.p:
                raise DomainError("field mismatch")
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        return RatFunc(Poly.constant(other, self.p))

    def __eq__(self, other):
        if isinstance(other, (RatFunc, Poly, int, Fraction)):
            other = self._lift(other)
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n: int):
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RatFunc(self.den ** (-n), self.num ** (-n))
        return RatFunc(self.num ** n, self.den ** n)

    def derivative(self):
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __call__(self, x):
        if isinstance(x, (Poly, RatFunc)):
            return self.substitute(self._lift(x))
        d = self.den(x)
        if not d:
            raise ZeroDivisionError(f"pole at {x}")
        n = self.num(x)
        return n * _inv(d, self.p) if self.p else Fraction(n) / d

    def substitute(self, x: "RatFunc") -> "RatFunc":
        """Composition ``self(x(t))``."""
        num = _horner_rf(self.num, x)
        den = _horner_rf(self.den, x)
        return num / den

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        return format_ratfunc(self)


def _horner_rf(f: Poly, x: RatFunc) -> RatFunc:
    acc = RatFunc(Poly.zero(f.p))
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def format_ratfunc(f: RatFunc, var: str = "t") -> str:
    num = format_poly(f.num, var)
    if f.den.is_one():
        return num
    if len([c for c in f.num.coeffs if c]) > 1:
        num = f"({num})"
    return f"{num}/({format_poly(f.den, var)})"


def log_derivative(f: RatFunc) -> RatFunc:
    """``f'/f`` in lowest terms."""
    if f.is_zero():
        raise DomainError("logarithmic derivative of zero")
    return f.derivative() / f
