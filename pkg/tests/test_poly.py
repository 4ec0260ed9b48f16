import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from kummergen.errors import DomainError
from kummergen.poly import (
    Poly,
    RatFunc,
    gcdfree_basis,
    log_derivative,
    poly_gcd,
    squarefree_decompose,
)

t = Poly.gen()
t2 = Poly.gen(2)
X = sympy.Symbol("t")


def to_sympy(f: Poly):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)] or [0],
                      X, domain="QQ")


small_int_polys = st.lists(st.integers(-5, 5), min_size=1, max_size=5).map(Poly)
nonzero_polys = small_int_polys.filter(lambda f: not f.is_zero())


def test_poly_normalizes_trailing_zeros():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([]).is_zero()
    assert Poly([0, 0]).degree == -1
    assert Poly([3, 5], p=2).coeffs == (1, 1)


def test_poly_is_immutable():
    with pytest.raises(AttributeError):
        t.coeffs = (1,)


def test_divmod_identity():
    a = t**5 + 3 * t**2 - 7
    b = 2 * t**2 + 1
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (t**2 - 1, Poly.zero(), t**2 - 1),
        (3 * t + 6, Poly.zero(), t + 2),
        (t**2 - 1, t**2 - 2 * t + 1, t - 1),
        (t2**2 + 1, t2 + 1, t2 + 1),
    ],
)
def test_poly_gcd_examples(a, b, expected):
    assert poly_gcd(a, b) == expected


def test_poly_gcd_both_zero():
    with pytest.raises(DomainError):
        poly_gcd(Poly.zero(), Poly.zero())


@settings(max_examples=60, deadline=None)
@given(nonzero_polys, nonzero_polys)
def test_poly_gcd_matches_sympy(a, b):
    assert to_sympy(poly_gcd(a, b)) == sympy.gcd(to_sympy(a), to_sympy(b)).monic()


def test_squarefree_examples():
    sq = squarefree_decompose(t * (1 + t) ** 2)
    assert sq.scalar == 1
    assert sq.factors == ((t, 1), (t + 1, 2))
    five = squarefree_decompose(Poly.constant(5))
    assert five.factors == () and five.scalar == 5
    assert squarefree_decompose(t2**2).factors == ((t2, 2),)


def test_squarefree_zero():
    with pytest.raises(DomainError):
        squarefree_decompose(Poly.zero())


@pytest.mark.parametrize("p", [2, 3, 5])
def test_squarefree_fp_handles_pth_powers(p):
    u = Poly.gen(p)
    f = u ** (p + 1) * (u + 1) ** p * (u**2 + u + 1) ** (2 * p)
    sq = squarefree_decompose(f)
    assert sq.expand() == f
    for g, _ in sq.factors:
        assert poly_gcd(g, g.derivative()).is_one()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(nonzero_polys, st.integers(1, 4)), min_size=1, max_size=3))
def test_squarefree_reconstructs_and_is_coprime(parts):
    f = Poly.one()
    for g, e in parts:
        f = f * g**e
    sq = squarefree_decompose(f)
    assert sq.expand() == f
    gs = [g for g, _ in sq.factors]
    for i, g in enumerate(gs):
        assert poly_gcd(g, g.derivative()).is_one()
        for h in gs[i + 1:]:
            assert poly_gcd(g, h).is_one()


def test_squarefree_matches_sympy_sqf():
    rng = random.Random(7)
    for _ in range(30):
        f = Poly.one()
        for _ in range(3):
            f = f * Poly([rng.randint(-4, 4) for _ in range(rng.randint(1, 3))] + [1]) ** rng.randint(1, 3)
        ours = {(tuple(g.coeffs), e) for g, e in squarefree_decompose(f).factors}
        _, theirs = sympy.sqf_list(to_sympy(f))
        theirs = {(tuple(Fraction(int(c.p), int(c.q)) for c in reversed(g.monic().all_coeffs())), e)
                  for g, e in theirs}
        assert ours == theirs


@pytest.mark.parametrize(
    "polys, basis, exps",
    [
        ([t * (t + 1) ** 2, (t + 1) ** 3], [t, t + 1], [[1, 2], [0, 3]]),
        ([t], [t], [[1]]),
        ([t**2 - 1, t - 1], [t - 1, t + 1], [[1, 1], [1, 0]]),
        ([Poly.constant(3)], [], [[]]),
    ],
)
def test_gcdfree_basis_examples(polys, basis, exps):
    b, e = gcdfree_basis(polys)
    assert b == basis
    assert e == exps


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=3),
                min_size=1, max_size=4),
       st.integers(0, 1000))
def test_gcdfree_basis_properties(shape, seed):
    rng = random.Random(seed)
    pool = [Poly([rng.randint(-3, 3) for _ in range(rng.randint(1, 2))] + [1]) for _ in range(4)]
    polys = []
    for fac in shape:
        f = Poly.one()
        for j, e in fac:
            f = f * pool[j] ** e
        polys.append(f)
    basis, exps = gcdfree_basis(polys)
    for f, row in zip(polys, exps):
        prod = Poly.one()
        for b, e in zip(basis, row):
            prod = prod * b**e
        assert prod == f.monic()
        assert all(e >= 0 for e in row)
    for i, b in enumerate(basis):
        assert b.degree >= 1 and b.lc == 1
        assert poly_gcd(b, b.derivative()).is_one()
        for c in basis[i + 1:]:
            assert poly_gcd(b, c).is_one()
    assert basis == sorted(basis, key=Poly.sort_key)


def test_ratfunc_lowest_terms():
    f = RatFunc(t**2 - 1, 2 * t - 2)
    assert f.num == Fraction(1, 2) * (t + 1)
    assert f.den == Poly.one()
    z = RatFunc(Poly.zero(), t + 1)
    assert z.den.is_one()


def test_ratfunc_arithmetic_and_eval():
    x = RatFunc.gen()
    f = (x + 1) / (x - 1)
    assert f * (x - 1) == x + 1
    assert f(3) == 2
    assert (x**-2) * x**2 == 1
    with pytest.raises(ZeroDivisionError):
        f(1)


def test_ratfunc_substitute():
    x = RatFunc.gen()
    f = (x + 1) ** 2 / x
    assert f.substitute(1 / x) == (1 + x) ** 2 / x
    assert f.substitute(x + 2) == (x + 3) ** 2 / (x + 2)


def test_log_derivative_examples():
    x = RatFunc.gen()
    assert log_derivative(x) == 1 / x
    assert log_derivative((1 + x) ** 2) == 2 / (1 + x)
    assert log_derivative(RatFunc(Poly.constant(7))).is_zero()
    with pytest.raises(DomainError):
        log_derivative(RatFunc(Poly.zero()))


def _rand_rf(rng):
    num = Poly([rng.randint(-4, 4) for _ in range(rng.randint(1, 4))])
    den = Poly([rng.randint(-4, 4) for _ in range(rng.randint(1, 3))] + [1])
    if num.is_zero():
        num = Poly.one()
    return RatFunc(num, den)


def test_log_derivative_is_additive():
    rng = random.Random(3)
    for _ in range(40):
        f, g = _rand_rf(rng), _rand_rf(rng)
        assert log_derivative(f * g) == log_derivative(f) + log_derivative(g)


def test_str_round_trips_through_parser():
    from kummergen.expr import parse_curve

    for f in [t**3 - Fraction(1, 2) * t + 4, -t, Poly.constant(-3)]:
        assert parse_curve(str(f) if not f.is_zero() else "0").coords[0] == RatFunc(f)


def test_copy_and_pickle():
    import copy
    import pickle

    f = RatFunc(t**2 + Fraction(1, 3), t - 1)
    assert copy.deepcopy(f) is f
    assert pickle.loads(pickle.dumps(f)) == f
    assert pickle.loads(pickle.dumps(t2 + 1)) == t2 + 1
