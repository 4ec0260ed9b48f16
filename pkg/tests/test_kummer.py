import dataclasses
import math
import random
from fractions import Fraction

import pytest

from kummergen.corpus import engineered_curves, random_torus_curve, torus_corpus
from kummergen.errors import DomainError, ResourceError
from kummergen.kummer import (
    TorusCurve,
    analyze,
    component_count,
    is_free_alternant,
    is_free_rank,
    is_kummer_generic,
    is_n_kummer_generic,
    oracle_component_count,
    oracle_is_nth_power,
    stabilizing_level,
    valuation_matrix,
    verify_stabilizing,
)
from kummergen.lattice import identity, matmul
from kummergen.poly import Poly, RatFunc

t = RatFunc.gen()


def const(v):
    return RatFunc(Poly.constant(Fraction(v)))


PARABOLA = TorusCurve((t, (1 + t) ** 2))


def summary(report):
    """Report fields that do not depend on the chosen coordinates of the line."""
    d = dataclasses.asdict(report)
    d.pop("valuation")
    return d


@pytest.fixture(scope="module")
def corpus():
    return torus_corpus(size=60, seed=4242) + engineered_curves()


def test_torus_curve_rejects_zero_coordinate():
    with pytest.raises(DomainError, match="coordinate 2"):
        TorusCurve((t, RatFunc(Poly.zero())))


def test_valuation_matrix_examples():
    vm = valuation_matrix(PARABOLA)
    assert vm.basis == (Poly.gen(), Poly.gen() + 1)
    assert vm.matrix == ((1, 0), (0, 2))
    vm = valuation_matrix(TorusCurve((t,)))
    assert vm.basis == (Poly.gen(),) and vm.matrix == ((1,),)
    vm = valuation_matrix(TorusCurve((const(5), const(7))))
    assert vm.basis == () and vm.matrix == ((), ())


def test_valuation_matrix_denominators_are_negative():
    vm = valuation_matrix(TorusCurve((t**2 / (t + 1) ** 3,)))
    assert vm.matrix == ((2, -3),)


def test_valuation_matrix_reconstructs(corpus):
    for curve in corpus:
        vm = valuation_matrix(curve)
        for c, row in zip(curve.coords, vm.matrix):
            prod = RatFunc(Poly.one())
            for b, e in zip(vm.basis, row):
                prod = prod * RatFunc(b) ** e
            ratio = c / prod
            assert ratio.is_constant()


@pytest.mark.parametrize(
    "coords, free",
    [((t, (1 + t) ** 2), True), ((t**2, t**3), False), ((t, t), False), ((const(3), t), False)],
)
def test_freeness_examples(coords, free):
    curve = TorusCurve(coords)
    assert is_free_rank(curve) is free
    assert is_free_alternant(curve) is free


def test_freeness_tests_agree(corpus):
    for curve in corpus:
        assert is_free_rank(curve) == is_free_alternant(curve), str(curve)


def test_analyze_doubled_parabola():
    r = analyze(PARABOLA)
    assert r.divisors == (1, 2)
    assert r.free and r.index == 2 and r.exponent == 2
    assert r.obstruction_primes == (2,)
    assert not r.kummer_generic
    assert r.stabilizing_level == 2


def test_analyze_whole_torus_is_kummer_generic():
    r = analyze(TorusCurve((t,)))
    assert r.divisors == (1,) and r.kummer_generic


def test_analyze_non_free():
    r = analyze(TorusCurve((t, t)))
    assert r.divisors == (1, 0)
    assert not r.free and r.index == math.inf
    assert r.obstruction_primes is None
    with pytest.raises(DomainError, match="index infinite"):
        stabilizing_level(r)


def test_n_kummer_generic_examples():
    r = analyze(PARABOLA)
    assert not is_n_kummer_generic(r, 2)
    assert is_n_kummer_generic(r, 3)
    assert is_n_kummer_generic(r, 1)
    with pytest.raises(DomainError):
        is_n_kummer_generic(r, 0)


def test_kummer_generic_examples():
    assert is_kummer_generic(analyze(TorusCurve((t, 1 + t))))
    assert not is_kummer_generic(analyze(PARABOLA))
    assert not is_kummer_generic(analyze(TorusCurve((t, t))))


def test_component_count_examples():
    r = analyze(PARABOLA)
    assert component_count(r, 2) == 2
    assert component_count(r, 3) == 1
    diag = analyze(TorusCurve((t, t)))
    assert [component_count(diag, n) for n in range(1, 9)] == list(range(1, 9))
    with pytest.raises(DomainError):
        component_count(r, 0)


def test_stabilizing_level_examples():
    assert stabilizing_level(analyze(PARABOLA)) == 2
    assert stabilizing_level(analyze(TorusCurve((t, 1 + t)))) == 1


def test_stabilizing_level_of_mixed_matrix():
    # M = [[1, 0], [3, 6]] has determinant 6 and unit content, so divisors (1, 6)
    curve = TorusCurve((t, (1 + t) ** 6 * t**3))
    r = analyze(curve)
    assert r.divisors == (1, 6)
    assert stabilizing_level(r) == 6
    assert [oracle_component_count(curve, n) for n in range(1, 13)] == \
        [component_count(r, n) for n in range(1, 13)]
    assert oracle_component_count(curve, 6) == 6 and oracle_component_count(curve, 3) == 3


def test_verify_stabilizing_examples():
    r = analyze(PARABOLA)
    assert verify_stabilizing(r, 2, 20)
    assert not verify_stabilizing(r, 1, 2)
    assert verify_stabilizing(analyze(TorusCurve((t, 1 + t))), 1, 50)
    with pytest.raises(DomainError):
        verify_stabilizing(r, 0, 5)


def test_oracle_is_nth_power_examples():
    assert oracle_is_nth_power((1 + t) ** 2, 2)
    assert not oracle_is_nth_power(t * (1 + t) ** 2, 2)
    assert oracle_is_nth_power(const(7), 5)
    assert oracle_is_nth_power(const(-3) * t**6 / (t - 2) ** 3, 3)
    with pytest.raises(DomainError):
        oracle_is_nth_power(RatFunc(Poly.zero()), 2)
    with pytest.raises(DomainError):
        oracle_is_nth_power(t, 0)


@pytest.mark.parametrize("method", ["factor", "expand"])
def test_oracle_component_count_examples(method):
    assert oracle_component_count(PARABOLA, 2, method=method) == 2
    assert oracle_component_count(TorusCurve((t, 1 + t)), 5, method=method) == 1
    assert oracle_component_count(TorusCurve((t, t)), 4, method=method) == 4


def test_oracle_cap():
    with pytest.raises(ResourceError):
        oracle_component_count(TorusCurve((t, t, t)), 11, cap=1000)


def test_oracle_methods_agree_with_smith(corpus):
    # the literal expand route is slow; keep it to small enumerations
    for curve in corpus[:15]:
        r = analyze(curve)
        for n in range(2, 4):
            if n**curve.k > 27:
                continue
            c = component_count(r, n)
            assert oracle_component_count(curve, n, method="expand") == c
            assert oracle_component_count(curve, n, method="factor") == c


def test_component_count_properties(corpus):
    for curve in corpus:
        r = analyze(curve)
        assert component_count(r, 1) == 1
        for n in range(1, 25):
            c = component_count(r, n)
            assert n**r.k % c == 0
            if r.free:
                assert c <= r.index
                if n % r.divisors[-1] == 0:
                    assert c == r.index
            else:
                assert c >= n


def test_stabilizing_level_is_least(corpus):
    for curve in corpus:
        r = analyze(curve)
        if not r.free:
            continue
        m = stabilizing_level(r)
        # a limit of m reaches every prime of the exponent
        limit = max(m, 20)
        assert verify_stabilizing(r, m, limit)
        assert not any(verify_stabilizing(r, mp, limit) for mp in range(1, m))


def random_unimodular(rng, k):
    u = identity(k)
    for _ in range(3):
        i, j = rng.sample(range(k), 2) if k > 1 else (0, 0)
        e = identity(k)
        if i == j:
            e[0][0] = -1
        else:
            e[i][j] = rng.choice([-1, 1])
        u = matmul(e, u)
    return u


def test_torus_automorphism_invariance(corpus):
    rng = random.Random(9)
    for curve in corpus[:40]:
        u = random_unimodular(rng, curve.k)
        coords = []
        for row in u:
            f = RatFunc(Poly.one())
            for c, e in zip(curve.coords, row):
                f = f * c**e
            coords.append(f)
        a, b = analyze(curve), analyze(TorusCurve(tuple(coords)))
        assert (a.divisors, a.free, a.kummer_generic) == (b.divisors, b.free, b.kummer_generic)


def test_reparametrization_invariance(corpus):
    shifts = [t + 3, t - Fraction(1, 2), 2 * t, Fraction(-3, 7) * t]
    for curve in corpus[:30]:
        base = analyze(curve)
        for s in shifts:
            moved = TorusCurve(tuple(c.substitute(s) for c in curve.coords))
            assert summary(analyze(moved)) == summary(base)
        inverted = TorusCurve(tuple(c.substitute(1 / t) for c in curve.coords))
        assert analyze(inverted).divisors == base.divisors


def test_scalar_invariance(corpus):
    rng = random.Random(2)
    for curve in corpus[:30]:
        coords = [c * Fraction(rng.choice([-5, -2, 3, 7]), rng.choice([1, 2, 9])) for c in curve.coords]
        assert analyze(TorusCurve(tuple(coords))) == analyze(curve)


def test_random_curves_with_high_degree():
    rng = random.Random(31)
    for _ in range(10):
        curve = random_torus_curve(rng, k=2, max_degree=4)
        r = analyze(curve)
        for n in range(2, 8):
            assert oracle_component_count(curve, n) == component_count(r, n)
