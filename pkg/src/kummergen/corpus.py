"""Seeded random curves for cross-checks and the self-test."""

from __future__ import annotations

import random
from fractions import Fraction

from .kummer import TorusCurve
from .poly import Poly, RatFunc

__all__ = ["random_poly", "random_torus_curve", "torus_corpus", "engineered_curves", "random_ratfunc_fp"]


def random_poly(rng: random.Random, max_degree=3, coeff_range=5, p=0) -> Poly:
    """Nonconstant polynomial with integer coefficients in ``[-r, r]``."""
    while True:
        d = rng.randint(1, max_degree)
        cs = [rng.randint(-coeff_range, coeff_range) for _ in range(d)]
        lead = 0
        while lead == 0:
            lead = rng.randint(-coeff_range, coeff_range)
        f = Poly(cs + [lead], p)
        if f.degree >= 1:
            return f


def random_torus_curve(rng: random.Random, k=None, pool_size=None, max_degree=3,
                       exp_range=3, coeff_range=5) -> TorusCurve:
    """Coordinates are scalar multiples of products ``prod g_j^{e_ij}`` over a
    shared pool of random polynomials, so places recur across coordinates."""
    k = k or rng.randint(1, 3)
    pool_size = pool_size or rng.randint(1, 4)
    pool = [random_poly(rng, max_degree, coeff_range) for _ in range(pool_size)]
    coords = []
    for _ in range(k):
        f = RatFunc(Poly.constant(rng.choice([x for x in range(-coeff_range, coeff_range + 1) if x])))
        for g in pool:
            e = rng.randint(-exp_range, exp_range)
            if e:
                f = f * RatFunc(g) ** e
        coords.append(f)
    return TorusCurve(tuple(coords))


def torus_corpus(size=200, seed=20261019) -> list:
    rng = random.Random(seed)
    return [random_torus_curve(rng) for _ in range(size)]


def engineered_curves() -> list:
    """Hand-built non-free and degenerate cases."""
    t = RatFunc.gen()
    c = lambda v: RatFunc(Poly.constant(Fraction(v)))
    return [
        TorusCurve((t**2, t**3)),
        TorusCurve((t, t)),
        TorusCurve((c(5), c(7))),
        TorusCurve((c(3), t)),
        TorusCurve((c(2),)),
        TorusCurve((t, 1 + t, t * (1 + t))),
        TorusCurve((t / (1 + t), (1 + t) / t)),
    ]


def random_ratfunc_fp(rng: random.Random, p: int, max_degree=6) -> RatFunc:
    """Random element of F_p(t) with a small, often repeated, denominator."""
    num = Poly([rng.randrange(p) for _ in range(rng.randint(0, max_degree + 1))], p)
    den = Poly.one(p)
    for _ in range(rng.randint(0, 3)):
        g = Poly([rng.randrange(p) for _ in range(rng.randint(1, 2))] + [1], p)
        den = den * g ** rng.randint(1, 2 * p)
    return RatFunc(num, den)
