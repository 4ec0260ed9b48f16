import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from kummergen.errors import DomainError, ResourceError
from kummergen.lattice import (
    determinant,
    enumerate_kernel_mod_n,
    identity,
    kernel_size_mod_n,
    matmul,
    rank,
    smith_normal_form,
)


def brute_kernel(m, n):
    k = len(m)
    s = len(m[0]) if m else 0
    return [
        a for a in itertools.product(range(n), repeat=k)
        if all(sum(a[i] * m[i][j] for i in range(k)) % n == 0 for j in range(s))
    ]


def determinantal_divisors(m):
    """gcd of all r x r minors, r = 1..min(k, s); the SNF-free oracle."""
    k = len(m)
    s = len(m[0]) if m else 0
    out = []
    for r in range(1, min(k, s) + 1):
        g = 0
        for rows in itertools.combinations(range(k), r):
            for cols in itertools.combinations(range(s), r):
                g = math.gcd(g, determinant([[m[i][j] for j in cols] for i in rows]))
        out.append(g)
    return out


matrices = st.integers(1, 3).flatmap(
    lambda k: st.integers(0, 3).flatmap(
        lambda s: st.lists(st.lists(st.integers(-6, 6), min_size=s, max_size=s), min_size=k, max_size=k)
    )
)


@pytest.mark.parametrize(
    "m, divisors",
    [
        ([[2]], (2,)),
        ([[1, 0], [0, 2]], (1, 2)),
        ([[4, 0], [0, 6]], (2, 12)),
        ([[1], [1]], (1, 0)),
        ([[], []], (0, 0)),
        ([[0, 0], [0, 0]], (0, 0)),
    ],
)
def test_snf_examples(m, divisors):
    assert smith_normal_form(m)[0] == divisors


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_certificate(m):
    d, u, v = smith_normal_form(m)
    k = len(m)
    s = len(m[0])
    assert abs(determinant(u)) == 1
    if s:
        assert abs(determinant(v)) == 1
    prod = matmul(matmul(u, m), v) if s else [[] for _ in range(k)]
    for i in range(k):
        for j in range(s):
            assert prod[i][j] == (d[i] if i == j else 0)
    nonzero = [x for x in d if x]
    assert d[: len(nonzero)] == tuple(nonzero)
    for a, b in zip(d, d[1:]):
        assert b % a == 0 if a else b == 0
    assert all(x >= 0 for x in d)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_matches_minor_gcds(m):
    d = smith_normal_form(m)[0]
    dets = determinantal_divisors(m)
    r = rank(m)
    acc = 1
    for i in range(r):
        acc *= d[i]
        assert acc == dets[i]


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rank_counts_nonzero_divisors(m):
    assert rank(m) == sum(1 for x in smith_normal_form(m)[0] if x)


@pytest.mark.parametrize("m, r", [(identity(3), 3), ([[2], [3]], 1), ([[1, 0], [0, 2]], 2), ([[1, 2], [2, 4]], 1)])
def test_rank_examples(m, r):
    assert rank(m) == r


@pytest.mark.parametrize(
    "m, n, size",
    [([[1, 0], [0, 2]], 1, 1), ([[1, 0], [0, 2]], 2, 2), ([[1], [1]], 3, 3), ([[5, 3]], 1, 1)],
)
def test_kernel_size_examples(m, n, size):
    assert kernel_size_mod_n(m, n) == size


def test_kernel_size_rejects_zero():
    with pytest.raises(DomainError):
        kernel_size_mod_n([[1]], 0)


@settings(max_examples=150, deadline=None)
@given(matrices, st.integers(1, 12))
def test_kernel_size_matches_brute_force(m, n):
    size = kernel_size_mod_n(m, n)
    assert size == len(brute_kernel(m, n))
    assert size == math.prod(math.gcd(x, n) for x in smith_normal_form(m)[0])


@settings(max_examples=80, deadline=None)
@given(matrices, st.integers(1, 8))
def test_enumerate_kernel_matches_brute_force(m, n):
    assert enumerate_kernel_mod_n(m, n) == brute_kernel(m, n)


def test_enumerate_kernel_examples():
    assert enumerate_kernel_mod_n([[1, 0], [0, 2]], 2) == [(0, 0), (0, 1)]
    assert enumerate_kernel_mod_n(identity(3), 7) == [(0, 0, 0)]
    assert enumerate_kernel_mod_n([[1], [1]], 2) == [(0, 0), (1, 1)]


def test_enumerate_kernel_cap():
    with pytest.raises(ResourceError, match="cap of 10"):
        enumerate_kernel_mod_n([[], []], 5, cap=10)
