"""
Smith form against brute force on random curves
===============================================

Component counts from elementary divisors are compared with a direct search
for monomials in the coordinates that become n-th powers.
"""

import time
from collections import Counter

from kummergen import analyze, component_count, oracle_component_count
from kummergen.corpus import torus_corpus

curves = torus_corpus(size=60, seed=7)
start = time.perf_counter()
mismatches = 0
shapes = Counter()
for curve in curves:
    report = analyze(curve)
    shapes[report.signature] += 1
    for n in range(2, 9):
        mismatches += oracle_component_count(curve, n) != component_count(report, n)
print(f"{len(curves)} curves, {mismatches} mismatches, {time.perf_counter() - start:.1f}s")

# the most common signatures in the corpus
for sig, count in shapes.most_common(8):
    print(f"{count:4d}  {sig}")

# the largest stabilizing level seen
levels = [analyze(c).stabilizing_level for c in curves]
print("largest stabilizing level:", max(x for x in levels if x is not None))
