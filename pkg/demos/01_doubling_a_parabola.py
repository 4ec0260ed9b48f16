"""
Doubling the curve y = (1 + x)^2
================================

The curve t -> (t, (1+t)^2) in G_m^2 is free, but pulling it back under the
squaring map splits it into two pieces.  After one such pullback every piece
is Kummer-generic.
"""

from kummergen import analyze, component_count, oracle_component_count, parse_curve

curve = parse_curve("t, (1+t)^2")
report = analyze(curve)

# valuation matrix over the places t = 0 and t = -1
print("basis:", [str(b) for b in report.valuation.basis])
print("matrix:", report.valuation.matrix)

# Smith form: the second divisor 2 is the whole obstruction
print("divisors:", report.divisors, "index:", report.index)
print("kummer-generic:", report.kummer_generic)

# component counts for n = 1..8, by the Smith form and by brute force
for n in range(1, 9):
    print(n, component_count(report, n), oracle_component_count(curve, n))

# one component of the doubled curve is s -> (s, 1 + s^2)
piece = analyze(parse_curve("t, 1 + t^2"))
print("component divisors:", piece.divisors, "kummer-generic:", piece.kummer_generic)
