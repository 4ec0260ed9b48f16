"""
Scanning a one-parameter family
===============================

The family (t, (1+t)^2 + c t) is generically Kummer-generic.  The fibers at
c = 0 and c = -4 have a double root in the second coordinate and pick up an
index of 2.
"""

from kummergen import FamilySpec, degeneration_candidates, scan
from kummergen.poly import format_poly

family = FamilySpec.parse("t, (1+t)^2 + c*t")
result = scan(family, range(-6, 7))

for row in result.rows:
    print(f"c = {row.value}: {row.signature}")

print("strata:")
for sig, values in result.strata.items():
    print(" ", sig, [str(v) for v in values])
print("max index:", result.max_index)

# the exceptional fibers sit on roots of the candidate polynomials
print("candidates:", [format_poly(p, "c") for p in degeneration_candidates(family)])
