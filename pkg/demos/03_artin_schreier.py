"""
The additive analogue over F_2
==============================

In characteristic p the map x -> x^p - x plays the role of the n-th power map.
Reduction modulo its image gives an explicit certificate for every answer.
"""

from kummergen import as_component_count, is_free_additive, parse_curve, wp, wp_reduce

# t^4 = wp(t^2 + t) + t over F_2
red = wp_reduce(parse_curve("t^4", p=2).coords[0])
print("g =", red.g, " r =", red.r)
assert wp(red.g) + red.r == parse_curve("t^4", p=2).coords[0]

# (t, t^2 + t): the second coordinate is already an image, so two components
for text in ("t, t^2 + t", "t, t^3", "t, 1/t^3 + t^5", "t, t^2"):
    curve = parse_curve(text, p=2)
    print(f"{text:18s} count {as_component_count(curve)}  free {is_free_additive(curve)}")

# poles reduce too: 1/(t^2+t+1)^2 over F_2
f = parse_curve("1/(t^2+t+1)^2", p=2).coords[0]
red = wp_reduce(f)
print("g =", red.g, " r =", red.r)
