"""
Sets with two elements
======================

For coprime a < b the polynomial f_{{a,b},n} has a closed form, and the
sign periods are bounded by 2ab (k = 0) and 2a(b - a) (k > 0).
"""

from signpart.signs import two_element_periods, two_element_poly

print("f_{3,5},30(t) =", two_element_poly(3, 5, 30))

for a, b in [(2, 3), (3, 5), (4, 7)]:
    for r in two_element_periods(a, b, kmax=3):
        print(f"{{{a},{b}}} k={r.k}: period {r.period:>3}  preperiod {r.preperiod:>4}  "
              f"claims hold: {r.claims_hold}")
