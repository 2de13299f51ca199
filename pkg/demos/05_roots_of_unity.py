"""
Evaluating at roots of unity
============================

Values of f_{A,n} at a primitive d-th root of unity, written in the power
basis 1, z, ..., z^(phi(d)-1).
"""

from signpart import parse_spec, partition_table
from signpart.cyclotomic import check_zeta4_vanishing, cyclotomic_coeffs, eval_at_root, u_table

print("Phi_12 =", cyclotomic_coeffs(12))

A = parse_spec("all")
for n, v in enumerate(u_table(A, 0, 3, 10)):
    print(f"f_{n}(zeta_3) = {v.coeffs}")

# powers of two: f_m vanishes at i whenever m = 4 mod 8
t = partition_table(parse_spec("geom:2"), 60)
print([m for m in range(1, 61) if eval_at_root(t.row(m), 4).is_zero()])
print("check up to 400:", check_zeta4_vanishing(400).ok)
