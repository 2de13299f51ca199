"""
Partition polynomials by number of parts
========================================

Build the table of f_{A,n}(t) for a few sets and compare with a direct listing.
"""

from signpart import parse_spec, partition_table
from signpart.partitions import brute_force_counts
from signpart.poly import Poly

A = parse_spec("explicit:1,2,6")
table = partition_table(A, 12)

for n in range(13):
    print(f"f_{n}(t) = {table.row(n)}")

# the DP agrees with listing every partition, as long as that stays cheap
for n in range(13):
    assert Poly(brute_force_counts(A, n)) == table.row(n)

# t = 1 gives the plain partition count
print("p_A(12) =", table.row(12)(1))

# the table switches to Python integers once counts outgrow int64
big = partition_table(parse_spec("all"), 500)
print("dtype at N=500:", big.data.dtype, " p(500) =", big.row(500)(1))
