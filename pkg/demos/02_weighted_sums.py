"""
Signed, weighted part-count sums
================================

S_{A,k}(n) computed two ways: straight from the table, and by the recurrence
over divisors that never needs the higher rows of the table.
"""

from signpart import parse_spec, partition_table
from signpart.sums import s_direct_table, s_recurrence, verify_lemma22

A = parse_spec("geom:2")
N, K = 40, 3

direct = s_direct_table(partition_table(A, N), K)
rec = s_recurrence(A, K, N)
print("methods agree:", direct.values == rec.values)

for k in range(K + 1):
    print(f"k={k}:", list(direct.row(k))[:16])

# the divisor identities behind the recurrence, checked coefficient by coefficient
for report in verify_lemma22(A, 100):
    print(f"{report.name:>14}: {report.checked} rows, ok={report.ok}")
