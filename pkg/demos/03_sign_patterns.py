"""
Sign patterns and periods
=========================

Which sets make (-1)^n S_{A,k}(n) nonnegative, and what the sign sequence
looks like when they do not.
"""

from signpart import parse_spec, partition_table
from signpart.signs import check_alternating, detect_period, sign_sequence
from signpart.sums import s_direct_table

for text in ["odd", "range:1..6", "scaled(explicit:1;p=j*2)", "explicit:1,2,6"]:
    A = parse_spec(text)
    sums = s_direct_table(partition_table(A, 300), 3)
    hits = [check_alternating(A, k, 300, sums) for k in range(4)]
    print(f"{text:>26}: first violation per k = {[None if h is None else h.n for h in hits]}")

# {1,2,6} is the standard example where alternation fails; its signs repeat with period 4
sums = s_direct_table(partition_table(parse_spec("explicit:1,2,6"), 200), 1)
for k in (0, 1):
    seq = sign_sequence(sums, k)
    r = detect_period(seq)
    print(f"k={k}: {str(seq)[:40]}...  preperiod {r.preperiod}, period {r.period}")
