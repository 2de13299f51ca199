"""
Evidence scans for open questions
=================================

These runs collect data at finite bounds.  They prove nothing either way.
"""

import json

from signpart.harness import RunConfig, run_exploration

# an arithmetic progression whose k=0 signs show no short period
print(json.dumps(run_exploration("nonperiodic-ap", RunConfig(N=1000)), indent=1)[:600])

# first m factorials: look at where each k settles
out = run_exploration("factorials", RunConfig(N=600, ms=[3, 4]))
for row in out["results"]:
    print(row["m"], row["k"], row["expected"], row["observed_on_window"], row["period"])
