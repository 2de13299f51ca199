"""Weighted signed sums S_{A,k}(n) = sum_i (-1)^i i^k c_A(i, n).

Two independent routes are provided:

* the direct route reads the partition table and evaluates
  (t d/dt)^k f_{A,n} at t = -1;
* the recurrence route lifts k -> k + 1 with divisor data only,

      S_{k+1}(n) = sum_{i=1..n} sum_{j=0..k} C(k, j) P_j(i) S_{k-j}(n - i),
      P_j(i)     = sum_{a in A(i)} (i/a)^j (-1)^(i/a),

  so beyond the k = 0 base row it never touches the table.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .partitions import INT64_SAFE, PolyTable, eval_at_minus_one, partition_table
from .poly import Poly
from .sets import SetSpec, divisors_in

MAX_REPORTED_FAILURES = 10


@dataclass(frozen=True)
class SumTable:
    """``values[k][n] = S_{A,k}(n)`` for k <= K, n <= N."""

    spec: SetSpec
    K: int
    N: int
    values: tuple[tuple[int, ...], ...]
    method: str

    def __getitem__(self, kn):
        k, n = kn
        return self.values[k][n]

    def row(self, k: int) -> tuple[int, ...]:
        return self.values[k]


def divisor_polys(spec: SetSpec, n: int) -> tuple[Poly, Poly]:
    """p_{A,n} = sum t^{n/a} and q_{A,n} = sum a t^{n/a}, over a in A(n)."""
    ds = divisors_in(spec, n)
    p = Poly.from_terms((n // a, 1) for a in ds)
    q = Poly.from_terms((n // a, a) for a in ds)
    return p, q


def s_direct(table: PolyTable, k: int, n: int) -> int:
    if not 0 <= n <= table.bound:
        raise IndexError(f"n={n} outside table bound {table.bound}")
    return eval_at_minus_one(table.row(n).delta(k))


def _signed_powers(width, k):
    return np.array([(-1) ** i * i**k for i in range(width)], dtype=object)


def s_direct_row(table: PolyTable, k: int) -> list[int]:
    """[S_{A,k}(n) for n = 0..N] from the table in one matrix-vector product."""
    width = table.width
    weights = _signed_powers(width, k)
    # |S| <= (width-1)^k * p_A(n), so int64 is exact below the guard
    if table.data.dtype != object and max(width - 1, 1) ** k * table.max_count < INT64_SAFE:
        out = table.data @ weights.astype(np.int64)
    else:
        out = table.object_data() @ weights
    return [int(v) for v in out]


def s_direct_table(table: PolyTable, K: int) -> SumTable:
    rows = tuple(tuple(s_direct_row(table, k)) for k in range(K + 1))
    return SumTable(table.spec, K, table.bound, rows, "direct")


def delta_p_at_minus_one(spec: SetSpec, j: int, i: int) -> int:
    """(t d/dt)^j p_{A,i} at t = -1, straight from the divisor list."""
    if i < 1:
        raise ValueError("i must be positive")
    total = 0
    for a in divisors_in(spec, i):
        e = i // a
        total += e**j if e % 2 == 0 else -(e**j)
    return total


def alternating_series(spec: SetSpec, N: int) -> list[int]:
    """S_{A,0}(n) for n <= N from the one-variable product of 1/(1 + x^a).

    Costs O(|A| N) instead of building the full table.
    """
    s = [1] + [0] * N
    for a in spec.upto(N):
        for n in range(a, N + 1):
            s[n] -= s[n - a]
    return s


def s_recurrence(spec: SetSpec, K: int, N: int, base: list[int] | PolyTable | None = None) -> SumTable:
    """Fill S_{A,k}(n), k <= K, n <= N, by lifting k with divisor data.

    ``base`` supplies the k = 0 row: a table (direct route, the default) or a
    precomputed list.
    """
    if K < 0 or N < 0:
        raise ValueError("K and N must be non-negative")
    if base is None:
        base = partition_table(spec, N)
    if isinstance(base, PolyTable):
        row0 = s_direct_row(base, 0)
    else:
        row0 = list(base)
    if len(row0) < N + 1:
        raise ValueError("base row is shorter than N + 1")
    rows = [row0[: N + 1]]
    if K == 0:
        return SumTable(spec, K, N, (tuple(rows[0]),), "recurrence")

    # P[j][i] for i with A(i) nonempty; other i contribute nothing
    support = []
    for i in range(1, N + 1):
        ds = divisors_in(spec, i)
        if ds:
            support.append((i, [i // a for a in ds]))
    P = [[(i, sum(e**j if e % 2 == 0 else -(e**j) for e in es)) for i, es in support] for j in range(K)]

    for k in range(K):
        binom = [comb(k, j) for j in range(k + 1)]
        nxt = [0] * (N + 1)
        for j in range(k + 1):
            prev = rows[k - j]
            c = binom[j]
            for i, pv in P[j]:
                w = c * pv
                if not w:
                    continue
                for n in range(i, N + 1):
                    nxt[n] += w * prev[n - i]
        rows.append(nxt)
    return SumTable(spec, K, N, tuple(tuple(r) for r in rows), "recurrence")


@dataclass
class IdentityReport:
    name: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)
    truncated: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures and not self.truncated

    def fail(self, **info):
        if len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(info)
        else:
            self.truncated += 1


def _shift_add(acc, e, c, row):
    acc[e:e + len(row)] += c * row


def verify_lemma22(spec: SetSpec, N: int, table: PolyTable | None = None) -> list[IdentityReport]:
    """Check the three divisor-polynomial identities for 1 <= n <= N.

    * sum_{i=1..n} p_{A,i} f_{A,n-i} = t f'_{A,n}
    * sum_{i=1..n} q_{A,i} f_{A,n-i} = n f_{A,n}
    * t q'_{A,n} = n p_{A,n}
    """
    if N < 1:
        raise ValueError("N must be positive")
    if table is None or table.bound < N:
        table = partition_table(spec, N)
    data = table.object_data()
    width = table.width
    smallest = table.parts[0] if table.parts else N + 1
    pq = [None] + [divisor_polys(spec, i) for i in range(1, N + 1)]
    reps = [IdentityReport("p-convolution"), IdentityReport("q-convolution"), IdentityReport("q-derivative")]
    for n in range(1, N + 1):
        lhs_p = np.zeros(width + n + 1, dtype=object)
        lhs_q = np.zeros(width + n + 1, dtype=object)
        for i in range(1, n + 1):
            p, q = pq[i]
            if not p:
                continue
            row = data[n - i, : (n - i) // smallest + 1]
            for e, c in enumerate(p.coeffs):
                if c:
                    _shift_add(lhs_p, e, c, row)
            for e, c in enumerate(q.coeffs):
                if c:
                    _shift_add(lhs_q, e, c, row)
        f = table.row(n)
        checks = [
            (reps[0], Poly(lhs_p.tolist()), f.delta(1)),
            (reps[1], Poly(lhs_q.tolist()), f * n),
            (reps[2], pq[n][1].delta(1), pq[n][0] * n),
        ]
        for rep, lhs, rhs in checks:
            rep.checked += 1
            if lhs != rhs:
                rep.fail(n=n, lhs=str(lhs), rhs=str(rhs))
    return reps


def union_sum_split(s1: SumTable, s2: SumTable, k: int, n: int) -> int:
    """sum_i sum_j C(k,j) [(-1)^i S_{A1,j}(i)] [(-1)^{n-i} S_{A2,k-j}(n-i)].

    Equals (-1)^n S_{A1 ∪ A2, k}(n) for disjoint A1, A2.
    """
    total = 0
    for i in range(n + 1):
        for j in range(k + 1):
            total += comb(k, j) * (-1) ** i * s1[j, i] * (-1) ** (n - i) * s2[k - j, n - i]
    return total
