"""A-partition polynomials f_{A,n}(t) = sum_i c_A(i, n) t^i.

The table is built from the product of 1/(1 - t x^a) over the parts a <= N:
starting from the empty product, each part updates rows in increasing n by
``f_n += t * f_{n-a}``.

Rows are stored in one dense 2-D array, ``data[n, i] = c_A(i, n)``.  When the
largest partition count p_A(n) for n <= N fits comfortably in 64 bits the
array is ``int64`` (every intermediate DP value is bounded by a final count),
otherwise it holds Python ints.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .poly import Poly
from .sets import SetSpec

INT64_SAFE = 1 << 62
BRUTE_FORCE_CAP = 60


class BoundExceeded(RuntimeError):
    """A computation was refused because it exceeds a resource bound."""


def partition_counts(parts: list[int], N: int) -> list[int]:
    """p_A(n) for n = 0..N (the table evaluated at t = 1)."""
    p = [1] + [0] * N
    for a in parts:
        for n in range(a, N + 1):
            p[n] += p[n - a]
    return p


@dataclass(frozen=True, eq=False)
class PolyTable:
    """Rows f_{A,0}, ..., f_{A,N} for one part-set."""

    spec: SetSpec
    bound: int
    parts: tuple[int, ...]
    data: np.ndarray = field(repr=False)
    max_count: int = 0

    @property
    def width(self) -> int:
        return self.data.shape[1]

    def row(self, n: int) -> Poly:
        if not 0 <= n <= self.bound:
            raise IndexError(f"row {n} outside table bound {self.bound}")
        return self.rows[n]

    @cached_property
    def rows(self) -> tuple[Poly, ...]:
        return tuple(Poly(r) for r in self.data.tolist())

    def object_data(self) -> np.ndarray:
        """The table as an array of Python ints (safe for any arithmetic)."""
        if self.data.dtype == object:
            return self.data
        return np.array(self.data.tolist(), dtype=object).reshape(self.data.shape)

    def __eq__(self, other):
        if not isinstance(other, PolyTable):
            return NotImplemented
        return self.bound == other.bound and self.rows == other.rows


def partition_table(spec: SetSpec, N: int, order: list[int] | None = None) -> PolyTable:
    """Build f_{A,n} for all n <= N.

    ``order`` optionally gives the processing order of the parts (must be a
    permutation of the truncated set); the result does not depend on it.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    parts = spec.upto(N)
    if order is not None:
        if sorted(order) != parts:
            raise ValueError("order must be a permutation of the truncated part-set")
        seq = list(order)
    else:
        seq = parts
    smallest = parts[0] if parts else N + 1
    width = N // smallest + 1

    counts = partition_counts(parts, N)
    max_count = max(counts)
    dtype = np.int64 if max_count < INT64_SAFE else object
    data = np.zeros((N + 1, width), dtype=dtype)
    data[0, 0] = 1
    for a in seq:
        for n in range(a, N + 1):
            hi = (n - a) // smallest + 1  # columns that can be nonzero in row n-a
            data[n, 1:hi + 1] += data[n - a, :hi]
    return PolyTable(spec, N, tuple(parts), data, max_count)


def count_parts(table: PolyTable, i: int, n: int) -> int:
    """c_A(i, n): number of A-partitions of n with exactly i parts."""
    if not 0 <= n <= table.bound:
        raise IndexError(f"n={n} outside table bound {table.bound}")
    if i < 0 or i >= table.width:
        return 0
    return int(table.data[n, i])


def brute_force_counts(spec: SetSpec, n: int, cap: int = BRUTE_FORCE_CAP) -> list[int]:
    """Counts by number of parts, from an explicit listing of every A-partition of n.

    Returns a list of length n + 1.  Exponential; refuses n > cap.
    """
    if n > cap:
        raise BoundExceeded(f"brute force refused: n={n} exceeds cap {cap}")
    parts = spec.upto(n)[::-1]
    counts = [0] * (n + 1)

    def descend(rest, start, used):
        if rest == 0:
            counts[used] += 1
            return
        for idx in range(start, len(parts)):
            a = parts[idx]
            if a <= rest:
                descend(rest - a, idx, used + 1)

    descend(n, 0, 0)
    return counts


def delta_pow(poly: Poly, k: int) -> Poly:
    """Apply (t d/dt)**k."""
    return poly.delta(k)


def eval_at_minus_one(poly: Poly) -> int:
    return sum(c if i % 2 == 0 else -c for i, c in enumerate(poly.coeffs))


def convolve_rows(t1: PolyTable, t2: PolyTable, n: int) -> Poly:
    """sum_{i<=n} f_{A1,i} f_{A2,n-i}: row n of the table of a disjoint union."""
    acc = Poly()
    for i in range(n + 1):
        acc = acc + t1.row(i) * t2.row(n - i)
    return acc
