"""Sign sequences of S_{A,k}(n), eventual-period detection and sign-pattern checks."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import gcd
from typing import NamedTuple

import numpy as np

from .partitions import partition_table
from .poly import Poly
from .sets import Explicit, SetSpec
from .sums import SumTable, s_direct_table


class WindowTooShort(ValueError):
    pass


@dataclass(frozen=True)
class SignSeq:
    spec: str
    k: int
    values: tuple[int, ...]
    label: str = ""

    @property
    def N(self) -> int:
        return len(self.values) - 1

    def __str__(self):
        return "".join("+" if v > 0 else "-" if v < 0 else "0" for v in self.values)


@dataclass
class PeriodReport:
    spec: str
    k: int
    preperiod: int
    period: int
    window: tuple[int, int]
    status: str = "candidate"
    divisor_claims: list[str] = field(default_factory=list)
    claims_hold: bool = True

    def to_dict(self) -> dict:
        d = asdict(self)
        d["window"] = list(self.window)
        return d


class Violation(NamedTuple):
    n: int
    value: int


def _sign(x):
    return (x > 0) - (x < 0)


def sign_sequence(table: SumTable, k: int, label: str = "") -> SignSeq:
    if not 0 <= k <= table.K:
        raise IndexError(f"k={k} not in table (K={table.K})")
    return SignSeq(str(table.spec), k, tuple(_sign(v) for v in table.row(k)), label)


def signs_of(values, spec: str = "", k: int = 0, label: str = "") -> SignSeq:
    return SignSeq(spec, k, tuple(_sign(v) for v in values), label)


def _last_mismatch(s, p):
    bad = np.flatnonzero(s[p:] != s[:-p])
    return int(bad[-1]) + 1 if bad.size else 0


def detect_period(seq: SignSeq, max_preperiod: int | None = None,
                  max_period: int | None = None) -> PeriodReport | None:
    """Smallest period (then smallest preperiod) fitting the whole window.

    Defaults to N/4 for both bounds.  The window must hold the preperiod plus
    two full periods.
    """
    N = seq.N
    max_preperiod = N // 4 if max_preperiod is None else max_preperiod
    max_period = N // 4 if max_period is None else max_period
    if max_period < 1 or N < max_preperiod + 2 * max_period:
        raise WindowTooShort(
            f"window 0..{N} too short for preperiod <= {max_preperiod}, period <= {max_period}")
    s = np.asarray(seq.values, dtype=np.int8)
    for p in range(1, max_period + 1):
        pre = _last_mismatch(s, p)
        if pre <= max_preperiod:
            return PeriodReport(seq.spec, seq.k, pre, p, (pre, N))
    return None


def check_period(seq: SignSeq, period: int, preperiod: int) -> PeriodReport:
    """Test one (preperiod, period) pair on the window."""
    s = np.asarray(seq.values, dtype=np.int8)
    ok = period < len(s) and _last_mismatch(s, period) <= preperiod
    status = "candidate" if ok else f"refuted-up-to-{seq.N}"
    return PeriodReport(seq.spec, seq.k, preperiod, period, (preperiod, seq.N), status)


# ------------------------------------------------------------ two-element sets

def _check_pair(a, b):
    if not 1 <= a < b:
        raise ValueError(f"need 1 <= a < b, got a={a}, b={b}")
    if gcd(a, b) != 1:
        raise ValueError(f"a={a} and b={b} are not coprime")


def _two_element_exponents(a, b, n):
    lo, hi = -(-n // b), n // a
    m = b - a
    if m == 1:
        return range(lo, hi + 1)
    r = n * pow(a, -1, m) % m
    first = lo + (r - lo) % m
    return range(first, hi + 1, m)


def two_element_poly(a: int, b: int, n: int) -> Poly:
    """f_{{a,b},n}: t^j for every j in [n/b, n/a] with a*j = n (mod b - a)."""
    _check_pair(a, b)
    return Poly.from_terms((j, 1) for j in _two_element_exponents(a, b, n))


def two_element_sums(a: int, b: int, k: int, N: int) -> list[int]:
    """S_{{a,b},k}(n) for n <= N from the closed form."""
    _check_pair(a, b)
    return [sum(j**k if j % 2 == 0 else -(j**k) for j in _two_element_exponents(a, b, n))
            for n in range(N + 1)]


def two_element_periods(a: int, b: int, kmax: int = 4, N: int | None = None,
                        sums: SumTable | None = None) -> list[PeriodReport]:
    """Detected sign periods for A = {a, b}, k <= kmax, with divisibility claims.

    The claim is that the period divides 2ab for k = 0 and 2a(b - a) for k > 0.
    """
    _check_pair(a, b)
    N = 40 * a * b if N is None else N
    if sums is None:
        sums = s_direct_table(partition_table(Explicit((a, b)), N), kmax)
    out = []
    for k in range(kmax + 1):
        seq = sign_sequence(sums, k)
        rep = detect_period(seq)
        bound, name = (2 * a * b, "2ab") if k == 0 else (2 * a * (b - a), "2a(b-a)")
        if rep is None:
            rep = PeriodReport(seq.spec, k, -1, -1, (0, N), "none-found",
                               [f"no period found; expected a divisor of {name} = {bound}"], False)
        else:
            ok = bound % rep.period == 0
            rep.divisor_claims.append(f"period {rep.period} divides {name} = {bound}: {ok}")
            rep.claims_hold = ok
        out.append(rep)
    return out


# -------------------------------------------------------------- pattern checks

def _sums(spec, k, N, table):
    if table is None:
        table = s_direct_table(partition_table(spec, N), k)
    if table.N < N or table.K < k:
        raise ValueError("sum table does not cover the requested window")
    return table.row(k)


def check_alternating(spec: SetSpec, k: int, N: int, table: SumTable | None = None) -> Violation | None:
    """First n <= N with (-1)^n S_{A,k}(n) < 0."""
    row = _sums(spec, k, N, table)
    for n in range(N + 1):
        v = row[n]
        if (v if n % 2 == 0 else -v) < 0:
            return Violation(n, v)
    return None


def check_half_period_pattern(spec: SetSpec, k: int, N: int, n0: int,
                              table: SumTable | None = None) -> Violation | None:
    """First n in [n0, N] where (-1)^floor((n+1)/2) S_{A,k}(n) > 0 fails."""
    if n0 > N:
        raise ValueError("n0 must not exceed N")
    row = _sums(spec, k, N, table)
    for n in range(n0, N + 1):
        v = row[n]
        if (v if ((n + 1) // 2) % 2 == 0 else -v) <= 0:
            return Violation(n, v)
    return None


def last_alternation_violation(values, start: int = 0) -> int | None:
    """Largest n >= start with (-1)^n values[n] < 0, or None."""
    for n in range(len(values) - 1, start - 1, -1):
        v = values[n]
        if (v if n % 2 == 0 else -v) < 0:
            return n
    return None


def last_half_period_violation(values, start: int = 0, strict: bool = False) -> int | None:
    """Largest n >= start where (-1)^floor((n+1)/2) values[n] >= 0 (or > 0 if strict) fails."""
    for n in range(len(values) - 1, start - 1, -1):
        v = values[n]
        w = v if ((n + 1) // 2) % 2 == 0 else -v
        if w < 0 or (strict and w == 0):
            return n
    return None


def longest_runs(seq: SignSeq) -> dict[str, int]:
    """Longest runs of consecutive +, - and 0 signs."""
    best = {"+": 0, "-": 0, "0": 0}
    prev, run = None, 0
    for ch in str(seq):
        run = run + 1 if ch == prev else 1
        prev = ch
        best[ch] = max(best[ch], run)
    return best
