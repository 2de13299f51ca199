"""Part-sets A of positive integers and their finite views.

Every set is described symbolically and is only ever materialised up to an
explicit bound ``N``; computations for ``n <= N`` only need ``A ∩ [1, N]``.

The text grammar accepted by :func:`parse_spec` is::

    explicit:1,2,6 | range:1..8 | ap:1+3k | geom:2 | fact:5 | fact:*
    odd | all | scaled(<spec>;p=j) | scaled(<spec>;p=j*2) | scaled(<spec>;p=0,2,5)
    union(<spec>|<spec>|...)

``str(spec)`` returns the canonical text form, and parsing it back gives an
equal spec.
"""
from __future__ import annotations

import heapq
import math
import re
from dataclasses import dataclass
from functools import cached_property


class SpecError(ValueError):
    """Malformed set description."""


class SetSpec:
    """Base class for symbolic part-sets."""

    def upto(self, N: int) -> list[int]:
        raise NotImplementedError

    def __contains__(self, x: int) -> bool:
        raise NotImplementedError

    def all_odd(self) -> bool:
        """True when every element of the set is provably odd."""
        return False

    def is_finite(self) -> bool:
        return False


@dataclass(frozen=True)
class Explicit(SetSpec):
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(sorted(set(int(v) for v in self.values)))
        if len(vals) != len(self.values):
            raise SpecError(f"explicit set has repeated values: {self.values}")
        if vals and vals[0] < 1:
            raise SpecError("explicit set must contain positive integers")
        object.__setattr__(self, "values", vals)

    def upto(self, N):
        return [v for v in self.values if v <= N]

    def __contains__(self, x):
        return x in self._members

    @cached_property
    def _members(self):
        return frozenset(self.values)

    def all_odd(self):
        return all(v % 2 for v in self.values)

    def is_finite(self):
        return True

    def __str__(self):
        return "explicit:" + ",".join(map(str, self.values))


@dataclass(frozen=True)
class Range(SetSpec):
    lo: int
    hi: int

    def __post_init__(self):
        if not 1 <= self.lo <= self.hi:
            raise SpecError(f"range needs 1 <= lo <= hi, got {self.lo}..{self.hi}")

    def upto(self, N):
        return list(range(self.lo, min(self.hi, N) + 1))

    def __contains__(self, x):
        return self.lo <= x <= self.hi

    def all_odd(self):
        return self.lo == self.hi and self.lo % 2 == 1

    def is_finite(self):
        return True

    def __str__(self):
        return f"range:{self.lo}..{self.hi}"


@dataclass(frozen=True)
class Progression(SetSpec):
    """The arithmetic progression {first + j*step : j >= 0}."""

    first: int
    step: int

    def __post_init__(self):
        if self.first < 1 or self.step < 1:
            raise SpecError("progression needs positive first term and step")

    def upto(self, N):
        return list(range(self.first, N + 1, self.step))

    def __contains__(self, x):
        return x >= self.first and (x - self.first) % self.step == 0

    def all_odd(self):
        return self.first % 2 == 1 and self.step % 2 == 0

    def __str__(self):
        return f"ap:{self.first}+{self.step}k"


@dataclass(frozen=True)
class Powers(SetSpec):
    """{base**i : i >= 0}."""

    base: int

    def __post_init__(self):
        if self.base < 2:
            raise SpecError("geometric base must be >= 2")

    def upto(self, N):
        out, v = [], 1
        while v <= N:
            out.append(v)
            v *= self.base
        return out

    def __contains__(self, x):
        if x < 1:
            return False
        while x % self.base == 0:
            x //= self.base
        return x == 1

    def all_odd(self):
        return self.base % 2 == 1

    def __str__(self):
        return f"geom:{self.base}"


@dataclass(frozen=True)
class Factorials(SetSpec):
    """{i! : 1 <= i <= limit}; ``limit=None`` means unbounded. 0! = 1! is kept once."""

    limit: int | None = None

    def __post_init__(self):
        if self.limit is not None and self.limit < 1:
            raise SpecError("factorial limit must be >= 1")

    def upto(self, N):
        out, i, v = [], 1, 1
        while v <= N and (self.limit is None or i <= self.limit):
            out.append(v)
            i += 1
            v *= i
        return out

    def __contains__(self, x):
        return x in self.upto(x)

    def all_odd(self):
        return self.limit == 1

    def is_finite(self):
        return self.limit is not None

    def __str__(self):
        return "fact:" + ("*" if self.limit is None else str(self.limit))


@dataclass(frozen=True)
class Odd(SetSpec):
    def upto(self, N):
        return list(range(1, N + 1, 2))

    def __contains__(self, x):
        return x >= 1 and x % 2 == 1

    def all_odd(self):
        return True

    def __str__(self):
        return "odd"


@dataclass(frozen=True)
class AllPositive(SetSpec):
    def upto(self, N):
        return list(range(1, N + 1))

    def __contains__(self, x):
        return x >= 1

    def __str__(self):
        return "all"


@dataclass(frozen=True)
class ScaledUnion(SetSpec):
    """B = union over j of 2**p_j * base, with an odd-only base and p_0 = 0.

    The exponents are either an explicit increasing tuple (``exponents``) or the
    infinite family p_j = j*step (``step``).
    """

    base: SetSpec
    exponents: tuple[int, ...] | None = None
    step: int | None = None

    def __post_init__(self):
        if (self.exponents is None) == (self.step is None):
            raise SpecError("scaled union needs exactly one of exponents or step")
        if not self.base.all_odd():
            raise SpecError(f"scaled union base must contain only odd numbers: {self.base}")
        if self.exponents is not None:
            e = tuple(self.exponents)
            if not e or e[0] != 0 or any(x >= y for x, y in zip(e, e[1:])):
                raise SpecError("exponents must be strictly increasing and start at 0")
            object.__setattr__(self, "exponents", e)
        elif self.step < 1:
            raise SpecError("exponent step must be >= 1")

    def _exponents_upto(self, N):
        if self.exponents is not None:
            return [p for p in self.exponents if 2**p <= N]
        out, p = [], 0
        while 2**p <= N:
            out.append(p)
            p += self.step
        return out

    def upto(self, N):
        # blocks are disjoint because the base is odd
        blocks = [[(1 << p) * a for a in self.base.upto(N >> p)] for p in self._exponents_upto(N)]
        return list(heapq.merge(*blocks))

    def __contains__(self, x):
        if x < 1:
            return False
        v = (x & -x).bit_length() - 1
        if self.exponents is not None:
            ok = v in self.exponents
        else:
            ok = v % self.step == 0
        return ok and (x >> v) in self.base

    def all_odd(self):
        return self.exponents == (0,)

    def is_finite(self):
        return self.exponents is not None and self.base.is_finite()

    def __str__(self):
        if self.step is not None:
            p = "j" if self.step == 1 else f"j*{self.step}"
        else:
            p = ",".join(map(str, self.exponents))
        return f"scaled({self.base};p={p})"


@dataclass(frozen=True)
class Union(SetSpec):
    """Disjoint union; overlap is detected on each truncated view that is used."""

    parts: tuple[SetSpec, ...]

    def __post_init__(self):
        if not self.parts:
            raise SpecError("union of no sets")
        object.__setattr__(self, "parts", tuple(self.parts))

    def upto(self, N):
        views = [p.upto(N) for p in self.parts]
        merged = list(heapq.merge(*views))
        if any(x == y for x, y in zip(merged, merged[1:])):
            raise SpecError(f"union parts overlap below {N}: {self}")
        return merged

    def __contains__(self, x):
        return any(x in p for p in self.parts)

    def all_odd(self):
        return all(p.all_odd() for p in self.parts)

    def is_finite(self):
        return all(p.is_finite() for p in self.parts)

    def __str__(self):
        return "union(" + "|".join(map(str, self.parts)) + ")"


def enumerate_upto(spec: SetSpec, N: int) -> list[int]:
    """A ∩ [1, N] in increasing order."""
    if N < 0:
        raise ValueError("N must be non-negative")
    return spec.upto(N)


def _divisors(n):
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def divisors_in(spec: SetSpec, n: int) -> list[int]:
    """The divisors of ``n`` lying in ``spec``, increasing."""
    if n < 1:
        raise ValueError("n must be positive")
    return [d for d in _divisors(n) if d in spec]


def validate_disjoint(specs: list[SetSpec], N: int) -> bool:
    seen: set[int] = set()
    for s in specs:
        view = s.upto(N)
        if seen.intersection(view):
            return False
        seen.update(view)
    return True


# ---------------------------------------------------------------- text grammar

def _split_top(text, sep):
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpecError(f"unbalanced parentheses in {text!r}")
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise SpecError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(cur))
    return parts


def _int(s, what):
    try:
        v = int(s.strip())
    except ValueError:
        raise SpecError(f"bad integer for {what}: {s!r}") from None
    return v


_AP = re.compile(r"^(\d+)\+(\d+)\*?[kj]$")


def parse_spec(text: str) -> SetSpec:
    """Parse the text grammar into a :class:`SetSpec`."""
    s = text.strip().replace(" ", "")
    if not s:
        raise SpecError("empty set description")
    if s == "odd":
        return Odd()
    if s == "all":
        return AllPositive()
    if s.startswith("union(") and s.endswith(")"):
        return Union(tuple(parse_spec(p) for p in _split_top(s[6:-1], "|")))
    if s.startswith("scaled(") and s.endswith(")"):
        pieces = _split_top(s[7:-1], ";")
        if len(pieces) != 2 or not pieces[1].startswith("p="):
            raise SpecError(f"scaled needs '<base>;p=...': {text!r}")
        base, rule = parse_spec(pieces[0]), pieces[1][2:]
        if rule == "j":
            return ScaledUnion(base, step=1)
        m = re.fullmatch(r"j\*(\d+)|(\d+)\*j", rule)
        if m:
            return ScaledUnion(base, step=int(m.group(1) or m.group(2)))
        return ScaledUnion(base, exponents=tuple(_int(p, "exponent") for p in rule.split(",")))
    kind, sep, arg = s.partition(":")
    if not sep:
        raise SpecError(f"unknown set description {text!r}")
    if kind == "explicit":
        if not arg:
            return Explicit(())
        return Explicit(tuple(_int(v, "explicit element") for v in arg.split(",")))
    if kind == "range":
        lo, dots, hi = arg.partition("..")
        if not dots:
            raise SpecError(f"range needs lo..hi: {text!r}")
        return Range(_int(lo, "range"), _int(hi, "range"))
    if kind == "ap":
        m = _AP.match(arg)
        if not m:
            raise SpecError(f"progression needs first+step k: {text!r}")
        return Progression(int(m.group(1)), int(m.group(2)))
    if kind == "geom":
        return Powers(_int(arg, "geometric base"))
    if kind == "fact":
        return Factorials(None if arg == "*" else _int(arg, "factorial limit"))
    raise SpecError(f"unknown set kind {kind!r}")
