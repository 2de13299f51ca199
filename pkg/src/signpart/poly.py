"""Dense integer polynomials in one variable ``t``.

Coefficients are Python ints, so nothing ever overflows.  Index ``i`` of
``coeffs`` is the coefficient of ``t**i``; trailing zeros are stripped so the
zero polynomial has ``coeffs == ()``.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(int(x) for x in c)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> Poly:
        return cls([0] * e + [c])

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]]) -> Poly:
        """Build from ``(exponent, coefficient)`` pairs; repeated exponents add up."""
        out: list[int] = []
        for e, c in terms:
            if e >= len(out):
                out.extend([0] * (e + 1 - len(out)))
            out[e] += c
        return cls(out)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly(convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def delta(self, k: int = 1) -> Poly:
        """(t d/dt)**k: coefficient ``i`` is multiplied by ``i**k`` (with 0**0 = 1)."""
        if k < 0:
            raise ValueError("k must be non-negative")
        return Poly(c * i**k for i, c in enumerate(self.coeffs))

    def shift(self, e: int) -> Poly:
        """Multiply by ``t**e``."""
        return Poly([0] * e + list(self.coeffs)) if self.coeffs else self

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            body = "" if i else str(mag)
            if i:
                body = ("" if mag == 1 else str(mag)) + ("t" if i == 1 else f"t^{i}")
            terms.append(("-" if c < 0 else "+", body))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Exact product of two coefficient sequences (zeros in ``a`` are skipped)."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def divmod_monic(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Long division by a monic integer polynomial; exact over Z."""
    den = list(_trim(den))
    if not den or den[-1] != 1:
        raise ValueError("divisor must be monic")
    r = list(_trim(num))
    m = len(den) - 1
    if len(r) <= m:
        return [], r
    q = [0] * (len(r) - m)
    for i in range(len(r) - 1, m - 1, -1):
        c = r[i]
        if c:
            q[i - m] = c
            for j in range(m + 1):
                r[i - m + j] -= c * den[j]
    return list(_trim(q)), list(_trim(r[:m]))


def series_divide(num: Sequence[int], den: Sequence[int], n_terms: int) -> list[int]:
    """First ``n_terms`` power-series coefficients of num/den, with den(0) = ±1."""
    if not den or den[0] not in (1, -1):
        raise ValueError("constant term of the denominator must be a unit")
    out = [0] * n_terms
    for n in range(n_terms):
        acc = num[n] if n < len(num) else 0
        for j in range(1, min(n, len(den) - 1) + 1):
            if den[j]:
                acc -= den[j] * out[n - j]
        out[n] = acc * den[0]
    return out
