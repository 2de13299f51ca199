"""Values of (t d/dt)^k f_{A,n} at a primitive d-th root of unity.

A value in Z[zeta_d] is stored in the power basis zeta_d^i, 0 <= i < phi(d):
the remainder of the polynomial modulo the cyclotomic polynomial Phi_d.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .partitions import BoundExceeded, PolyTable, partition_table
from .poly import Poly, divmod_monic
from .sets import Powers, SetSpec
from .signs import SignSeq, signs_of
from .sums import IdentityReport

MAX_ORDER = 64


@lru_cache(maxsize=None)
def _cyclotomic(d):
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num, rem = divmod_monic(num, _cyclotomic(e))
            assert not rem, "cyclotomic division must be exact"
    return tuple(num)


def cyclotomic_coeffs(d: int) -> list[int]:
    """Coefficients of Phi_d, lowest degree first."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return list(_cyclotomic(d))


def totient(d: int) -> int:
    return len(_cyclotomic(d)) - 1


@dataclass(frozen=True)
class CycloValue:
    d: int
    coeffs: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]


def _check_order(d, max_order):
    if d < 2:
        raise ValueError("d must be >= 2")
    if d > max_order:
        raise BoundExceeded(f"d={d} exceeds the allowed maximum {max_order}")


def _reduce(coeffs, d):
    _, rem = divmod_monic(coeffs, _cyclotomic(d))
    phi = totient(d)
    return CycloValue(d, tuple(rem) + (0,) * (phi - len(rem)))


def eval_at_root(poly: Poly, d: int, max_order: int = MAX_ORDER) -> CycloValue:
    """Reduce ``poly`` modulo Phi_d by long division."""
    _check_order(d, max_order)
    return _reduce(poly.coeffs, d)


def fold_mod(poly: Poly, d: int) -> Poly:
    """``poly`` modulo t^d - 1."""
    out = [0] * d
    for i, c in enumerate(poly.coeffs):
        out[i % d] += c
    return Poly(out)


def u_table(spec: SetSpec, k: int, d: int, N: int, table: PolyTable | None = None,
            max_order: int = MAX_ORDER) -> list[CycloValue]:
    """Row n is (t d/dt)^k f_{A,n} at zeta_d, for n = 0..N.

    Each row is first folded modulo t^d - 1 (cheap, vectorised) and then
    reduced modulo Phi_d, which divides t^d - 1.
    """
    _check_order(d, max_order)
    if table is None or table.bound < N:
        table = partition_table(spec, N)
    data = table.object_data()[: N + 1]
    width = table.width
    fold = np.zeros((width, d), dtype=object)
    for i in range(width):
        fold[i, i % d] = i**k
    folded = data @ fold
    return [_reduce(list(r), d) for r in folded.tolist()]


def coordinate_signs(values: list[CycloValue], spec: str = "", k: int = 0) -> list[SignSeq]:
    """One sign sequence per power-basis coordinate."""
    if not values:
        return []
    phi = len(values[0].coeffs)
    d = values[0].d
    return [signs_of([v[i] for v in values], spec, k, label=f"d={d},i={i}") for i in range(phi)]


def check_zeta4_vanishing(N: int) -> IdentityReport:
    """f_{A,m}(zeta_4) = 0 for A = powers of two and every m = 4 (mod 8), m <= N."""
    rep = IdentityReport("zeta4-vanishing")
    if N < 4:
        return rep
    table = partition_table(Powers(2), N)
    for m in range(4, N + 1, 8):
        v = eval_at_root(table.row(m), 4)
        rep.checked += 1
        if not v.is_zero():
            rep.fail(n=m, value=[str(c) for c in v.coeffs])
    return rep
