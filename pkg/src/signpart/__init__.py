"""Exact computation of A-partition polynomials and the signs of their weighted sums

    S_{A,k}(n) = sum_i (-1)^i i^k c_A(i, n),

where c_A(i, n) counts partitions of n into exactly i parts taken from A.
"""
from .cyclotomic import CycloValue, check_zeta4_vanishing, cyclotomic_coeffs, eval_at_root, u_table
from .partitions import (
    PolyTable,
    brute_force_counts,
    count_parts,
    delta_pow,
    eval_at_minus_one,
    partition_table,
)
from .poly import Poly
from .sets import SetSpec, divisors_in, enumerate_upto, parse_spec, validate_disjoint
from .signs import (
    PeriodReport,
    SignSeq,
    check_alternating,
    check_half_period_pattern,
    detect_period,
    sign_sequence,
    two_element_poly,
)
from .sums import (
    SumTable,
    alternating_series,
    delta_p_at_minus_one,
    divisor_polys,
    s_direct,
    s_direct_table,
    s_recurrence,
    verify_lemma22,
)

__version__ = "0.1.0"
