import pytest

from signpart.partitions import brute_force_counts, partition_counts, partition_table
from signpart.poly import Poly
from signpart.sets import AllPositive, Explicit, Odd, Powers, Range, Union, parse_spec
from signpart.sums import (
    MAX_REPORTED_FAILURES,
    alternating_series,
    delta_p_at_minus_one,
    divisor_polys,
    s_direct,
    s_direct_row,
    s_direct_table,
    s_recurrence,
    union_sum_split,
    verify_lemma22,
)

SPECS = ["all", "odd", "geom:2", "explicit:1,2,6", "explicit:2,3", "range:1..5", "fact:4", "ap:1+3k",
         "scaled(explicit:1,3;p=0,2,5)", "explicit:5,7"]


def brute_s(spec, k, n):
    """S_{A,k}(n) straight from the definition, over an explicit listing of partitions."""
    return sum((-1) ** i * i**k * c for i, c in enumerate(brute_force_counts(spec, n)))


def test_divisor_poly_examples():
    p, q = divisor_polys(Range(1, 3), 6)
    assert p == Poly.from_terms([(2, 1), (3, 1), (6, 1)])
    assert q == Poly.from_terms([(2, 3), (3, 2), (6, 1)])
    assert divisor_polys(Odd(), 4) == (Poly.monomial(4), Poly.monomial(4))
    p, q = divisor_polys(Powers(2), 4)
    assert p == Poly([0, 1, 1, 0, 1])
    assert q == Poly([0, 4, 2, 0, 1])


@pytest.mark.parametrize("text", SPECS)
def test_divisor_polys_at_one(text):
    spec = parse_spec(text)
    for n in range(1, 80):
        p, q = divisor_polys(spec, n)
        ds = [d for d in spec.upto(n) if n % d == 0]
        assert p(1) == len(ds)
        assert q(1) == sum(ds)
        assert set(p.coeffs) <= {0, 1}


def test_s_direct_examples():
    t = partition_table(AllPositive(), 4)
    assert s_direct(t, 0, 4) == 1
    assert s_direct(t, 1, 4) == 4
    assert s_direct(partition_table(Odd(), 3), 3, 0) == 0
    with pytest.raises(IndexError):
        s_direct(t, 0, 5)


def test_delta_p_examples():
    assert delta_p_at_minus_one(AllPositive(), 1, 4) == 5
    assert delta_p_at_minus_one(Odd(), 0, 3) == -2
    assert delta_p_at_minus_one(Explicit((2,)), 2, 5) == 0


@pytest.mark.parametrize("text", ["all", "odd", "explicit:2,3", "geom:2"])
def test_delta_p_matches_polynomial_route(text):
    spec = parse_spec(text)
    for i in range(1, 60):
        p, _ = divisor_polys(spec, i)
        for j in range(4):
            assert delta_p_at_minus_one(spec, j, i) == p.delta(j)(-1)


def test_recurrence_examples():
    assert s_recurrence(AllPositive(), 1, 4)[1, 4] == 4
    t = s_recurrence(Explicit((1,)), 2, 3)
    assert t[2, 3] == -9
    for k in range(3):
        for n in range(4):
            assert t[k, n] == (-1) ** n * n**k


@pytest.mark.parametrize("text", SPECS)
def test_zero_column_convention(text):
    spec = parse_spec(text)
    for table in (s_recurrence(spec, 4, 10), s_direct_table(partition_table(spec, 10), 4)):
        assert table[0, 0] == 1
        assert all(table[k, 0] == 0 for k in range(1, 5))


@pytest.mark.parametrize("text", SPECS)
def test_direct_matches_definition(text):
    spec = parse_spec(text)
    table = s_direct_table(partition_table(spec, 25), 4)
    for k in range(5):
        for n in range(26):
            assert table[k, n] == brute_s(spec, k, n)


@pytest.mark.parametrize("text", SPECS)
def test_cross_method_equality(text):
    spec = parse_spec(text)
    N, K = 80, 6
    table = partition_table(spec, N)
    assert s_direct_table(table, K).values == s_recurrence(spec, K, N, table).values


@pytest.mark.parametrize("text", SPECS)
def test_alternating_series_is_direct_row_zero(text):
    spec = parse_spec(text)
    assert alternating_series(spec, 120) == s_direct_row(partition_table(spec, 120), 0)


def test_recurrence_from_series_base():
    spec = parse_spec("ap:1+3k")
    a = s_recurrence(spec, 3, 90, alternating_series(spec, 90))
    b = s_direct_table(partition_table(spec, 90), 3)
    assert a.values == b.values


@pytest.mark.parametrize("text", ["odd", "explicit:1,3,5", "ap:3+4k", "geom:3"])
def test_odd_only_zero_row_is_signed_count(text):
    spec = parse_spec(text)
    N = 150
    row = s_direct_row(partition_table(spec, N), 0)
    p = partition_counts(spec.upto(N), N)
    assert row == [(-1) ** n * p[n] for n in range(N + 1)]


@pytest.mark.parametrize("text,N", [("all", 50), ("geom:2", 64), ("explicit:2,3", 30), ("fact:4", 40)])
def test_divisor_identities_hold(text, N):
    reports = verify_lemma22(parse_spec(text), N)
    assert [r.name for r in reports] == ["p-convolution", "q-convolution", "q-derivative"]
    for r in reports:
        assert r.ok and r.checked == N


def test_divisor_identities_report_failures():
    wrong = partition_table(Explicit((1, 3)), 40)
    reports = verify_lemma22(Explicit((1, 2)), 40, wrong)
    p_rep = reports[0]
    assert not p_rep.ok
    assert len(p_rep.failures) == MAX_REPORTED_FAILURES
    assert p_rep.truncated > 0
    assert {"n", "lhs", "rhs"} <= set(p_rep.failures[0])
    assert reports[2].ok  # t q' = n p never reads the table


@pytest.mark.parametrize("a,b", [("odd", "explicit:2,4"), ("explicit:1", "explicit:2"), ("range:1..2", "explicit:5")])
def test_union_sum_split(a, b):
    s1, s2 = parse_spec(a), parse_spec(b)
    N, K = 25, 4
    su = s_direct_table(partition_table(Union((s1, s2)), N), K)
    t1 = s_direct_table(partition_table(s1, N), K)
    t2 = s_direct_table(partition_table(s2, N), K)
    for k in range(K + 1):
        for n in range(N + 1):
            assert (-1) ** n * su[k, n] == union_sum_split(t1, t2, k, n)


def test_object_path_used_for_large_weights():
    t = partition_table(AllPositive(), 300)
    row = s_direct_row(t, 6)
    # the i^6-weighted terms overflow int64 long before the final sum does
    exact = [sum((-1) ** i * i**6 * int(c) for i, c in enumerate(t.row(n).coeffs)) for n in range(301)]
    assert row == exact
    assert (t.width - 1) ** 6 * t.max_count > 2**63
