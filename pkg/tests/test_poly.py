from hypothesis import given
from hypothesis import strategies as st

from signpart.poly import Poly, convolve, divmod_monic, series_divide

coeffs = st.lists(st.integers(-50, 50), max_size=12)


def test_trimming_and_degree():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly().degree == -1
    assert Poly([0, 0]) == 0
    assert Poly([5]) == 5


def test_str():
    assert str(Poly([0, 1, 2, 1, 1])) == "t + 2t^2 + t^3 + t^4"
    assert str(Poly([-1, 0, -3])) == "-1 - 3t^2"
    assert str(Poly()) == "0"


def test_delta_examples():
    assert Poly([0, 1, 3]).delta(2) == Poly([0, 1, 12])
    assert Poly([0, 0, 0, 1]).delta(1) == Poly([0, 0, 0, 3])
    p = Poly([4, 1, 3])
    assert p.delta(0) == p


@given(coeffs, coeffs)
def test_ring_laws(a, b):
    pa, pb = Poly(a), Poly(b)
    assert pa * pb == pb * pa
    assert (pa + pb) - pb == pa
    for x in (-2, -1, 0, 1, 3):
        assert (pa * pb)(x) == pa(x) * pb(x)


@given(coeffs)
def test_delta_is_t_times_derivative(a):
    p = Poly(a)
    assert p.delta(1) == p.derivative().shift(1)


@given(coeffs, st.lists(st.integers(-5, 5), min_size=1, max_size=5))
def test_divmod_monic_reconstructs(num, den_low):
    den = den_low + [1]
    q, r = divmod_monic(num, den)
    assert len(r) < len(den)
    assert Poly(convolve(q, den)) + Poly(r) == Poly(num)


@given(coeffs, st.lists(st.integers(-3, 3), max_size=6), st.sampled_from([1, -1]))
def test_series_divide_times_denominator(num, den_tail, unit):
    den = [unit] + den_tail
    n = 20
    s = series_divide(num, den, n)
    back = convolve(s, den)[:n]
    padded = (list(num) + [0] * n)[:n]
    assert back == padded
