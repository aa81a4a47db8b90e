"""Special-function tests: frozen 50-digit references plus invariants."""

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from hypersum import specialfn
from hypersum.errors import DomainError, PoleError

# 50-digit references, regenerate with scripts/gen_reference_values.py
GAMMA_REF = {
    0.75: 1.2254167024651776,
    -0.5: -3.544907701811032,
    -2.5: -0.9453087204829419,
    -15.75: 4.271755731440195e-13,
    12.3: 83385367.89997,
    170.2: 1.1918411166366696e+305,
}
LOG_GAMMA_REF = {
    0.001: 6.907178885383853,
    7.25: 7.0521854507385395,
    100.5: 361.4355404677776,
}
DIGAMMA_REF = {
    1.0: -0.5772156649015329,
    0.1: -10.423754940411076,
    0.25: -4.2274535333762655,
    10.5: 2.3030010342976865,
    1234.5: 7.118016231827998,
    -6.3: 4.2003210041401875,
}


def rel_err(got, want):
    return abs(got - want) / abs(want)


class TestGamma:
    def test_half_integer_and_factorial_values(self):
        assert specialfn.gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
        assert specialfn.gamma(5.0) == pytest.approx(24.0, rel=1e-14)
        assert specialfn.gamma(1.0) == pytest.approx(1.0, rel=1e-15)

    @pytest.mark.parametrize("x,want", sorted(GAMMA_REF.items()))
    def test_reference_values(self, x, want):
        assert rel_err(specialfn.gamma(x), want) < 1e-14

    @pytest.mark.parametrize("x", [0.0, -1.0, -2.0, -77.0])
    def test_poles(self, x):
        with pytest.raises(PoleError):
            specialfn.gamma(x)

    def test_overflow(self):
        with pytest.raises(OverflowError):
            specialfn.gamma(172.0)
        assert math.isfinite(specialfn.gamma(171.0))

    def test_nan_rejected(self):
        with pytest.raises(DomainError):
            specialfn.gamma(float("nan"))

    def test_recurrence_1000_points(self):
        rng = random.Random(1138)
        for _ in range(1000):
            x = rng.uniform(0.1, 50.0)
            lhs = specialfn.gamma(x + 1.0)
            assert abs(lhs - x * specialfn.gamma(x)) <= 1e-12 * abs(lhs)

    @given(st.floats(min_value=0.01, max_value=0.99))
    @settings(max_examples=200, deadline=None)
    def test_reflection(self, x):
        product = specialfn.gamma(x) * specialfn.gamma(1.0 - x)
        assert product * math.sin(math.pi * x) / math.pi == pytest.approx(1.0, rel=1e-12)


class TestLogGamma:
    def test_exact_zeros(self):
        assert specialfn.log_gamma(1.0) == 0.0
        assert specialfn.log_gamma(2.0) == 0.0

    @pytest.mark.parametrize("x,want", sorted(LOG_GAMMA_REF.items()))
    def test_reference_values(self, x, want):
        assert rel_err(specialfn.log_gamma(x), want) < 1e-14

    @pytest.mark.parametrize("x", [0.0, -0.5, -3.0])
    def test_domain(self, x):
        with pytest.raises(DomainError):
            specialfn.log_gamma(x)

    @given(st.floats(min_value=0.01, max_value=170.0))
    @settings(max_examples=200, deadline=None)
    def test_consistency_with_gamma(self, x):
        assert math.exp(specialfn.log_gamma(x)) == pytest.approx(
            specialfn.gamma(x), rel=1e-12
        )


class TestDigamma:
    @pytest.mark.parametrize("x,want", sorted(DIGAMMA_REF.items()))
    def test_reference_values(self, x, want):
        # absolute tolerance, relative once |psi| exceeds 1
        assert abs(specialfn.digamma(x) - want) <= 1e-13 * max(1.0, abs(want))

    def test_reflection_gap_is_pi(self):
        gap = specialfn.digamma(0.75) - specialfn.digamma(0.25)
        assert gap == pytest.approx(math.pi, rel=1e-13)

    @pytest.mark.parametrize("x", [0.0, -1.0, -12.0])
    def test_poles(self, x):
        with pytest.raises(PoleError):
            specialfn.digamma(x)

    @given(st.floats(min_value=0.1, max_value=100.0))
    @settings(max_examples=300, deadline=None)
    def test_recurrence(self, x):
        lhs = specialfn.digamma(x + 1.0) - specialfn.digamma(x)
        assert abs(lhs - 1.0 / x) <= 1e-12


class TestPochhammer:
    def test_empty_product(self):
        assert specialfn.pochhammer(3.7, 0) == 1.0
        assert specialfn.pochhammer(-2.0, 0) == 1.0

    def test_known_values(self):
        assert specialfn.pochhammer(0.5, 3) == 1.875
        assert specialfn.pochhammer(1.0, 6) == 720.0

    @given(
        st.floats(min_value=-10.0, max_value=10.0),
        st.integers(min_value=0, max_value=12),
    )
    @settings(max_examples=200, deadline=None)
    def test_recurrence_is_exact(self, x, n):
        # same left-to-right product order, so equality is bitwise
        assert specialfn.pochhammer(x, n + 1) == specialfn.pochhammer(x, n) * (x + n)

    def test_overflow(self):
        with pytest.raises(OverflowError):
            specialfn.pochhammer(300.0, 200)

    def test_bad_n(self):
        with pytest.raises(DomainError):
            specialfn.pochhammer(1.0, -1)


class TestGammaRatio:
    def test_identical_lists_exact(self):
        assert specialfn.gamma_ratio([3.7], [3.7]) == 1.0
        assert specialfn.gamma_ratio([0.4, 9.1], [9.1, 0.4]) == 1.0

    def test_integer_ratio(self):
        assert specialfn.gamma_ratio([5.0], [3.0]) == pytest.approx(12.0, rel=1e-12)

    def test_reference_value(self):
        got = specialfn.gamma_ratio([1.25, 0.5], [0.75, 1.0])
        assert rel_err(got, 1.3110287771460598) < 1e-13

    def test_negative_arguments_track_sign(self):
        # Gamma(-0.5) = -2 sqrt(pi), Gamma(-2.5) > 0 ... signs via reflection
        got = specialfn.gamma_ratio([-0.5], [0.5])
        assert got == pytest.approx(-2.0, rel=1e-12)
        got = specialfn.gamma_ratio([-2.5], [-0.5])
        assert got == pytest.approx(
            GAMMA_REF[-2.5] / GAMMA_REF[-0.5], rel=1e-12
        )

    def test_large_cancelling_ratio(self):
        # Gamma(120.3)/Gamma(119.3) = 119.3 although both factors overflow
        got = specialfn.gamma_ratio([120.3], [119.3])
        assert got == pytest.approx(119.3, rel=1e-12)

    def test_pole_rejected(self):
        with pytest.raises(PoleError):
            specialfn.gamma_ratio([1.0, -2.0], [0.5])

    def test_overflow(self):
        with pytest.raises(OverflowError):
            specialfn.gamma_ratio([200.0, 200.0], [1.0])
