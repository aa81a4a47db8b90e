"""Summation kernel tests, anchored to the exact-rational oracle."""

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from hypersum.errors import DivergenceError, DomainError, NondegenerateError
from hypersum.series import (
    SeriesSpec,
    SummationStatus,
    convergence_margin,
    ramanujan_mu_terms,
    sum_series,
)

from oracles import (
    random_terminating_spec,
    rational_abs_term_sum,
    rational_terminating_sum,
)

# 50-digit references, regenerate with scripts/gen_reference_values.py
RAMANUJAN_INVERSE = 1.3110287771460598  # 2F1(1/2, 1/4; 5/4; 1)
FOUR_OVER_PI = 4.0 / math.pi


class TestSeriesSpec:
    def test_margin_examples(self):
        assert convergence_margin(SeriesSpec((0.5, 0.25), (1.25,))) == pytest.approx(0.5)
        assert convergence_margin(SeriesSpec((0.7,), (0.7,))) == 0.0
        spec = SeriesSpec((0.5, 0.5, 0.25), (1.25, 1.25))
        assert convergence_margin(spec) == pytest.approx(1.25)

    def test_termination_index(self):
        assert SeriesSpec((-3.0, 2.0), (5.0,)).termination_index == 3
        assert SeriesSpec((-3.0, -7.0), (5.0,)).termination_index == 3
        assert SeriesSpec((0.5,), (5.0,)).termination_index is None
        assert SeriesSpec((0.0, 2.0), (5.0,)).termination_index == 0

    def test_nonpositive_integer_denominator_rejected(self):
        with pytest.raises(NondegenerateError):
            SeriesSpec((0.5,), (-2.0,))
        with pytest.raises(NondegenerateError):
            SeriesSpec((0.5,), (0.0,))

    def test_too_many_upper_parameters_rejected(self):
        with pytest.raises(DomainError):
            SeriesSpec((0.5, 0.5, 0.5), (1.0,))

    def test_immutably_normalized(self):
        spec = SeriesSpec([1, 2], [3])
        assert spec.numerators == (1.0, 2.0)
        assert spec.denominators == (3.0,)


class TestTermination:
    def test_vandermonde_value(self):
        # 2F1(-3, 2; 5; 1) = (3)_3/(5)_3 = 2/7, checkable by hand
        result = sum_series(SeriesSpec((-3.0, 2.0), (5.0,)), rel_tol=1e-6)
        assert result.status is SummationStatus.TERMINATED
        assert result.terms_used == 4
        assert result.tail_estimate == 0.0
        assert result.value == pytest.approx(2.0 / 7.0, rel=1e-15)

    @pytest.mark.parametrize("k", [0, 1, 5, 8])
    def test_terminating_counts(self, k):
        result = sum_series(SeriesSpec((-float(k), 1.3), (2.2, 0.7)), rel_tol=1e-10)
        assert result.status is SummationStatus.TERMINATED
        assert result.terms_used == k + 1
        assert result.tail_estimate == 0.0

    def test_oracle_agreement_50_random_specs(self):
        rng = random.Random(20260810)
        for _ in range(50):
            nums, dens = random_terminating_spec(rng)
            exact = float(rational_terminating_sum(nums, dens))
            spec = SeriesSpec([float(a) for a in nums], [float(b) for b in dens])
            got = sum_series(spec, rel_tol=1e-10).value
            # some alternating sums cancel exactly to zero (e.g. (1-1)^k);
            # scale the comparison by the term magnitudes then
            scale = max(abs(exact), float(rational_abs_term_sum(nums, dens)))
            assert abs(got - exact) <= 1e-13 * scale, (nums, dens)


class TestConvergence:
    def test_gauss_value_at_margin_half(self):
        result = sum_series(SeriesSpec((0.5, 0.25), (1.25,)), rel_tol=1e-12)
        assert abs(result.value - RAMANUJAN_INVERSE) <= 1e-10 * RAMANUJAN_INVERSE

    def test_compensation_invariant(self):
        # ~1e5 slowly decaying terms must still land within 1e-11 of 4/pi
        result = sum_series(SeriesSpec((0.5, 0.5), (2.0,)), rel_tol=1e-12)
        assert result.status is SummationStatus.CONVERGED
        assert abs(result.value - FOUR_OVER_PI) <= 1e-11 * FOUR_OVER_PI

    def test_monotone_refinement(self):
        for nums, dens in [
            ((0.5, 0.5, 0.25), (1.0, 1.25)),
            ((0.5, 0.25), (1.25,)),
            ((0.5, 0.5), (2.0,)),
        ]:
            spec = SeriesSpec(nums, dens)
            loose = sum_series(spec, rel_tol=1e-8)
            tight = sum_series(spec, rel_tol=1e-12)
            bound = loose.tail_estimate + 10.0 * 1e-8 * abs(tight.value)
            assert abs(loose.value - tight.value) <= bound

    def test_exponential_type_series(self):
        # p = q: margin rule does not apply; sum is exp(1)
        result = sum_series(SeriesSpec((0.5,), (0.5,)), rel_tol=1e-12)
        assert result.status is SummationStatus.CONVERGED
        assert result.value == pytest.approx(math.e, rel=1e-13)

    def test_stop_rule_waits_for_index_20(self):
        result = sum_series(SeriesSpec((0.5,), (0.5,)), rel_tol=1e-3)
        assert result.terms_used >= 22

    def test_max_terms_cap(self):
        result = sum_series(SeriesSpec((0.5, 0.25), (1.25,)), rel_tol=1e-12, max_terms=5000)
        assert result.status is SummationStatus.MAX_TERMS_REACHED
        assert result.terms_used == 5000
        assert result.tail_estimate > 0.0


class TestDivergenceGate:
    @pytest.mark.parametrize(
        "nums,dens",
        [((1.0, 1.0), (1.0,)), ((0.7,), ()), ((0.5, 0.8), (1.3,))],
    )
    def test_nonpositive_margin_raises(self, nums, dens):
        with pytest.raises(DivergenceError):
            sum_series(SeriesSpec(nums, dens), rel_tol=1e-10)

    def test_terminating_beats_margin(self):
        # negative margin but terminating: must sum, not raise
        result = sum_series(SeriesSpec((-4.0, 3.0), (0.5,)), rel_tol=1e-10)
        assert result.status is SummationStatus.TERMINATED

    def test_bad_rel_tol(self):
        with pytest.raises(DomainError):
            sum_series(SeriesSpec((0.5,), (1.5,)), rel_tol=0.0)


@given(
    st.lists(st.floats(min_value=0.2, max_value=5.0), min_size=0, max_size=2),
    st.floats(min_value=0.2, max_value=5.0),
)
@settings(max_examples=100, deadline=None)
def test_margin_matches_sums(extra_dens, num):
    spec = SeriesSpec((num,), tuple(extra_dens) + (num + 1.0,))
    expected = math.fsum(spec.denominators) - num
    assert convergence_margin(spec) == pytest.approx(expected, rel=1e-15)


class TestMuSeries:
    def test_known_reductions(self):
        assert ramanujan_mu_terms(1.0, 4.0) == SeriesSpec((0.5, 0.25), (1.25,))
        assert ramanujan_mu_terms(1.0, 1.0) == SeriesSpec((0.5, 1.0), (2.0,))
        assert ramanujan_mu_terms(2.0, 2.0) == ramanujan_mu_terms(1.0, 1.0)

    def test_domain(self):
        with pytest.raises(DomainError):
            ramanujan_mu_terms(0.0, 1.0)
        with pytest.raises(DomainError):
            ramanujan_mu_terms(1.0, -2.0)

    def test_rewrite_matches_raw_terms(self):
        # (1/b) (1/2)_n (b/mu)_n / ((b/mu+1)_n n!) == (1/2)_n / (n! (b + n mu))
        b, mu = 0.7, 1.9
        spec = ramanujan_mu_terms(b, mu)
        half_poch = 1.0
        rewritten = 1.0 / b  # n = 0 term of the scaled 2F1
        for n in range(60):
            raw = half_poch / (b + n * mu)
            assert rewritten == pytest.approx(raw, rel=1e-12), n
            a1, a2 = spec.numerators
            (b1,) = spec.denominators
            rewritten *= (a1 + n) * (a2 + n) / ((b1 + n) * (n + 1.0))
            half_poch *= (0.5 + n) / (n + 1.0)
