"""Direct summation of generalized hypergeometric series at unit argument.

A series is described by its upper and lower parameter lists only; the n!
belonging to every hypergeometric term is implicit and applied inside the term
recurrence, never stored as a lower parameter.

The summation kernel runs the term recurrence

    t_0 = 1,   t_{n+1} = t_n * prod(a_i + n) / (prod(b_j + n) * (n + 1))

in numpy blocks with compensated (Neumaier) accumulation across blocks and
pairwise summation inside them.  For non-terminating series with p = q + 1 the
terms decay like n^(-1-s), where s is the convergence margin; the returned
value adds the Euler-Maclaurin estimate of the omitted tail, which pushes the
truncation error from O(|t_N| * N / s) down to O(|t_N| / N).  Without that
correction a margin-1/2 series would need ~1e19 terms to reach ten digits.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from collections.abc import Sequence

import numpy as np

from .errors import DivergenceError, DomainError, NondegenerateError

__all__ = [
    "SeriesSpec",
    "SummationResult",
    "SummationStatus",
    "convergence_margin",
    "sum_series",
    "ramanujan_mu_terms",
    "DEFAULT_MAX_TERMS",
]

DEFAULT_MAX_TERMS = 10_000_000

_BLOCK_START = 1024
_BLOCK_MAX = 65536

# The stop rule ignores the first few terms: ratios of small parameters can sit
# near 1 early on and fake convergence when the margin is small.
_MIN_STOP_INDEX = 20
_CONSECUTIVE_SMALL = 3


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


@dataclass(frozen=True)
class SeriesSpec:
    """Parameters of a unit-argument pFq series.

    ``numerators`` are the upper parameters a_1..a_p, ``denominators`` the
    lower parameters b_1..b_q.  The implicit n! is not listed.  Lower
    parameters must avoid nonpositive integers, and p <= q + 1 is required for
    the series to converge or terminate at unit argument.
    """

    numerators: tuple[float, ...]
    denominators: tuple[float, ...]

    def __init__(self, numerators: Sequence[float], denominators: Sequence[float]):
        nums = tuple(float(a) for a in numerators)
        dens = tuple(float(b) for b in denominators)
        for v in nums + dens:
            if math.isnan(v) or math.isinf(v):
                raise DomainError(f"series parameters must be finite, got {v!r}")
        for b in dens:
            if _is_nonpositive_integer(b):
                raise NondegenerateError(
                    f"lower parameter {b!r} is a nonpositive integer"
                )
        if len(nums) > len(dens) + 1:
            raise DomainError(
                f"p = {len(nums)} upper parameters need q >= p - 1 lower "
                f"parameters at unit argument, got q = {len(dens)}"
            )
        object.__setattr__(self, "numerators", nums)
        object.__setattr__(self, "denominators", dens)

    @property
    def order_p(self) -> int:
        return len(self.numerators)

    @property
    def order_q(self) -> int:
        return len(self.denominators)

    @property
    def termination_index(self) -> int | None:
        """Index k of the last nonzero term, or None if non-terminating."""
        hits = [int(-a) for a in self.numerators if _is_nonpositive_integer(a)]
        return min(hits) if hits else None


class SummationStatus(str, enum.Enum):
    CONVERGED = "Converged"
    TERMINATED = "Terminated"
    MAX_TERMS_REACHED = "MaxTermsReached"


@dataclass(frozen=True)
class SummationResult:
    value: float
    terms_used: int
    tail_estimate: float
    status: SummationStatus


def convergence_margin(spec: SeriesSpec) -> float:
    """Sum of lower parameters minus sum of upper parameters.

    For a non-terminating series with p = q + 1 the unit-argument series
    converges iff this margin is positive (terms decay like n^(-1-margin)).
    Series with p <= q converge regardless.
    """
    return math.fsum(spec.denominators) - math.fsum(spec.numerators)


def _term_shape_coefficient(spec: SeriesSpec) -> float:
    # First-order deviation of t_n from a pure power law:
    # t_n = K n^(-1-s) (1 + c1/n + ...) with c1 from the parameter moments.
    upper = math.fsum(a * a - a for a in spec.numerators)
    lower = math.fsum(b * b - b for b in spec.denominators)
    return 0.5 * (upper - lower)


def _tail_correction(t_last: float, n_last: int, s: float, c1: float) -> float:
    # Euler-Maclaurin sum of K n^(-1-s) (1 + c1/n) over n > n_last, with K
    # inferred from the last computed term.
    m = n_last + 1.0
    base = t_last * (n_last / m) ** (1.0 + s) / (1.0 + c1 / n_last)
    zeta_head = m / s + 0.5 + (1.0 + s) / (12.0 * m)
    zeta_next = 1.0 / (1.0 + s) + 0.5 / m
    return base * (zeta_head + c1 * zeta_next)


def _accumulate(total: float, comp: float, x: float) -> tuple[float, float]:
    # Neumaier two-sum update.
    y = total + x
    if abs(total) >= abs(x):
        comp += (total - y) + x
    else:
        comp += (x - y) + total
    return y, comp


def sum_series(
    spec: SeriesSpec,
    rel_tol: float = 1e-12,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> SummationResult:
    """Sum the series directly, term by term.

    Stops when the series terminates, when |t_n| <= rel_tol * |partial sum|
    for three consecutive indices n >= 20, or at ``max_terms``.  For
    non-terminating p = q + 1 series the returned value includes the
    asymptotic tail estimate of the omitted terms; ``tail_estimate`` reports
    the conservative integral-comparison bound |t_N| (N+1) / s on that tail.

    Raises DivergenceError for a non-terminating p = q + 1 series whose
    convergence margin is not positive.
    """
    if not (rel_tol > 0.0):
        raise DomainError(f"rel_tol must be positive, got {rel_tol!r}")
    if max_terms < 1:
        raise DomainError(f"max_terms must be >= 1, got {max_terms!r}")

    k_term = spec.termination_index
    margin = convergence_margin(spec)
    saturated = spec.order_p == spec.order_q + 1
    if k_term is None and saturated and margin <= 0.0:
        raise DivergenceError(
            f"non-terminating series with margin {margin:.6g} <= 0 diverges "
            "at unit argument"
        )

    limit = max_terms if k_term is None else min(k_term + 1, max_terms)
    uppers = np.asarray(spec.numerators, dtype=np.float64)
    lowers = np.asarray(spec.denominators + (1.0,), dtype=np.float64)

    total, comp = 1.0, 0.0  # t_0
    t_last = 1.0
    count = 1
    carry = np.array([False, False])
    block = _BLOCK_START
    converged = False

    with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
        while count < limit:
            width = min(block, limit - count)
            block = min(2 * block, _BLOCK_MAX)
            idx = (count - 1) + np.arange(width, dtype=np.float64)
            num = np.ones(width)
            for a in uppers:
                num *= a + idx
            den = np.ones(width)
            for b in lowers:
                den *= b + idx
            terms = t_last * np.cumprod(num / den)
            if not np.isfinite(terms[-1]):
                raise OverflowError("series terms exceed binary64 range")

            if k_term is None:
                partials = (total + comp) + np.cumsum(terms)
                small = np.abs(terms) <= rel_tol * np.abs(partials)
                if count < _MIN_STOP_INDEX:
                    small[: _MIN_STOP_INDEX - count] = False
                ext = np.concatenate((carry, small))
                run = ext[:-2] & ext[1:-1] & ext[2:]
                hits = np.flatnonzero(run)
                if hits.size:
                    terms = terms[: int(hits[0]) + 1]
                    converged = True
                carry = ext[-2:].copy()

            total, comp = _accumulate(total, comp, float(np.sum(terms)))
            t_last = float(terms[-1])
            count += len(terms)
            if converged:
                break

    value = total + comp
    n_last = count - 1
    if k_term is not None and count == k_term + 1:
        return SummationResult(value, count, 0.0, SummationStatus.TERMINATED)

    status = SummationStatus.CONVERGED if converged else SummationStatus.MAX_TERMS_REACHED
    if saturated and margin > 0.0 and k_term is None and n_last >= _MIN_STOP_INDEX:
        all_params = spec.numerators + spec.denominators
        if not all_params or n_last + min(all_params) > 1.0:
            c1 = _term_shape_coefficient(spec)
            value += _tail_correction(t_last, n_last, margin, c1)
        tail = abs(t_last) * (n_last + 1) / margin
    else:
        tail = abs(t_last)
    return SummationResult(value, count, tail, status)


def ramanujan_mu_terms(b: float, mu: float) -> SeriesSpec:
    """Gauss-type spec for the mu-spaced sum S = sum (1/2)_n / n! / (b + n mu).

    The sum of the returned 2F1 series times 1/b equals S:
    1/(b + n mu) = (1/b) (b/mu)_n / (b/mu + 1)_n.
    """
    if not (b > 0.0):
        raise DomainError(f"b must be positive, got {b!r}")
    if not (mu > 0.0):
        raise DomainError(f"mu must be positive, got {mu!r}")
    ratio = b / mu
    return SeriesSpec((0.5, ratio), (ratio + 1.0,))
