"""Closed-form summation theorems for unit-argument hypergeometric series.

Covers the Gauss and Dixon evaluations, a contiguous 3F2 formula, the
generalized Karlsson-Minton formula for integral parameter differences, and
the family of weighted sums built from ((1/2)_n / n!)^2 terms.

Every function returns the closed-form value only; pairing these against
direct summation is the job of :mod:`hypersum.verify`.  Validity conditions
are checked strictly and raise PreconditionError (condition violated),
DegenerateError (parameter collision), or PoleError (gamma pole) rather than
returning NaN.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from collections.abc import Sequence

from .errors import DegenerateError, DomainError, PreconditionError
from .specialfn import digamma, gamma, gamma_ratio, pochhammer

__all__ = [
    "ShiftedPair",
    "gauss_2f1",
    "dixon_3f2",
    "contiguous_3f2",
    "ratio_sum_extension",
    "karlsson_minton",
    "ck_coefficient",
    "ck_vandermonde",
    "mu_spaced_sum",
    "s_p",
    "weighted_s1",
    "weighted_s2",
    "weighted_pair",
]

# Relative b/c gap below which the two-gamma branch of ratio_sum_extension
# has lost ~8 digits to cancellation and the digamma limit takes over.
_DIGAMMA_BRANCH_GAP = 1e-8


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


@dataclass(frozen=True)
class ShiftedPair:
    """One (f, m) lower/upper parameter pair with a positive integer shift m.

    The pair contributes an upper parameter f + m and a lower parameter f to a
    Karlsson-Minton series.  f must not be a nonpositive integer, so (f)_k
    never vanishes.
    """

    f: float
    m: int

    def __post_init__(self) -> None:
        if self.m != int(self.m) or self.m < 1:
            raise DegenerateError(f"pair shift must be a positive integer, got {self.m!r}")
        object.__setattr__(self, "m", int(self.m))
        f = float(self.f)
        if math.isnan(f) or math.isinf(f):
            raise DegenerateError(f"pair parameter must be finite, got {f!r}")
        if _is_nonpositive_integer(f):
            raise DegenerateError(f"pair parameter f={f!r} is a nonpositive integer")
        object.__setattr__(self, "f", f)


def gauss_2f1(a: float, b: float, c: float) -> float:
    """2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).

    Requires c - a - b > 0.  Symmetric in a and b by construction: both
    orderings produce the identical gamma-ratio call.
    """
    # c - (a + b) keeps the call bitwise symmetric in a and b
    margin = c - (a + b)
    if not (margin > 0.0):
        raise PreconditionError(f"c-a-b>0 violated: {margin:.6g} <= 0")
    return gamma_ratio([c, margin], [c - a, c - b])


def dixon_3f2(a: float, b: float, c: float) -> float:
    """Well-poised 3F2[a, b, c; 1+a-b, 1+a-c; 1] in closed form.

    Value: Gamma(1+a/2) Gamma(1+a-b) Gamma(1+a-c) Gamma(1+a/2-b-c) /
    [Gamma(1+a) Gamma(1+a/2-b) Gamma(1+a/2-c) Gamma(1+a-b-c)], valid for
    a/2 - b - c > -1.
    """
    half_a = 0.5 * a
    if not (half_a - b - c > -1.0):
        raise PreconditionError(f"a/2-b-c>-1 violated: {half_a - b - c:.6g} <= -1")
    return gamma_ratio(
        [1.0 + half_a, 1.0 + a - b, 1.0 + a - c, 1.0 + half_a - b - c],
        [1.0 + a, 1.0 + half_a - b, 1.0 + half_a - c, 1.0 + a - b - c],
    )


def contiguous_3f2(a: float, b: float, c: float, m: int) -> float:
    """3F2[a, b, c; b+m, c+1; 1] for positive integer m.

    Value: c Gamma(1-a) (b)_m / (b-c)_m * { Gamma(c)/Gamma(1+c-a)
    - Gamma(b)/Gamma(1+b-a) * sum_{k<m} (1-a)_k (b-c)_k / ((1+b-a)_k k!) }.

    Requires m + 1 - a > 0 (convergence of the left side) and (b-c)_m != 0;
    b = c and the other integer collisions b - c in {-1, ..., -(m-1)} are
    DegenerateError since the closed form becomes 0/0 there.
    """
    if m != int(m) or m < 1:
        raise DomainError(f"m must be a positive integer, got {m!r}")
    m = int(m)
    if not (m + 1.0 - a > 0.0):
        raise PreconditionError(f"m+1-a>0 violated: {m + 1.0 - a:.6g} <= 0")
    shift_poch = pochhammer(b - c, m)
    if shift_poch == 0.0:
        raise DegenerateError(
            f"(b-c)_m vanishes for b-c={b - c!r}, m={m}; the b=c limit is "
            "only available through ratio_sum_extension"
        )
    inner = 0.0
    u = 1.0
    for k in range(m):
        inner += u
        u *= (1.0 - a + k) * (b - c + k) / ((1.0 + b - a + k) * (k + 1.0))
    braces = gamma_ratio([c], [1.0 + c - a]) - gamma_ratio([b], [1.0 + b - a]) * inner
    return c * gamma(1.0 - a) * pochhammer(b, m) / shift_poch * braces


def ratio_sum_extension(b: float, c: float) -> float:
    """sum_n (1/2)_n / n! / ((1 + n/b)(1 + n/c)) for b, c > 0.

    Equals 3F2[1/2, b, c; b+1, c+1; 1].  For b != c the value is
    sqrt(pi) b c / (b - c) * {Gamma(c)/Gamma(c+1/2) - Gamma(b)/Gamma(b+1/2)};
    the b = c limit replaces the gamma difference with a digamma derivative:
    sqrt(pi) b^2 Gamma(b)/Gamma(b+1/2) * {psi(b+1/2) - psi(b)}.

    Relative gaps below 1e-8 route to the digamma branch evaluated at the
    midpoint, where first-order continuity keeps the switch error below the
    cancellation noise of the two-gamma form.
    """
    if not (b > 0.0):
        raise DomainError(f"b must be positive, got {b!r}")
    if not (c > 0.0):
        raise DomainError(f"c must be positive, got {c!r}")
    if abs(b - c) < _DIGAMMA_BRANCH_GAP * max(b, c):
        x = 0.5 * (b + c)
        ratio = gamma_ratio([x], [x + 0.5])
        return math.sqrt(math.pi) * x * x * ratio * (digamma(x + 0.5) - digamma(x))
    diff = gamma_ratio([c], [c + 0.5]) - gamma_ratio([b], [b + 0.5])
    return math.sqrt(math.pi) * b * c / (b - c) * diff


def ck_coefficient(k: int, pairs: Sequence[ShiftedPair]) -> float:
    """Coefficient C_k of the Karlsson-Minton sum.

    C_k = (-1)^k / k! * F[-k, (f_i + m_i); (f_i); 1], the inner series being a
    terminating sum of k + 1 terms.  The alternating sum cancels down to
    O(binom(m,k)) from terms of size O(m^k), so it runs in exact rational
    arithmetic on the binary64 inputs; the single rounding is the final
    conversion back to float.
    """
    if k != int(k) or k < 0:
        raise DomainError(f"k must be a nonnegative integer, got {k!r}")
    k = int(k)
    rationals = [(Fraction(pair.f), pair.m) for pair in pairs]
    total = Fraction(0)
    u = Fraction(1)
    for j in range(k + 1):
        total += u
        num = Fraction(j - k)  # (-k)_j recurrence factor
        den = Fraction(j + 1)
        for f, m in rationals:
            num *= f + (m + j)
            den *= f + j
        u *= num / den
    sign = -1 if k % 2 else 1
    return float(Fraction(sign, math.factorial(k)) * total)


def ck_vandermonde(k: int, f: float, m: int) -> float:
    """Single-pair shortcut C_k = binom(m, k) / (f)_k, by Vandermonde."""
    if k != int(k) or k < 0:
        raise DomainError(f"k must be a nonnegative integer, got {k!r}")
    return math.comb(int(m), int(k)) / pochhammer(f, int(k))


def karlsson_minton(
    a: float, b: float, c: float, pairs: Sequence[ShiftedPair]
) -> float:
    """F[a, b, (f_i + m_i); c, (f_i); 1] with integral parameter differences.

    Value: Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)) *
    sum_{k=0}^{m} (-1)^k (a)_k (b)_k C_k / (1+a+b-c)_k with m = sum m_i,
    valid for c - a - b > m.  An empty pair list reduces to gauss_2f1.
    """
    pairs = tuple(pairs)
    m_total = sum(p.m for p in pairs)
    margin = c - a - b
    if not (margin > m_total):
        raise PreconditionError(f"c-a-b>m violated: {margin:.6g} <= {m_total}")
    terms = []
    sign = 1.0
    poch_a = poch_b = poch_low = 1.0
    for k in range(m_total + 1):
        if poch_low == 0.0:
            raise DegenerateError(
                f"(1+a+b-c)_k vanishes at k={k}; a+b-c must not be a "
                "negative integer of magnitude <= m"
            )
        terms.append(sign * poch_a * poch_b * ck_coefficient(k, pairs) / poch_low)
        sign = -sign
        poch_a *= a + k
        poch_b *= b + k
        poch_low *= 1.0 + a + b - c + k
    prefactor = gamma_ratio([c, margin], [c - a, c - b])
    return prefactor * math.fsum(terms)


def mu_spaced_sum(b: float, mu: float) -> float:
    """Closed form of sum_n (1/2)_n / n! / (b + n mu) for b, mu > 0.

    Value: sqrt(pi) Gamma(b/mu) / (mu Gamma(b/mu + 1/2)), from the Gauss
    theorem applied to the equivalent 2F1(1/2, b/mu; b/mu + 1; 1) / b.
    """
    if not (b > 0.0):
        raise DomainError(f"b must be positive, got {b!r}")
    if not (mu > 0.0):
        raise DomainError(f"mu must be positive, got {mu!r}")
    ratio = b / mu
    return math.sqrt(math.pi) * gamma_ratio([ratio], [ratio + 0.5]) / mu


def s_p(p: int) -> float:
    """S_p = sum_n ((1/2)_n / n!)^2 / ((n+1)...(n+p)) = Gamma(p)/Gamma(p+1/2)^2.

    S_1 = 4/pi, S_2 = 16/(9 pi), S_3 = 128/(225 pi), ...
    """
    if p != int(p):
        raise DomainError(f"p must be an integer, got {p!r}")
    p = int(p)
    return gamma_ratio([float(p)], [p + 0.5, p + 0.5])


def weighted_s1(p: int, f: float) -> float:
    """sum_n ((1/2)_n/n!)^2 (n+f) / ((n+1)...(n+p)) for integer p >= 2.

    Value: Gamma(p)/Gamma(p+1/2)^2 * (f + 1/(4(p-1))).
    """
    if p != int(p) or p < 2:
        raise PreconditionError(f"p must be an integer >= 2, got {p!r}")
    p = int(p)
    return s_p(p) * (f + 0.25 / (p - 1.0))


def weighted_s2(p: int, f: float) -> float:
    """sum_n ((1/2)_n/n!)^2 (n+f)(n+f+1) / ((n+1)...(n+p)) for integer p >= 3.

    Value: Gamma(p)/Gamma(p+1/2)^2 *
    (f(f+1) + (f+1)/(2(p-1)) + 9/(16(p-1)(p-2))).
    """
    if p != int(p) or p < 3:
        raise PreconditionError(f"p must be an integer >= 3, got {p!r}")
    p = int(p)
    poly = f * (f + 1.0) + (f + 1.0) / (2.0 * (p - 1.0)) + 9.0 / (16.0 * (p - 1.0) * (p - 2.0))
    return s_p(p) * poly


def weighted_pair(p: int, f1: float, f2: float) -> float:
    """sum_n ((1/2)_n/n!)^2 (n+f1)(n+f2) / ((n+1)...(n+p)) for integer p >= 3.

    Value: Gamma(p)/Gamma(p+1/2)^2 *
    (f1 f2 + (f1+f2+1)/(4(p-1)) + 9/(16(p-1)(p-2))); symmetric in f1, f2 and
    reduces to weighted_s2 at f2 = f1 + 1.
    """
    if p != int(p) or p < 3:
        raise PreconditionError(f"p must be an integer >= 3, got {p!r}")
    p = int(p)
    poly = f1 * f2 + (f1 + f2 + 1.0) / (4.0 * (p - 1.0)) + 9.0 / (16.0 * (p - 1.0) * (p - 2.0))
    return s_p(p) * poly
