"""Unit-argument generalized hypergeometric series: direct summation,
classical closed-form summation theorems, and numerical identity
verification."""

from .errors import (
    ConfigError,
    DegenerateError,
    DivergenceError,
    DomainError,
    HypersumError,
    NondegenerateError,
    PoleError,
    PreconditionError,
)
from .specialfn import digamma, gamma, gamma_ratio, log_gamma, pochhammer
from .series import (
    DEFAULT_MAX_TERMS,
    SeriesSpec,
    SummationResult,
    SummationStatus,
    convergence_margin,
    ramanujan_mu_terms,
    sum_series,
)
from .theorems import (
    ShiftedPair,
    ck_coefficient,
    ck_vandermonde,
    contiguous_3f2,
    dixon_3f2,
    gauss_2f1,
    karlsson_minton,
    mu_spaced_sum,
    ratio_sum_extension,
    s_p,
    weighted_pair,
    weighted_s1,
    weighted_s2,
)
from .verify import (
    DEFAULT_REL_TOL,
    IdentityCase,
    IdentityId,
    VerificationReport,
    builtin_catalog,
    identity_signature,
    report_from_dict,
    report_to_dict,
    sweep,
    verify_identity,
)

__version__ = "0.1.0"

__all__ = [
    "HypersumError",
    "PoleError",
    "DomainError",
    "DivergenceError",
    "NondegenerateError",
    "PreconditionError",
    "DegenerateError",
    "ConfigError",
    "gamma",
    "log_gamma",
    "digamma",
    "pochhammer",
    "gamma_ratio",
    "SeriesSpec",
    "SummationResult",
    "SummationStatus",
    "convergence_margin",
    "sum_series",
    "ramanujan_mu_terms",
    "DEFAULT_MAX_TERMS",
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
    "IdentityId",
    "IdentityCase",
    "VerificationReport",
    "verify_identity",
    "sweep",
    "builtin_catalog",
    "identity_signature",
    "report_to_dict",
    "report_from_dict",
    "DEFAULT_REL_TOL",
    "__version__",
]
