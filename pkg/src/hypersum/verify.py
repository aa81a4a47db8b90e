"""Identity catalog and verification harness.

Each identity pairs a direct summation (the left side, evaluated by
:func:`hypersum.series.sum_series`) with its closed form (the right side, from
:mod:`hypersum.theorems`) and reports absolute/relative agreement.  The
summation is driven two decades tighter than the pass tolerance so the
comparison measures the identity, not the stop rule.

Grid sweeps evaluate the Cartesian product of parameter lists in row-major
order; points that violate an identity's validity conditions produce
not-applicable reports (``passed is None``) instead of being dropped.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from collections.abc import Mapping, Sequence
from typing import Any

from .errors import (
    ConfigError,
    DegenerateError,
    DivergenceError,
    DomainError,
    NondegenerateError,
    PoleError,
    PreconditionError,
)
from .series import (
    DEFAULT_MAX_TERMS,
    SeriesSpec,
    SummationResult,
    SummationStatus,
    ramanujan_mu_terms,
    sum_series,
)
from . import theorems
from .theorems import ShiftedPair

__all__ = [
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
]

DEFAULT_REL_TOL = 1e-10

# Floor on the summation tolerance: two decades of headroom under the pass
# tolerance, but never so tight that the stop rule cannot fire at all.
_SUMMATION_HEADROOM = 1e-2
_SUMMATION_TOL_FLOOR = 1e-13

_ERROR_KINDS = (
    PreconditionError,
    DegenerateError,
    DivergenceError,
    DomainError,
    NondegenerateError,
    PoleError,
)


class IdentityId(str, enum.Enum):
    """Catalog identifiers, also used as CLI identity names."""

    EQ_1_1 = "eq1.1"
    EQ_1_2 = "eq1.2"
    EQ_1_3 = "eq1.3"
    EQ_1_6 = "eq1.6"
    EQ_2_1 = "eq2.1"
    EQ_2_2 = "eq2.2"
    EQ_2_3 = "eq2.3"
    EQ_2_5 = "eq2.5"
    EQ_2_6 = "eq2.6"
    EQ_2_7 = "eq2.7"
    EQ_2_8 = "eq2.8"
    TELESCOPE = "telescope"


_SIGNATURES: dict[IdentityId, tuple[str, ...]] = {
    IdentityId.EQ_1_1: (),
    IdentityId.EQ_1_2: (),
    IdentityId.EQ_1_3: (),
    IdentityId.EQ_1_6: ("b", "mu"),
    IdentityId.EQ_2_1: ("a", "b", "c", "m"),
    IdentityId.EQ_2_2: ("a", "b", "c", "pairs"),
    IdentityId.EQ_2_3: ("b", "c"),
    IdentityId.EQ_2_5: ("p",),
    IdentityId.EQ_2_6: ("p", "f"),
    IdentityId.EQ_2_7: ("p", "f"),
    IdentityId.EQ_2_8: ("p", "f1", "f2"),
    IdentityId.TELESCOPE: ("p", "f"),
}


def identity_signature(identity: IdentityId | str) -> tuple[str, ...]:
    """Parameter names required by an identity, in canonical order."""
    return _SIGNATURES[IdentityId(identity)]


@dataclass(frozen=True)
class IdentityCase:
    """One catalog instance: an identity plus concrete parameters."""

    identity: IdentityId
    parameters: dict[str, Any]
    rel_tol: float = DEFAULT_REL_TOL

    def __post_init__(self) -> None:
        identity = IdentityId(self.identity)
        object.__setattr__(self, "identity", identity)
        expected = set(_SIGNATURES[identity])
        got = set(self.parameters)
        if got != expected:
            raise ConfigError(
                f"{identity.value} expects parameters {sorted(expected)}, got {sorted(got)}"
            )
        if not (self.rel_tol > 0.0):
            raise ConfigError(f"rel_tol must be positive, got {self.rel_tol!r}")


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one identity instance.

    ``passed`` is True/False for applicable points and None when the
    identity's validity conditions exclude the point; the violated (or
    checked) condition is recorded in ``precondition_note``.
    """

    case: IdentityCase
    lhs: float | None
    rhs: float | None
    abs_err: float | None
    rel_err: float | None
    passed: bool | None
    precondition_note: str
    summation: SummationResult | None

    @property
    def applicable(self) -> bool:
        return self.passed is not None


@dataclass(frozen=True)
class _Assembled:
    spec: SeriesSpec
    scale: float
    closed: float
    note: str


def _require_int(name: str, value: Any) -> int:
    if value != int(value):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    return int(value)


def _require_series_safe_f(name: str, f: float) -> float:
    f = float(f)
    if f <= 0.0 and f == math.floor(f):
        raise DegenerateError(
            f"{name}={f!r} is a nonpositive integer; the weighted series has "
            "no hypergeometric parameterization there"
        )
    return f


def _normalize_pairs(raw: Any) -> tuple[ShiftedPair, ...]:
    if isinstance(raw, ShiftedPair):
        raw = (raw,)
    pairs = []
    for item in raw:
        if isinstance(item, ShiftedPair):
            pairs.append(item)
        else:
            f, m = item
            pairs.append(ShiftedPair(float(f), int(m)))
    if not pairs:
        raise DegenerateError("at least one (f, m) pair is required")
    return tuple(pairs)


def _factorial(p: int) -> float:
    return float(math.factorial(p))


def _assemble(identity: IdentityId, params: Mapping[str, Any]) -> _Assembled:
    if identity is IdentityId.EQ_1_1:
        # Dixon at a = b = 1/2, c = 1/4.
        return _Assembled(
            SeriesSpec((0.5, 0.5, 0.25), (1.0, 1.25)),
            1.0,
            theorems.dixon_3f2(0.5, 0.5, 0.25),
            "a/2-b-c>-1: -0.5 > -1 (a=b=1/2, c=1/4)",
        )
    if identity is IdentityId.EQ_1_2:
        # Dixon at a = 1/2, b = c = 1/4.
        return _Assembled(
            SeriesSpec((0.5, 0.25, 0.25), (1.25, 1.25)),
            1.0,
            theorems.dixon_3f2(0.5, 0.25, 0.25),
            "a/2-b-c>-1: -0.25 > -1 (a=1/2, b=c=1/4)",
        )
    if identity is IdentityId.EQ_1_3:
        # Gauss at a = 1/2, b = 1/4, c = 5/4.
        return _Assembled(
            SeriesSpec((0.5, 0.25), (1.25,)),
            1.0,
            theorems.gauss_2f1(0.5, 0.25, 1.25),
            "c-a-b>0: 0.5 > 0 (a=1/2, b=1/4, c=5/4)",
        )
    if identity is IdentityId.EQ_1_6:
        b = float(params["b"])
        mu = float(params["mu"])
        spec = ramanujan_mu_terms(b, mu)  # DomainError for bad b, mu
        return _Assembled(
            spec,
            1.0 / b,
            theorems.mu_spaced_sum(b, mu),
            f"b>0 and mu>0: b={b:g}, mu={mu:g}",
        )
    if identity is IdentityId.EQ_2_1:
        a, b, c = (float(params[k]) for k in ("a", "b", "c"))
        m = _require_int("m", params["m"])
        closed = theorems.contiguous_3f2(a, b, c, m)
        return _Assembled(
            SeriesSpec((a, b, c), (b + m, c + 1.0)),
            1.0,
            closed,
            f"m+1-a>0: {m + 1.0 - a:.6g} > 0; (b-c)_m != 0",
        )
    if identity is IdentityId.EQ_2_2:
        a, b, c = (float(params[k]) for k in ("a", "b", "c"))
        pairs = _normalize_pairs(params["pairs"])
        m_total = sum(p.m for p in pairs)
        closed = theorems.karlsson_minton(a, b, c, pairs)
        uppers = (a, b) + tuple(p.f + p.m for p in pairs)
        lowers = (c,) + tuple(p.f for p in pairs)
        return _Assembled(
            SeriesSpec(uppers, lowers),
            1.0,
            closed,
            f"c-a-b>m: {c - a - b:.6g} > {m_total}",
        )
    if identity is IdentityId.EQ_2_3:
        b = float(params["b"])
        c = float(params["c"])
        closed = theorems.ratio_sum_extension(b, c)
        return _Assembled(
            SeriesSpec((0.5, b, c), (b + 1.0, c + 1.0)),
            1.0,
            closed,
            f"b>0 and c>0: b={b:g}, c={c:g}",
        )
    if identity is IdentityId.EQ_2_5:
        p = _require_int("p", params["p"])
        if p < 1:
            raise PreconditionError(f"p>=1 violated: p={p}")
        return _Assembled(
            SeriesSpec((0.5, 0.5), (p + 1.0,)),
            1.0 / _factorial(p),
            theorems.s_p(p),
            f"p>=1: p={p}",
        )
    if identity in (IdentityId.EQ_2_6, IdentityId.TELESCOPE):
        p = _require_int("p", params["p"])
        if p < 2:
            raise PreconditionError(f"p>=2 violated: p={p}")
        f = _require_series_safe_f("f", params["f"])
        spec = SeriesSpec((0.5, 0.5, f + 1.0), (p + 1.0, f))
        scale = f / _factorial(p)
        if identity is IdentityId.EQ_2_6:
            closed = theorems.weighted_s1(p, f)
        else:
            closed = theorems.s_p(p - 1) + (f - p) * theorems.s_p(p)
        return _Assembled(spec, scale, closed, f"p>=2: p={p}")
    if identity is IdentityId.EQ_2_7:
        p = _require_int("p", params["p"])
        if p < 3:
            raise PreconditionError(f"p>=3 violated: p={p}")
        f = _require_series_safe_f("f", params["f"])
        return _Assembled(
            SeriesSpec((0.5, 0.5, f + 2.0), (p + 1.0, f)),
            f * (f + 1.0) / _factorial(p),
            theorems.weighted_s2(p, f),
            f"p>=3: p={p}",
        )
    if identity is IdentityId.EQ_2_8:
        p = _require_int("p", params["p"])
        if p < 3:
            raise PreconditionError(f"p>=3 violated: p={p}")
        f1 = _require_series_safe_f("f1", params["f1"])
        f2 = _require_series_safe_f("f2", params["f2"])
        return _Assembled(
            SeriesSpec((0.5, 0.5, f1 + 1.0, f2 + 1.0), (p + 1.0, f1, f2)),
            f1 * f2 / _factorial(p),
            theorems.weighted_pair(p, f1, f2),
            f"p>=3: p={p}",
        )
    raise ConfigError(f"unknown identity {identity!r}")


def _summation_rel_tol(rel_tol: float) -> float:
    return max(rel_tol * _SUMMATION_HEADROOM, _SUMMATION_TOL_FLOOR)


def verify_identity(
    case: IdentityCase, max_terms: int = DEFAULT_MAX_TERMS
) -> VerificationReport:
    """Check one identity instance: direct summation against the closed form.

    Raises PreconditionError / DegenerateError / DivergenceError /
    DomainError / PoleError, with the failing condition in the message, when
    the parameters fall outside the identity's validity region.
    """
    assembled = _assemble(case.identity, case.parameters)
    result = sum_series(
        assembled.spec,
        rel_tol=_summation_rel_tol(case.rel_tol),
        max_terms=max_terms,
    )
    lhs = assembled.scale * result.value
    rhs = assembled.closed
    abs_err = abs(lhs - rhs)
    rel_err = abs_err / abs(rhs) if abs(rhs) >= 1e-300 else abs_err
    return VerificationReport(
        case=case,
        lhs=lhs,
        rhs=rhs,
        abs_err=abs_err,
        rel_err=rel_err,
        passed=bool(rel_err <= case.rel_tol),
        precondition_note=assembled.note,
        summation=result,
    )


def sweep(
    identity: IdentityId | str,
    grid: Mapping[str, Sequence[Any]],
    rel_tol: float = DEFAULT_REL_TOL,
    seed: int = 0,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> list[VerificationReport]:
    """Verify an identity over the Cartesian product of parameter lists.

    Rows appear in row-major order over the grid (the last signature
    parameter varies fastest).  Grid points outside the validity region
    yield not-applicable reports.  An empty grid yields an empty list.
    ``seed`` is accepted for interface stability; the sweep itself is fully
    deterministic.
    """
    del seed
    identity = IdentityId(identity)
    if not grid:
        return []
    signature = _SIGNATURES[identity]
    if set(grid) != set(signature):
        raise ConfigError(
            f"{identity.value} sweep needs values for {list(signature)}, "
            f"got {sorted(grid)}"
        )
    for name, values in grid.items():
        if not isinstance(values, (list, tuple)) or len(values) == 0:
            raise ConfigError(f"grid axis {name!r} must be a nonempty list")
    reports: list[VerificationReport] = []
    for combo in itertools.product(*(grid[name] for name in signature)):
        case = IdentityCase(identity, dict(zip(signature, combo)), rel_tol)
        try:
            reports.append(verify_identity(case, max_terms=max_terms))
        except _ERROR_KINDS as err:
            reports.append(
                VerificationReport(
                    case=case,
                    lhs=None,
                    rhs=None,
                    abs_err=None,
                    rel_err=None,
                    passed=None,
                    precondition_note=str(err),
                    summation=None,
                )
            )
    return reports


def builtin_catalog(rel_tol: float = DEFAULT_REL_TOL) -> list[IdentityCase]:
    """The twelve canonical identity instances.

    Identities whose parameters are fixed by the source material keep those
    values; the rest carry representative defaults.
    """
    return [
        IdentityCase(IdentityId.EQ_1_1, {}, rel_tol),
        IdentityCase(IdentityId.EQ_1_2, {}, rel_tol),
        IdentityCase(IdentityId.EQ_1_3, {}, rel_tol),
        IdentityCase(IdentityId.EQ_1_6, {"b": 1.0, "mu": 2.0}, rel_tol),
        IdentityCase(
            IdentityId.EQ_2_1, {"a": 0.3, "b": 1.7, "c": 0.9, "m": 2}, rel_tol
        ),
        IdentityCase(
            IdentityId.EQ_2_2,
            {
                "a": 0.4,
                "b": 0.3,
                "c": 6.0,
                "pairs": (ShiftedPair(1.3, 1), ShiftedPair(2.1, 2)),
            },
            rel_tol,
        ),
        IdentityCase(IdentityId.EQ_2_3, {"b": 0.5, "c": 0.25}, rel_tol),
        IdentityCase(IdentityId.EQ_2_5, {"p": 1}, rel_tol),
        IdentityCase(IdentityId.EQ_2_6, {"p": 2, "f": 0.5}, rel_tol),
        IdentityCase(IdentityId.EQ_2_7, {"p": 3, "f": 0.7}, rel_tol),
        IdentityCase(IdentityId.EQ_2_8, {"p": 4, "f1": 0.3, "f2": 2.2}, rel_tol),
        IdentityCase(IdentityId.TELESCOPE, {"p": 3, "f": 1.0}, rel_tol),
    ]


def _encode_parameters(params: Mapping[str, Any]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for key, value in params.items():
        if key == "pairs":
            out[key] = [[pair.f, pair.m] for pair in _normalize_pairs(value)]
        else:
            out[key] = value
    return out


def _decode_parameters(params: Mapping[str, Any]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for key, value in params.items():
        if key == "pairs":
            out[key] = tuple(ShiftedPair(float(f), int(m)) for f, m in value)
        else:
            out[key] = value
    return out


def report_to_dict(report: VerificationReport) -> dict[str, Any]:
    """JSON-ready encoding; inverse of :func:`report_from_dict`."""
    summation = None
    if report.summation is not None:
        summation = {
            "value": report.summation.value,
            "terms_used": report.summation.terms_used,
            "tail_estimate": report.summation.tail_estimate,
            "status": report.summation.status.value,
        }
    return {
        "identity": report.case.identity.value,
        "parameters": _encode_parameters(report.case.parameters),
        "rel_tol": report.case.rel_tol,
        "lhs": report.lhs,
        "rhs": report.rhs,
        "abs_err": report.abs_err,
        "rel_err": report.rel_err,
        "passed": report.passed,
        "precondition_note": report.precondition_note,
        "summation": summation,
    }


def report_from_dict(data: Mapping[str, Any]) -> VerificationReport:
    case = IdentityCase(
        IdentityId(data["identity"]),
        _decode_parameters(data["parameters"]),
        float(data["rel_tol"]),
    )
    summation = None
    if data.get("summation") is not None:
        raw = data["summation"]
        summation = SummationResult(
            value=float(raw["value"]),
            terms_used=int(raw["terms_used"]),
            tail_estimate=float(raw["tail_estimate"]),
            status=SummationStatus(raw["status"]),
        )
    return VerificationReport(
        case=case,
        lhs=data["lhs"],
        rhs=data["rhs"],
        abs_err=data["abs_err"],
        rel_err=data["rel_err"],
        passed=data["passed"],
        precondition_note=data["precondition_note"],
        summation=summation,
    )
