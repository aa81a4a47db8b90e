"""Command-line front end.

Usage:
    hypersum eval "0.5,0.25;1.25"              # sum a series directly
    hypersum verify --identity eq2.6 --p 3 --f 0.7
    hypersum sweep --identity eq2.8 --p 3,4,5 --f1 0.3,1.1 --f2 2.2
    hypersum table --format csv                # the built-in numeric table

Global flags: --format human|json|csv, --rel-tol (default 1e-10),
--max-terms (default 10000000), --seed (default 0).

Exit codes: 0 success, 1 usage/config error, 2 not-applicable or divergent,
3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from collections.abc import Sequence
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
from .series import DEFAULT_MAX_TERMS, SeriesSpec, SummationStatus, sum_series
from . import theorems
from .verify import (
    DEFAULT_REL_TOL,
    IdentityCase,
    IdentityId,
    VerificationReport,
    identity_signature,
    report_to_dict,
    sweep,
    verify_identity,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_APPLICABLE = 2
EXIT_FAILURE = 3

_NA_ERRORS = (
    PreconditionError,
    DegenerateError,
    DivergenceError,
    DomainError,
    NondegenerateError,
    PoleError,
)

_PARAM_FLAGS = ("a", "b", "c", "f", "f1", "f2", "mu", "p", "m", "pairs")
_INT_PARAMS = frozenset({"p", "m"})


def _human(x: float) -> str:
    return format(x, ".12g")


def _machine(x: float) -> str:
    return format(x, ".17g")


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the CLI contract wants 1.
    def error(self, message: str) -> None:  # type: ignore[override]
        raise ConfigError(message)


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json", "csv"), default="human")
    common.add_argument("--rel-tol", dest="rel_tol", type=float, default=DEFAULT_REL_TOL)
    common.add_argument("--max-terms", dest="max_terms", type=int, default=DEFAULT_MAX_TERMS)
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(
        prog="hypersum",
        description="Evaluate and verify unit-argument hypergeometric summations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common], help="sum a series directly")
    p_eval.add_argument("spec", help="series parameters as 'a1,a2,...;b1,b2,...'")
    # Let specs with a leading negative parameter ("-3,2;5") parse as
    # positionals instead of being mistaken for option flags.
    p_eval._negative_number_matcher = re.compile(r"^-\d")

    for name, helptext in (
        ("verify", "check one identity instance"),
        ("sweep", "check an identity over a parameter grid"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--identity", required=True, help="identity id, e.g. eq2.6")
        for flag in _PARAM_FLAGS:
            p.add_argument(f"--{flag}", type=str, default=None)

    sub.add_parser("table", parents=[common], help="emit the built-in numeric table")
    return parser


def _parse_float(token: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ConfigError(f"not a number: {token!r}") from None
    if math.isnan(value) or math.isinf(value):
        raise ConfigError(f"not a finite number: {token!r}")
    return value


def _parse_int(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ConfigError(f"not an integer: {token!r}") from None


def _parse_float_list(text: str) -> list[float]:
    if text.strip() == "":
        return []
    return [_parse_float(tok.strip()) for tok in text.split(",")]


def _parse_series_spec(text: str) -> SeriesSpec:
    parts = text.split(";")
    if len(parts) != 2:
        raise ConfigError(
            f"series spec must look like 'a1,a2,...;b1,b2,...', got {text!r}"
        )
    return SeriesSpec(_parse_float_list(parts[0]), _parse_float_list(parts[1]))


def _parse_pairs(text: str) -> tuple[theorems.ShiftedPair, ...]:
    pairs = []
    for tok in text.split(","):
        tok = tok.strip()
        if ":" not in tok:
            raise ConfigError(f"pair must look like f:m, got {tok!r}")
        f_part, m_part = tok.split(":", 1)
        pairs.append(theorems.ShiftedPair(_parse_float(f_part), _parse_int(m_part)))
    return tuple(pairs)


def _parameter_values(identity: IdentityId, args: argparse.Namespace, listy: bool) -> dict[str, Any]:
    """Collect the identity's parameters from CLI flags.

    With ``listy`` each flag may hold a comma-separated list (sweep grids);
    otherwise exactly one value per flag (verify).
    """
    signature = identity_signature(identity)
    params: dict[str, Any] = {}
    for flag in _PARAM_FLAGS:
        raw = getattr(args, flag)
        if flag not in signature:
            if raw is not None:
                raise ConfigError(f"--{flag} does not apply to {identity.value}")
            continue
        if raw is None:
            raise ConfigError(
                f"{identity.value} requires --{flag} "
                f"(signature: {', '.join(signature)})"
            )
        if flag == "pairs":
            value: Any = _parse_pairs(raw)
            params[flag] = [value] if listy else value
        elif flag in _INT_PARAMS:
            tokens = [t.strip() for t in raw.split(",")] if listy else [raw]
            values = [_parse_int(t) for t in tokens if t != ""]
            if listy and not values:
                raise ConfigError(f"--{flag} has an empty value list")
            params[flag] = values if listy else values[0]
        else:
            if listy:
                values = _parse_float_list(raw)
                if not values:
                    raise ConfigError(f"--{flag} has an empty value list")
                params[flag] = values
            else:
                params[flag] = _parse_float(raw)
    return params


def _lookup_identity(name: str) -> IdentityId:
    try:
        return IdentityId(name)
    except ValueError:
        valid = ", ".join(i.value for i in IdentityId)
        raise ConfigError(f"unknown identity {name!r}; valid ids: {valid}") from None


def _emit(lines: Sequence[str]) -> None:
    sys.stdout.write("\n".join(lines) + "\n")


def _params_text(identity: IdentityId, params: dict[str, Any]) -> str:
    chunks = []
    for name in identity_signature(identity):
        value = params[name]
        if name == "pairs":
            body = ",".join(f"{p.f:g}:{p.m}" for p in value)
            chunks.append(f"pairs={body}")
        elif isinstance(value, int):
            chunks.append(f"{name}={value}")
        else:
            chunks.append(f"{name}={value:g}")
    return " ".join(chunks)


# ----------------------------------------------------------------- eval ----


def _cmd_eval(args: argparse.Namespace) -> int:
    spec = _parse_series_spec(args.spec)
    try:
        result = sum_series(spec, rel_tol=args.rel_tol, max_terms=args.max_terms)
    except (DivergenceError, OverflowError) as err:
        if args.format == "json":
            _emit([json.dumps({
                "command": "eval",
                "inputs": _eval_inputs(args, spec),
                "results": [],
                "summary": {"error": str(err), "exit": EXIT_NOT_APPLICABLE},
            }, indent=2)])
        else:
            _emit([f"divergent: {err}"])
        return EXIT_NOT_APPLICABLE

    row = {
        "value": result.value,
        "terms_used": result.terms_used,
        "tail_estimate": result.tail_estimate,
        "status": result.status.value,
    }
    code = EXIT_OK if result.status != SummationStatus.MAX_TERMS_REACHED else EXIT_NOT_APPLICABLE
    if args.format == "json":
        _emit([json.dumps({
            "command": "eval",
            "inputs": _eval_inputs(args, spec),
            "results": [row],
            "summary": {"status": result.status.value, "exit": code},
        }, indent=2)])
    elif args.format == "csv":
        _emit([
            "value,terms_used,tail_estimate,status",
            f"{_machine(result.value)},{result.terms_used},"
            f"{_machine(result.tail_estimate)},{result.status.value}",
        ])
    else:
        _emit([
            f"value          {_human(result.value)}",
            f"terms_used     {result.terms_used}",
            f"tail_estimate  {_human(result.tail_estimate)}",
            f"status         {result.status.value}",
        ])
    return code


def _eval_inputs(args: argparse.Namespace, spec: SeriesSpec) -> dict[str, Any]:
    return {
        "spec": args.spec,
        "numerators": list(spec.numerators),
        "denominators": list(spec.denominators),
        "rel_tol": args.rel_tol,
        "max_terms": args.max_terms,
    }


# --------------------------------------------------------------- verify ----


def _cmd_verify(args: argparse.Namespace) -> int:
    identity = _lookup_identity(args.identity)
    params = _parameter_values(identity, args, listy=False)
    case = IdentityCase(identity, params, rel_tol=args.rel_tol)
    try:
        report = verify_identity(case, max_terms=args.max_terms)
    except _NA_ERRORS as err:
        if args.format == "json":
            _emit([json.dumps({
                "command": "verify",
                "inputs": _verify_inputs(args, identity, params),
                "results": [],
                "summary": {"not_applicable": str(err), "exit": EXIT_NOT_APPLICABLE},
            }, indent=2)])
        else:
            _emit([f"not applicable: {err}"])
        return EXIT_NOT_APPLICABLE

    code = EXIT_OK if report.passed else EXIT_FAILURE
    if args.format == "json":
        _emit([json.dumps({
            "command": "verify",
            "inputs": _verify_inputs(args, identity, params),
            "results": [report_to_dict(report)],
            "summary": {"passed": report.passed, "exit": code},
        }, indent=2)])
    elif args.format == "csv":
        _emit([_REPORT_CSV_HEADER, _report_csv_row(report)])
    else:
        assert report.summation is not None
        _emit([
            f"identity       {identity.value}",
            f"parameters     {_params_text(identity, params) or '(none)'}",
            f"lhs (series)   {_human(report.lhs)}",
            f"rhs (closed)   {_human(report.rhs)}",
            f"abs_err        {_human(report.abs_err)}",
            f"rel_err        {_human(report.rel_err)}",
            f"terms_used     {report.summation.terms_used}",
            f"precondition   {report.precondition_note}",
            f"passed         {'yes' if report.passed else 'NO'}",
        ])
    return code


def _verify_inputs(
    args: argparse.Namespace, identity: IdentityId, params: dict[str, Any]
) -> dict[str, Any]:
    encoded = {
        k: ([[p.f, p.m] for p in v] if k == "pairs" else v) for k, v in params.items()
    }
    return {
        "identity": identity.value,
        "parameters": encoded,
        "rel_tol": args.rel_tol,
        "max_terms": args.max_terms,
        "seed": args.seed,
    }


# ---------------------------------------------------------------- sweep ----

_REPORT_CSV_HEADER = (
    "identity,parameters,lhs,rhs,abs_err,rel_err,passed,terms_used,status,note"
)


def _csv_line(fields: Sequence[Any]) -> str:
    # proper quoting: parameter and note fields may contain commas
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="").writerow(fields)
    return buffer.getvalue()


def _report_csv_row(report: VerificationReport) -> str:
    case = report.case
    params = _params_text(case.identity, case.parameters)
    if report.passed is None:
        fields = [case.identity.value, params, "", "", "", "", "na", "", "",
                  report.precondition_note]
    else:
        summ = report.summation
        fields = [
            case.identity.value,
            params,
            _machine(report.lhs),
            _machine(report.rhs),
            _machine(report.abs_err),
            _machine(report.rel_err),
            "true" if report.passed else "false",
            summ.terms_used,
            summ.status.value,
            report.precondition_note,
        ]
    return _csv_line(fields)


def _cmd_sweep(args: argparse.Namespace) -> int:
    identity = _lookup_identity(args.identity)
    grid = _parameter_values(identity, args, listy=True)
    reports = sweep(
        identity, grid, rel_tol=args.rel_tol, seed=args.seed, max_terms=args.max_terms
    )
    n_pass = sum(1 for r in reports if r.passed is True)
    n_fail = sum(1 for r in reports if r.passed is False)
    n_na = sum(1 for r in reports if r.passed is None)
    code = EXIT_OK if n_fail == 0 else EXIT_FAILURE
    summary = {
        "passed": n_pass,
        "failed": n_fail,
        "not_applicable": n_na,
        "exit": code,
    }
    if args.format == "json":
        _emit([json.dumps({
            "command": "sweep",
            "inputs": _sweep_inputs(args, identity, grid),
            "results": [report_to_dict(r) for r in reports],
            "summary": summary,
        }, indent=2)])
    elif args.format == "csv":
        _emit([_REPORT_CSV_HEADER, *(_report_csv_row(r) for r in reports)])
    else:
        lines = []
        for r in reports:
            ptxt = _params_text(identity, r.case.parameters)
            if r.passed is None:
                lines.append(f"{ptxt:<40s} n/a: {r.precondition_note}")
            else:
                verdict = "pass" if r.passed else "FAIL"
                lines.append(
                    f"{ptxt:<40s} lhs={_human(r.lhs)} rhs={_human(r.rhs)} "
                    f"rel_err={r.rel_err:.3e} {verdict}"
                )
        lines.append(
            f"passed={n_pass} failed={n_fail} not_applicable={n_na}"
        )
        _emit(lines)
    return code


def _sweep_inputs(
    args: argparse.Namespace, identity: IdentityId, grid: dict[str, Any]
) -> dict[str, Any]:
    encoded: dict[str, Any] = {}
    for key, values in grid.items():
        if key == "pairs":
            encoded[key] = [[[p.f, p.m] for p in combo] for combo in values]
        else:
            encoded[key] = values
    return {
        "identity": identity.value,
        "grid": encoded,
        "rel_tol": args.rel_tol,
        "max_terms": args.max_terms,
        "seed": args.seed,
    }


# ---------------------------------------------------------------- table ----

# The symbolic forms are classical: the first row's denominator carries the
# fourth power of Gamma(3/4), which the closed form and the series agree on.
_TABLE_ROWS: tuple[tuple[str, str], ...] = (
    ("eq1.1", "pi^2/(4*Gamma(3/4)^4)"),
    ("eq1.2", "pi^(5/2)/(8*sqrt(2)*Gamma(3/4)^2)"),
    ("eq1.3", "pi^(3/2)/(2*sqrt(2)*Gamma(3/4)^2)"),
    ("S_1", "4/pi"),
    ("S_2", "16/(9*pi)"),
    ("S_3", "128/(225*pi)"),
)


def _table_entries(rel_tol: float, max_terms: int) -> list[dict[str, Any]]:
    sum_tol = max(rel_tol * 1e-2, 1e-13)
    specs: dict[str, tuple[SeriesSpec, float, float]] = {
        "eq1.1": (
            SeriesSpec((0.5, 0.5, 0.25), (1.0, 1.25)),
            1.0,
            theorems.dixon_3f2(0.5, 0.5, 0.25),
        ),
        "eq1.2": (
            SeriesSpec((0.5, 0.25, 0.25), (1.25, 1.25)),
            1.0,
            theorems.dixon_3f2(0.5, 0.25, 0.25),
        ),
        "eq1.3": (
            SeriesSpec((0.5, 0.25), (1.25,)),
            1.0,
            theorems.gauss_2f1(0.5, 0.25, 1.25),
        ),
        "S_1": (SeriesSpec((0.5, 0.5), (2.0,)), 1.0, theorems.s_p(1)),
        "S_2": (SeriesSpec((0.5, 0.5), (3.0,)), 0.5, theorems.s_p(2)),
        "S_3": (
            SeriesSpec((0.5, 0.5), (4.0,)),
            1.0 / 6.0,
            theorems.s_p(3),
        ),
    }
    entries = []
    for identity, symbolic in _TABLE_ROWS:
        spec, scale, closed = specs[identity]
        direct = scale * sum_series(spec, rel_tol=sum_tol, max_terms=max_terms).value
        rel_err = abs(direct - closed) / abs(closed)
        entries.append({
            "identity": identity,
            "symbolic": symbolic,
            "closed": closed,
            "direct": direct,
            "rel_err": rel_err,
            "passed": bool(rel_err <= rel_tol),
        })
    return entries


def _cmd_table(args: argparse.Namespace) -> int:
    entries = _table_entries(args.rel_tol, args.max_terms)
    n_fail = sum(1 for e in entries if not e["passed"])
    code = EXIT_OK if n_fail == 0 else EXIT_FAILURE
    if args.format == "json":
        _emit([json.dumps({
            "command": "table",
            "inputs": {"rel_tol": args.rel_tol, "max_terms": args.max_terms},
            "results": entries,
            "summary": {"passed": len(entries) - n_fail, "failed": n_fail, "exit": code},
        }, indent=2)])
    elif args.format == "csv":
        lines = ["identity,symbolic,closed,direct,rel_err"]
        for e in entries:
            lines.append(
                f"{e['identity']},{e['symbolic']},{_machine(e['closed'])},"
                f"{_machine(e['direct'])},{_machine(e['rel_err'])}"
            )
        _emit(lines)
    else:
        lines = [
            f"{'identity':<8s} {'closed form':<36s} {'closed':<18s} "
            f"{'direct':<18s} {'rel_err':<10s}"
        ]
        for e in entries:
            mark = "" if e["passed"] else "  FAIL"
            lines.append(
                f"{e['identity']:<8s} {e['symbolic']:<36s} "
                f"{_human(e['closed']):<18s} {_human(e['direct']):<18s} "
                f"{e['rel_err']:.3e}{mark}"
            )
        _emit(lines)
    return code


# ----------------------------------------------------------------- main ----


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.max_terms < 1:
            raise ConfigError(f"--max-terms must be >= 1, got {args.max_terms}")
        if not (args.rel_tol > 0.0):
            raise ConfigError(f"--rel-tol must be positive, got {args.rel_tol}")
        handler = {
            "eval": _cmd_eval,
            "verify": _cmd_verify,
            "sweep": _cmd_sweep,
            "table": _cmd_table,
        }[args.command]
        return handler(args)
    except (ConfigError, DomainError, NondegenerateError) as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
