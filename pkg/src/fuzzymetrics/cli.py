"""Batch command-line interface.

Verbs: validate, dist, profile, converge, family-report, counterexample.
Inputs are JSON files (or inline constructor tokens such as
``counterexample-un:5``); reports are deterministic JSON or CSV written to
stdout or ``--out``.  Exit status: 0 on success, 1 on input errors, 2 when
``--strict`` is set and a verdict fails.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .core import SampledFuzzy1D, as_grid, validate_representation
from .bodies import FuzzyBody2D
from .counterexample import (
    DEFAULT_EPS as CONVERGENCE_EPS,
    make_limit,
    make_un,
    member_sequence,
    refutation_report,
)
from .errors import FuzzyMetricsError, ParseError, VerdictFailure
from .family import (
    DEFAULT_DELTA_GRID,
    DEFAULT_EPS as FAMILY_EPS,
    compactness_conditions_report,
)
from .metrics import (
    DEFAULT_MAX_DEPTH,
    DEFAULT_TOL,
    d_infty_parametric,
    d_infty_sampled,
    default_report_grid,
    is_counterexample_object,
    level_convergence_report,
    level_distance_profile,
)
from .serialize import (
    decode_any,
    decode_family,
    dumps,
    profile_csv,
    sequence_profile_csv,
)

__all__ = ["main", "run"]


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def _load_input(spec: str):
    """A file path or an inline constructor token."""
    if spec == "counterexample-limit":
        return make_limit()
    if spec.startswith("counterexample-un:"):
        try:
            return make_un(int(spec.split(":", 1)[1]))
        except ValueError as exc:
            raise ParseError(f"bad member index in {spec!r}") from exc
    return decode_any(_load_json(spec))


def _load_input_or_family(spec: str, n_max: int):
    """Returns (object, None) for single inputs, (None, members) for
    family files or the inline member-sequence token."""
    if spec == "counterexample-seq":
        return None, [make_un(n) for n in range(1, n_max + 1)]
    if spec == "counterexample-limit" or spec.startswith("counterexample-un:"):
        return _load_input(spec), None
    doc = _load_json(spec)
    if isinstance(doc, list):
        return None, decode_family(doc)
    return decode_any(doc), None


def _load_family(spec: str):
    if spec == "counterexample-seq":
        return None  # callable sequence, resolved by the caller
    doc = _load_json(spec)
    return decode_family(doc)


def _parse_grid(spec: str | None, aware: bool):
    if spec is None or spec == "default":
        return default_report_grid(counterexample_aware=aware)
    try:
        return as_grid(np.linspace(0.0, 1.0, int(spec)))
    except ValueError:
        pass
    doc = _load_json(spec)
    try:
        return as_grid(doc)
    except FuzzyMetricsError as exc:
        raise ParseError(f"bad grid file {spec}: {exc}") from exc


def _parse_delta_grid(spec: str | None):
    if spec is None or spec == "default":
        return DEFAULT_DELTA_GRID
    if spec.startswith("pow2:"):
        try:
            lo, hi = spec[5:].split("..")
            ks = range(int(lo), int(hi) + 1)
        except ValueError as exc:
            raise ParseError(f"bad delta grid spec {spec!r}; expected pow2:A..B") from exc
        return tuple(2.0 ** -k for k in ks)
    try:
        return tuple(float(x) for x in spec.split(","))
    except ValueError as exc:
        raise ParseError(f"bad delta grid spec {spec!r}") from exc


def _header(args: argparse.Namespace, option_names: list[str]) -> dict:
    options = {}
    for name in option_names:
        options[name] = getattr(args, name.replace("-", "_"))
    return {
        "tool": "fuzzymetrics",
        "version": __version__,
        "command": args.command,
        "options": options,
    }


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _require_json(args: argparse.Namespace) -> None:
    if args.format == "csv":
        raise ParseError(f"{args.command} emits a nested report; csv is not supported")


def _cmd_validate(args: argparse.Namespace) -> int:
    obj = _load_input(args.input)
    if isinstance(obj, FuzzyBody2D):
        checks = [{"name": "body_reconstruction", "passed": True}]
        passed = True
        report_dict = {"passed": True, "tol": args.tol, "checks": checks}
    else:
        report = validate_representation(obj, tol=args.tol)
        passed = report.passed
        report_dict = report.to_dict()
    if args.format == "csv":
        lines = ["check,alpha,passed,measured"]
        for c in report_dict["checks"]:
            lines.append(
                "{},{},{},{}".format(
                    c["name"],
                    "" if c.get("alpha") is None else repr(c["alpha"]),
                    "true" if c["passed"] else "false",
                    "" if c.get("measured") is None else repr(c["measured"]),
                )
            )
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, dumps({"header": _header(args, ["input", "tol"]), "validation": report_dict}))
    if args.strict and not passed:
        raise VerdictFailure("validation failed")
    return 0


def _cmd_dist(args: argparse.Namespace) -> int:
    u = _load_input(args.a)
    v = _load_input(args.b)
    if isinstance(u, FuzzyBody2D) or isinstance(v, FuzzyBody2D):
        raise ParseError("dist expects 1-D fuzzy numbers")
    header = _header(args, ["a", "b", "tol", "max_depth"])
    if isinstance(u, SampledFuzzy1D) and isinstance(v, SampledFuzzy1D):
        body = {"method": "sampled-grid-max", "d_infty": d_infty_sampled(u, v)}
    else:
        enc = d_infty_parametric(u, v, tol=args.tol, max_depth=args.max_depth)
        body = {"method": "parametric-bisection", "enclosure": enc.to_dict()}
    if args.format == "csv":
        lines = ["key,value"]
        if "d_infty" in body:
            lines.append(f"d_infty,{repr(body['d_infty'])}")
        else:
            for k, val in body["enclosure"].items():
                lines.append(f"{k},{val if isinstance(val, bool) else repr(val)}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, dumps({"header": header, **body}))
    return 0


def _cmd_profile(args: argparse.Namespace) -> int:
    u, seq = _load_input_or_family(args.a, args.n_max)
    v = _load_input(args.b)
    if isinstance(u, FuzzyBody2D) or isinstance(v, FuzzyBody2D):
        raise ParseError("profile expects 1-D fuzzy numbers")
    members = [u] if seq is None else seq
    aware = is_counterexample_object(v) or any(is_counterexample_object(m) for m in members)
    grid = _parse_grid(args.grid, aware)
    header = _header(args, ["a", "b", "grid", "n_max"])
    if seq is None:
        profile = level_distance_profile(u, v, grid)
        if args.format == "json":
            _emit(
                args,
                dumps({"header": header, "profile": [{"alpha": a, "H": h} for a, h in profile]}),
            )
        else:
            _emit(args, profile_csv(profile))
        return 0
    rows = []
    for n, member in enumerate(seq, start=1):
        rows.extend((a, n, h) for a, h in level_distance_profile(member, v, grid))
    if args.format == "json":
        _emit(
            args,
            dumps({"header": header, "profile": [{"alpha": a, "n": n, "H": h} for a, n, h in rows]}),
        )
    else:
        _emit(args, sequence_profile_csv(rows))
    return 0


def _cmd_converge(args: argparse.Namespace) -> int:
    if args.seq == "counterexample-seq":
        seq = member_sequence()
        seq_is_ce = True
    else:
        seq = _load_family(args.seq)
        seq_is_ce = any(is_counterexample_object(m) for m in seq)
    limit = _load_input(args.limit)
    if isinstance(limit, FuzzyBody2D):
        raise ParseError("converge expects a 1-D limit")
    aware = seq_is_ce or is_counterexample_object(limit)
    grid = _parse_grid(args.grid, aware)
    report = level_convergence_report(seq, limit, grid, eps=args.eps, n_max=args.n_max)
    if args.format == "csv":
        lines = ["alpha,first_index,reached"]
        for e in report.entries:
            lines.append(
                "{},{},{}".format(
                    repr(e.alpha),
                    "" if e.first_index is None else e.first_index,
                    "true" if e.reached else "false",
                )
            )
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(
            args,
            dumps(
                {
                    "header": _header(args, ["seq", "limit", "grid", "eps", "n_max"]),
                    "convergence": report.to_dict(),
                }
            ),
        )
    if args.strict and not report.converged:
        raise VerdictFailure("level convergence not reached at every level")
    return 0


def _cmd_family_report(args: argparse.Namespace) -> int:
    _require_json(args)
    family = _load_family(args.family)
    if family is None:
        raise ParseError("family-report needs a finite family file")
    grid = None if args.grid is None else _parse_grid(args.grid, False).levels
    diagnostics = compactness_conditions_report(
        family,
        alpha_grid=grid,
        delta_grid=_parse_delta_grid(args.delta_grid),
        eps=args.eps,
    )
    _emit(
        args,
        dumps(
            {
                "header": _header(args, ["family", "grid", "delta_grid", "eps"]),
                "diagnostics": diagnostics.to_dict(),
            }
        ),
    )
    if args.strict and not diagnostics.passed:
        raise VerdictFailure("family diagnostics failed")
    return 0


def _cmd_counterexample(args: argparse.Namespace) -> int:
    _require_json(args)
    report = refutation_report(args.n_max, eps=args.eps, tol=args.tol)
    _emit(
        args,
        dumps({"header": _header(args, ["n_max", "eps", "tol"]), "report": report}),
    )
    if args.strict and not report["conclusion"]["criterion_refuted"]:
        raise VerdictFailure("refutation sub-checks did not all pass")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzymetrics",
        description="Metrics and compactness diagnostics for fuzzy numbers in alpha-cut form.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, default_format: str = "json") -> None:
        p.add_argument("--format", choices=["json", "csv"], default=default_format)
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        p.add_argument("--strict", action="store_true", help="exit 2 on a failing verdict")

    p = sub.add_parser("validate", help="check the cut-family axioms on one input")
    p.add_argument("input")
    p.add_argument("--tol", type=float, default=1e-9)
    common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("dist", help="supremum metric between two fuzzy numbers")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-depth", type=int, default=DEFAULT_MAX_DEPTH)
    common(p)
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("profile", help="levelwise distance profile of a pair or sequence")
    p.add_argument("a", help="fuzzy number, family file, or 'counterexample-seq'")
    p.add_argument("b")
    p.add_argument("--grid", default=None, help="level count, grid file, or 'default'")
    p.add_argument("--n-max", type=int, default=10, help="members taken from an inline sequence")
    common(p, default_format="csv")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("converge", help="levelwise convergence of a sequence to a limit")
    p.add_argument("seq", help="family file or 'counterexample-seq'")
    p.add_argument("limit")
    p.add_argument("--grid", default=None)
    p.add_argument("--eps", type=float, default=CONVERGENCE_EPS)
    p.add_argument("--n-max", type=int, default=100_000)
    common(p)
    p.set_defaults(func=_cmd_converge)

    p = sub.add_parser("family-report", help="compactness condition diagnostics for a family")
    p.add_argument("family")
    p.add_argument("--grid", default=None)
    p.add_argument("--delta-grid", default=None, help="'pow2:A..B' or comma-separated offsets")
    p.add_argument("--eps", type=float, default=FAMILY_EPS)
    common(p)
    p.set_defaults(func=_cmd_family_report)

    p = sub.add_parser("counterexample", help="machine-checked refutation report")
    p.add_argument("--n-max", type=int, default=100)
    p.add_argument("--eps", type=float, default=CONVERGENCE_EPS)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    common(p)
    p.set_defaults(func=_cmd_counterexample)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # --help/--version exit 0; bad invocations are input errors (status 1)
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except VerdictFailure as exc:
        print(f"verdict failure: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FuzzyMetricsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
