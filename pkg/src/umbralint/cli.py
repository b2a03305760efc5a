"""Command line: evaluate one integral, or sweep a parameter grid against the oracle.

Exit codes: 0 success, 1 internal or convergence error (including a failed
verification), 2 domain violation, 3 parse or configuration error.
"""
from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import oracle
from .closed_forms import FAMILY_PARAMS, DomainCheck, FamilyInvocation, check_domain, evaluate
from .errors import (
    ConvergenceError, DomainError, NoMatchError, ParseError, UmbralError, UnsupportedError,
)
from .parser import RawIntegrand, _Tokens, _bool_or_value, match_family, parse
from .specfun.series import EvalConfig

EXIT_OK, EXIT_ERROR, EXIT_DOMAIN, EXIT_PARSE = 0, 1, 2, 3

DEFAULT_VERIFY_TOL = 1e-6


@dataclass
class EvalReport:
    invocation: FamilyInvocation
    closed_form: complex | None = None
    oracle: oracle.OracleResult | None = None
    rel_error: float | None = None
    domain: DomainCheck = field(default_factory=lambda: DomainCheck(True))
    diagnostics: dict = field(default_factory=dict)
    exit_code: int = EXIT_OK

    def to_dict(self):
        cf = None if self.closed_form is None else {"re": self.closed_form.real, "im": self.closed_form.imag}
        orc = None if self.oracle is None else {
            "value": self.oracle.value, "err_est": self.oracle.abs_error_estimate,
        }
        params = {k: (v if isinstance(v, bool) else _jsonable(v)) for k, v in self.invocation.params.items()}
        return {
            "family": self.invocation.family,
            "params": params,
            "closed_form": cf,
            "oracle": orc,
            "rel_error": self.rel_error,
            "domain": {"ok": self.domain.ok, "violations": list(self.domain.violations)},
            "diagnostics": {k: str(v) for k, v in self.diagnostics.items()},
        }

    def to_text(self):
        lines = [str(self.invocation)]
        if not self.domain.ok:
            lines.append("  domain violation: " + "; ".join(self.domain.violations))
        if self.closed_form is not None:
            z = self.closed_form
            lines.append(f"  closed form : {z.real:.16g}" + (f" {z.imag:+.3g}i" if z.imag else ""))
        if self.oracle is not None:
            lines.append(f"  oracle      : {self.oracle.value:.16g} (err est {self.oracle.abs_error_estimate:.2g})")
            lines.append(f"  rel error   : {self.rel_error:.3g}")
        for k, v in self.diagnostics.items():
            lines.append(f"  {k}: {v}")
        return "\n".join(lines)


def _jsonable(v):
    v = complex(v)
    return v.real if v.imag == 0 else {"re": v.real, "im": v.imag}


def run(inv, verify=False, tol=DEFAULT_VERIFY_TOL):
    """Domain check, closed form, and optionally the oracle; never raises for math errors."""
    report = EvalReport(inv)
    report.domain = check_domain(inv)
    if not report.domain.ok:
        report.exit_code = EXIT_DOMAIN
        return report
    info = {}
    try:
        report.closed_form = evaluate(inv, info)
    except DomainError as exc:
        report.domain = DomainCheck(False, tuple(exc.violations))
        report.exit_code = EXIT_DOMAIN
        return report
    except UmbralError as exc:
        report.diagnostics["error"] = f"{type(exc).__name__}: {exc}"
        report.exit_code = EXIT_ERROR
        return report
    finally:
        report.diagnostics.update(info)
    if verify:
        try:
            report.oracle = oracle.oracle_for(inv)
        except (ConvergenceError, UnsupportedError, DomainError) as exc:
            report.diagnostics["oracle_error"] = f"{type(exc).__name__}: {exc}"
            report.exit_code = EXIT_ERROR
            return report
        diff = abs(report.closed_form - report.oracle.value)
        report.rel_error = diff / max(abs(report.closed_form), 1.0)
        if report.rel_error > tol:
            report.diagnostics["verify"] = f"rel_error {report.rel_error:.3g} exceeds {tol:g}"
            report.exit_code = EXIT_ERROR
    return report


# ---------------------------------------------------------------------------
# grids

def parse_grid(family, spec):
    """``name=v1,v2,...;name=lo:hi:n`` -> ordered list of parameter dicts.

    Every family parameter must appear. Values accept ``1/2`` rationals; a
    ``lo:hi:n`` entry is ``n`` evenly spaced points including both ends.
    """
    if family not in FAMILY_PARAMS:
        raise ParseError(f"unknown family {family!r}", 0, list(FAMILY_PARAMS))
    axes = {}
    for chunk in filter(None, (c.strip() for c in spec.split(";"))):
        name, eq, values = chunk.partition("=")
        name = name.strip()
        if not eq or name not in FAMILY_PARAMS[family]:
            raise ParseError(f"bad grid entry {chunk!r}", spec.find(chunk), FAMILY_PARAMS[family])
        if name in axes:
            raise ParseError(f"parameter {name!r} given twice", spec.find(chunk))
        if values.count(":") == 2:
            lo, hi, n = values.split(":")
            axes[name] = list(np.linspace(_number(lo), _number(hi), int(n)))
        else:
            axes[name] = [_number(v) for v in values.split(",")]
    missing = [n for n in FAMILY_PARAMS[family] if n not in axes]
    if missing:
        raise ParseError(f"grid is missing {', '.join(missing)}", len(spec), missing)
    names = FAMILY_PARAMS[family]
    return [dict(zip(names, combo)) for combo in itertools.product(*(axes[n] for n in names))]


def _number(text):
    tok = _Tokens(text)
    v = _bool_or_value(tok)
    if tok.peek()[0] != "end":
        tok.fail("trailing input")
    return v if isinstance(v, bool) else float(v)


@dataclass
class CheckSummary:
    family: str
    tol: float
    reports: list
    exit_code: int = EXIT_OK
    error: str | None = None

    @property
    def passed(self):
        return sum(r.exit_code == EXIT_OK for r in self.reports)

    @property
    def failed(self):
        return len(self.reports) - self.passed

    @property
    def worst(self):
        scored = [r for r in self.reports if r.rel_error is not None]
        return max(scored, key=lambda r: r.rel_error, default=None)

    def to_dict(self):
        worst = self.worst
        return {
            "family": self.family,
            "tol": self.tol,
            "points": len(self.reports),
            "passed": self.passed,
            "failed": self.failed,
            "worst_rel_error": None if worst is None else worst.rel_error,
            "worst_point": None if worst is None else str(worst.invocation),
            "error": self.error,
            "failures": [r.to_dict() for r in self.reports if r.exit_code != EXIT_OK],
        }

    def to_text(self):
        if self.error:
            return f"check {self.family}: configuration error: {self.error}"
        worst = self.worst
        text = f"check {self.family}: {self.passed}/{len(self.reports)} passed at tol {self.tol:g}"
        if worst is not None:
            text += f"; worst rel_error {worst.rel_error:.3g} at {worst.invocation}"
        for r in self.reports:
            if r.exit_code != EXIT_OK:
                text += "\n  FAIL " + r.to_text().replace("\n", "\n  ")
        return text


def check(family, grid, tol=DEFAULT_VERIFY_TOL, cfg=EvalConfig(), jobs=1):
    """Verify every grid point against the oracle.

    ``grid`` is a grid spec string or a list of parameter dicts. The whole
    grid is validated before anything is evaluated.
    """
    try:
        points = parse_grid(family, grid) if isinstance(grid, str) else list(grid)
        invs = [FamilyInvocation(family, p, cfg) for p in points]
    except (ParseError, ValueError) as exc:
        return CheckSummary(family, tol, [], EXIT_PARSE, str(exc))
    outside = [(inv, check_domain(inv)) for inv in invs]
    outside = [(inv, dc) for inv, dc in outside if not dc.ok]
    if outside:
        inv, dc = outside[0]
        msg = f"{len(outside)} grid point(s) leave the domain, e.g. {inv}: {'; '.join(dc.violations)}"
        return CheckSummary(family, tol, [], EXIT_DOMAIN, msg)
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            reports = list(pool.map(lambda i: run(i, True, tol), invs))
    else:
        reports = [run(inv, True, tol) for inv in invs]
    summary = CheckSummary(family, tol, reports)
    summary.exit_code = EXIT_OK if summary.failed == 0 else max(r.exit_code for r in reports)
    return summary


# ---------------------------------------------------------------------------
# entry point

def _config(args):
    return EvalConfig(rel_tol=args.rel_tol, max_terms=args.max_terms)


def _emit(payload, as_json, text):
    if as_json:
        print(json.dumps(payload, indent=2, allow_nan=False, ensure_ascii=False))
    else:
        print(text)


def _cmd_eval(args):
    cfg = _config(args)
    try:
        parsed = parse(args.expr, cfg)
        inv = match_family(parsed, cfg) if isinstance(parsed, RawIntegrand) else parsed
    except (ParseError, NoMatchError) as exc:
        payload = {"error": str(exc), "position": getattr(exc, "position", None)}
        _emit(payload, args.json, f"error: {exc}")
        return EXIT_PARSE
    report = run(inv, args.verify, args.tol)
    _emit(report.to_dict(), args.json, report.to_text())
    return report.exit_code


def _cmd_check(args):
    summary = check(args.family, args.grid, args.tol, _config(args), args.jobs)
    _emit(summary.to_dict(), args.json, summary.to_text())
    return summary.exit_code


def build_parser():
    env_terms = os.environ.get("UMBRAL_MAX_TERMS")
    default_terms = int(env_terms) if env_terms else EvalConfig().max_terms

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-terms", type=int, default=default_terms,
                        help="series term limit (default: $UMBRAL_MAX_TERMS or %(default)s)")
    common.add_argument("--rel-tol", type=float, default=EvalConfig().rel_tol,
                        help="series relative tolerance (default: %(default)g)")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    ap = argparse.ArgumentParser(prog="umbralint", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", parents=[common], help="evaluate one integral")
    ev.add_argument("expr", help="e.g. 'Theta(mu=0)' or 'int x^0.5 * J[0](2 x) * J[1](3 x) dx'")
    ev.add_argument("--verify", action="store_true", help="also run the quadrature oracle")
    ev.add_argument("--tol", type=float, default=DEFAULT_VERIFY_TOL,
                    help="relative tolerance for --verify (default: %(default)g)")
    ev.set_defaults(func=_cmd_eval)

    ch = sub.add_parser("check", parents=[common], help="verify a parameter grid against the oracle")
    ch.add_argument("--family", required=True, choices=list(FAMILY_PARAMS))
    ch.add_argument("--grid", required=True, help="e.g. 'mu=-0.5,0,0.25;lambda=0,1;p=1,2'")
    ch.add_argument("--tol", type=float, default=DEFAULT_VERIFY_TOL)
    ch.add_argument("--jobs", type=int, default=1, help="evaluate grid points on this many threads")
    ch.set_defaults(func=_cmd_check)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        _config(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
