"""Command-line front end.

Three subcommands: ``sum`` evaluates one series by a chosen method,
``verify`` runs a named suite against the closed forms and can write a
machine-readable report, ``table`` sweeps an angle range and prints one
row per angle with a column per method plus the closed form.

Angles are accepted as ``90deg`` or ``1.5708rad``; a bare number means
radians.  Exit codes: 0 success or all cases passed, 1 verification
failures, 2 domain or pole error, 3 divergence, 64 usage, 74 I/O.
"""

from __future__ import annotations

import argparse
import math
import re
import sys

from .closed_forms import evaluate_closed
from .exceptions import DivergentSeriesError, DomainError
from .phase import binomial_phase_power
from .series import (
    PARTIAL_TERM_BUDGET,
    ConvergenceClass,
    SeriesKind,
    SeriesSpec,
    abel_sum,
    cesaro_sum,
    classify,
    partial_sum,
)
from .suites import SUITE_NAMES, run_suite, write_report

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_DOMAIN = 2
EXIT_DIVERGENT = 3
EXIT_USAGE = 64
EXIT_IO = 74

_ANGLE_RE = re.compile(
    r"\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)(deg|rad)?\s*")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def parse_angle(text: str) -> float:
    """Angle in radians from '90deg', '1.5708rad' or a bare radian value."""
    m = _ANGLE_RE.fullmatch(text)
    if not m:
        raise argparse.ArgumentTypeError(
            f"bad angle {text!r}; write e.g. 90deg or 1.5708rad")
    value = float(m.group(1))
    return math.radians(value) if m.group(2) == "deg" else value


def _num(x: float) -> str:
    return format(float(x), ".17g")


def _default_method(conv: ConvergenceClass) -> str:
    if conv in (ConvergenceClass.SUMMABLE_ONLY, ConvergenceClass.DIVERGENT):
        return "abel"
    return "partial"


def _method_warning(method: str, conv: ConvergenceClass, n: float) -> str | None:
    if method == "partial" and conv in (ConvergenceClass.SUMMABLE_ONLY,
                                        ConvergenceClass.DIVERGENT):
        return f"partial sums do not settle for a {conv.value} series"
    if method == "cesaro" and (conv is ConvergenceClass.DIVERGENT or n <= -2):
        return "the first-order mean is unreliable here; abel is the robust choice"
    return None


def _cmd_sum(args) -> int:
    spec = SeriesSpec(args.kind, args.n, args.phi)
    conv = classify(spec)
    method = args.method or _default_method(conv)
    warning = _method_warning(method, conv, spec.n)
    if warning:
        print(f"warning: {warning}", file=sys.stderr)

    if method == "partial":
        res = partial_sum(spec, args.terms or PARTIAL_TERM_BUDGET)
        value, terms_used, residual = res.value, res.terms_used, res.residual_estimate
    elif method == "cesaro":
        res = cesaro_sum(spec, args.terms or PARTIAL_TERM_BUDGET)
        value, terms_used, residual = res.value, res.terms_used, res.residual_estimate
    elif method == "abel":
        res = abel_sum(spec, terms=args.terms)
        value, terms_used, residual = res.value, res.terms_used, res.residual_estimate
    else:  # phase
        try:
            cos_sum, sin_sum = binomial_phase_power(spec.n, spec.phi)
        except ValueError as exc:
            raise DomainError(f"phase path needs integer n in 0..64: {exc}") from exc
        value = sin_sum if spec.kind is SeriesKind.SINE else cos_sum
        terms_used, residual = int(spec.n) + 1, 0.0

    print(f"value {_num(value)}")
    print(f"method {method}")
    print(f"terms_used {terms_used}")
    print(f"residual_estimate {_num(residual)}")
    print(f"convergence {conv.value}")
    if args.tol is not None:
        closed = evaluate_closed(spec.kind, spec.n, spec.phi)
        if closed.domain_ok:
            err = abs(value - closed.value)
            ok = err <= args.tol * (1.0 + abs(closed.value))
            print(f"expected {_num(closed.value)}")
            print(f"abs_error {_num(err)}")
            print(f"within_tolerance {'true' if ok else 'false'}")
        else:
            print("expected undefined (outside the closed-form domain)")
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, args.grid_step_deg, args.tol)
    if args.report:
        try:
            write_report(report, args.report)
        except OSError as exc:
            print(f"error: cannot write report: {exc}", file=sys.stderr)
            return EXIT_IO
    print(f"suite={args.suite} total={report.total} passed={report.passed} "
          f"failed={report.failed} wall_time={report.wall_time:.3f}s")
    return EXIT_OK if report.failed == 0 else EXIT_FAILURES


_TABLE_METHODS = ("partial", "cesaro", "abel", "phase")


def _table_cell(method: str, spec: SeriesSpec, terms: int | None) -> float:
    try:
        if method == "partial":
            return partial_sum(spec, terms or PARTIAL_TERM_BUDGET).value
        if method == "cesaro":
            return cesaro_sum(spec, terms or PARTIAL_TERM_BUDGET).value
        if method == "abel":
            return abel_sum(spec, terms=terms).value
        cos_sum, sin_sum = binomial_phase_power(spec.n, spec.phi)
        return sin_sum if spec.kind is SeriesKind.SINE else cos_sum
    except (DomainError, DivergentSeriesError, ValueError):
        return math.nan


def _cmd_table(args) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    if not methods:
        raise _UsageError("empty method list")
    for m in methods:
        if m not in _TABLE_METHODS:
            raise _UsageError(f"unknown method {m!r}; choose from {_TABLE_METHODS}")
    if args.step <= 0:
        raise _UsageError("step must be positive")
    if args.from_angle >= args.to_angle:
        raise _UsageError("empty angle range: need from < to")

    count = int(math.floor((args.to_angle - args.from_angle) / args.step + 1e-9)) + 1
    print("phi_deg,phi_rad," + ",".join(methods) + ",closed")
    for i in range(count):
        phi = args.from_angle + i * args.step
        spec = SeriesSpec(args.kind, args.n, phi)
        cells = [_table_cell(m, spec, args.terms) for m in methods]
        cells.append(evaluate_closed(spec.kind, spec.n, phi).value)
        print(",".join([_num(math.degrees(phi)), _num(phi)] + [_num(c) for c in cells]))
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="trigsum",
                     description="Binomial multiple-angle series: evaluate, verify, tabulate.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sum = sub.add_parser("sum", help="evaluate one series")
    p_sum.add_argument("--kind", required=True, choices=["cos", "sin"])
    p_sum.add_argument("--n", required=True, type=float)
    p_sum.add_argument("--phi", required=True, type=parse_angle)
    p_sum.add_argument("--method", choices=["partial", "cesaro", "abel", "phase"])
    p_sum.add_argument("--terms", type=int)
    p_sum.add_argument("--tol", type=float)
    p_sum.set_defaults(func=_cmd_sum)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("--suite", required=True, choices=list(SUITE_NAMES))
    p_ver.add_argument("--grid-step-deg", type=float)
    p_ver.add_argument("--tol", type=float)
    p_ver.add_argument("--report")
    p_ver.set_defaults(func=_cmd_verify)

    p_tab = sub.add_parser("table", help="tabulate methods over an angle range")
    p_tab.add_argument("--kind", required=True, choices=["cos", "sin"])
    p_tab.add_argument("--n", required=True, type=float)
    p_tab.add_argument("--from", dest="from_angle", required=True, type=parse_angle)
    p_tab.add_argument("--to", dest="to_angle", required=True, type=parse_angle)
    p_tab.add_argument("--step", required=True, type=parse_angle)
    p_tab.add_argument("--methods", required=True)
    p_tab.add_argument("--terms", type=int)
    p_tab.set_defaults(func=_cmd_table)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"trigsum: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"trigsum: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"trigsum: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DivergentSeriesError as exc:
        print(f"trigsum: divergent: {exc}", file=sys.stderr)
        return EXIT_DIVERGENT
    except ValueError as exc:
        print(f"trigsum: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"trigsum: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
