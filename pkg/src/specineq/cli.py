"""Command-line front end.

Exit status: 0 success, 2 some point Violated, 3 only Inconclusive verdicts,
64 usage or domain error, 74 output could not be written, 1 internal error.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
from typing import Optional, Sequence

from .harness.cases import CHAIN_CASES, CaseEvaluationError, get_case, list_cases
from .harness.grid import BudgetExceeded, GridError, GridSpec, parse_override
from .harness.scan import CheckReport, iter_points, scan_grid, scan_monotonicity
from .harness.verdict import Direction
from .report import CaseSection, EvalRecord, ReportDocument, exit_status, fmt
from .specfun import ContractError, DomainError, FunctionId, RangeError, evaluate

CLI_TOL = 1e-10

EXIT_OK = 0
EXIT_VIOLATED = 2
EXIT_INCONCLUSIVE = 3
EXIT_USAGE = 64
EXIT_IO = 74
EXIT_INTERNAL = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _real(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _integer(text: str) -> int:
    x = _real(text)
    if not x.is_integer():
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(x)


def _add_tol(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=_real, default=CLI_TOL,
                   help=f"absolute error target (default {CLI_TOL:g})")


def _add_out(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", metavar="PATH", help="write here instead of stdout")


def _add_grid(p: argparse.ArgumentParser) -> None:
    p.add_argument("case", help="case identifier (see the cases command)")
    p.add_argument("--grid", action="append", default=[], metavar="NAME=LO:HI:COUNT",
                   help="override one axis of the default grid; repeatable")
    p.add_argument("--direction", choices=[d.value for d in Direction],
                   default=Direction.AS_STATED.value)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="specineq",
                     description="Certified evaluation of Gamma-type functions and "
                                 "grid checks of inequalities among them.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate one function with an error bound")
    p.add_argument("--fn", required=True, choices=[f.value for f in FunctionId])
    p.add_argument("--t", required=True, type=_real)
    p.add_argument("--k", type=_real)
    p.add_argument("--p", type=_integer)
    p.add_argument("--q", type=_real)
    p.add_argument("--m", type=_integer)
    _add_tol(p)
    _add_out(p)

    p = sub.add_parser("scan", help="check a case over a grid and write a JSON report")
    _add_grid(p)
    _add_tol(p)
    _add_out(p)

    p = sub.add_parser("scan-all", help="check every case on its default grid")
    _add_tol(p)
    _add_out(p)

    p = sub.add_parser("csv", help="per-point verdicts for a case as CSV")
    _add_grid(p)
    _add_tol(p)
    _add_out(p)

    p = sub.add_parser("cases", help="list the case catalog")
    _add_out(p)
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _grid_for(case_name: str, overrides: Sequence[str]) -> tuple:
    case = get_case(case_name)
    axes = dict(parse_override(o) for o in overrides)
    return case, case.default_grid.replace(axes)


def _section(case, grid: GridSpec, tol: float, direction: Direction) -> CaseSection:
    reports = [scan_grid(case.id, grid, tol, direction)]
    if case.id in CHAIN_CASES and direction is Direction.AS_STATED and len(grid.axis("t")) > 1:
        reports.append(scan_monotonicity(case.id, grid, tol))
    return CaseSection(case.id, case.citation, reports)


def _summary(reports: Sequence[CheckReport]) -> str:
    lines = []
    for r in reports:
        lines.append(f"{r.case.value} [{r.kind}, {r.direction.value}]: "
                     f"certified={r.certified} violated={r.violated} "
                     f"inconclusive={r.inconclusive} skipped={r.skipped_hypothesis_failures} "
                     f"worst_margin={fmt(r.worst_margin)}")
    return "\n".join(lines) + "\n"


def _finish_report(doc: ReportDocument, out: Optional[str]) -> int:
    reports = doc.check_reports()
    _emit(doc.dumps(), out)
    if out is not None:
        sys.stdout.write(_summary(reports))
    return exit_status(reports)


def cmd_eval(args, argv) -> int:
    fid = FunctionId(args.fn)
    params = {n: getattr(args, n) for n in ("m", "k", "p", "q") if getattr(args, n) is not None}
    approx = evaluate(fid, args.t, args.tol, **params)
    if args.out is not None:
        record = EvalRecord(fid.value, args.t, args.tol, approx,
                            {n: float(v) for n, v in params.items()})
        _emit(ReportDocument(list(argv), [record]).dumps(), args.out)
    shown = "".join(f"{n}={fmt(float(v))}, " for n, v in params.items())
    sys.stdout.write(f"{fid.value}({shown}t={fmt(args.t)})\n"
                     f"value        {fmt(approx.value)}\n"
                     f"error_bound  {fmt(approx.error_bound)}\n")
    return EXIT_OK


def cmd_scan(args, argv) -> int:
    case, grid = _grid_for(args.case, args.grid)
    grid.check_budget()
    section = _section(case, grid, args.tol, Direction(args.direction))
    return _finish_report(ReportDocument(list(argv), [section]), args.out)


def cmd_scan_all(args, argv) -> int:
    sections = []
    for cid, _, _ in list_cases():
        case = get_case(cid)
        case.default_grid.check_budget()
        sections.append(_section(case, case.default_grid, args.tol, Direction.AS_STATED))
    return _finish_report(ReportDocument(list(argv), sections), args.out)


def cmd_csv(args, argv) -> int:
    case, grid = _grid_for(args.case, args.grid)
    direction = Direction(args.direction)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["index", *grid.names, "margin", "verdict"])
    report = CheckReport(case.id, grid, args.tol, direction)
    for i, point, verdict in iter_points(case.id, grid, args.tol, direction):
        report.record(point, verdict)
        if verdict is None:
            continue
        writer.writerow([i, *(fmt(point[n]) for n in grid.names), fmt(verdict.margin),
                         verdict.tag.value])
    _emit(buf.getvalue(), args.out)
    return exit_status([report])


def cmd_cases(args, argv) -> int:
    lines = []
    for cid, params, citation in list_cases():
        schema = ", ".join(p.name if p.kind == "real" else f"{p.name}:{p.kind}" for p in params)
        lines.append(f"{cid.value:<13} ({schema})  {citation}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


_COMMANDS = {"eval": cmd_eval, "scan": cmd_scan, "scan-all": cmd_scan_all,
             "csv": cmd_csv, "cases": cmd_cases}


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return _COMMANDS[args.command](args, argv)
    except (DomainError, RangeError, ContractError, GridError, BudgetExceeded, ValueError) as e:
        print(f"specineq: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"specineq: cannot write output: {e}", file=sys.stderr)
        return EXIT_IO
    except CaseEvaluationError as e:
        print(f"specineq: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as e:  # noqa: BLE001
        print(f"specineq: internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
