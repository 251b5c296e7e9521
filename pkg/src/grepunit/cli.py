"""Command-line front end: single-instance invariant reports, closed-form
versus oracle verification, and parameter-grid sweeps.

All emitters are deterministic: stable ordering, no timestamps, run
metadata confined to a header object (JSON) or header line (text).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional

from . import __version__
from .arith import validate
from .closed_form import InvariantReport, invariant_report
from .errors import CapacityError, InvalidParametersError
from .verify import (
    CHECK_NAMES,
    STATUS_INVALID,
    STATUS_MATCH,
    STATUS_MISMATCH,
    STATUS_SKIPPED_CAPACITY,
    STATUS_SKIPPED_UNSUPPORTED,
    Caps,
    SweepSpec,
    VerifyOutcome,
    oracle_report,
    run_checks,
    sweep,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_CAPACITY = 3
EXIT_IO = 4
EXIT_USAGE = 64

FORMATS = ("json", "csv", "text")
CSV_COLUMNS = ("a", "b", "n", "check", "closed", "oracle", "status")
JSON_SAFE_MAX = 2**53

STATUS_ORDER = (
    STATUS_MATCH,
    STATUS_MISMATCH,
    STATUS_SKIPPED_CAPACITY,
    STATUS_SKIPPED_UNSUPPORTED,
    STATUS_INVALID,
)


class Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with code 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def json_ready(value):
    """Recursively convert ints beyond 2**53 to strings so JSON consumers
    that parse numbers as doubles keep full precision."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > JSON_SAFE_MAX else value
    if isinstance(value, (list, tuple)):
        return [json_ready(v) for v in value]
    if isinstance(value, dict):
        return {k: json_ready(v) for k, v in value.items()}
    return value


def csv_cell(value) -> str:
    """Flatten one value into a CSV field: decimal strings for integers,
    ';'-joined parts for lists and k=v dicts, empty for missing."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ";".join(csv_cell(v) for v in value)
    if isinstance(value, dict):
        return ";".join(f"{k}={csv_cell(v)}" for k, v in value.items())
    return str(value)


def parse_range(text: str) -> tuple[int, int]:
    """Inclusive `lo..hi` range; a bare integer means a single value."""
    s = text.strip()
    lo_s, dots, hi_s = s.partition("..")
    if not dots:
        hi_s = lo_s
    try:
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed range {text!r}, expected lo..hi")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def parse_checks(text: str) -> tuple[str, ...]:
    names = [s.strip() for s in text.split(",") if s.strip()]
    if not names:
        raise argparse.ArgumentTypeError("no checks given")
    if "all" in names:
        return CHECK_NAMES
    unknown = sorted(set(names) - set(CHECK_NAMES))
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown checks: {', '.join(unknown)} (known: {', '.join(CHECK_NAMES)})"
        )
    return tuple(c for c in CHECK_NAMES if c in names)


def summarize(rows: list[VerifyOutcome]) -> dict:
    counts = {status: 0 for status in STATUS_ORDER}
    for row in rows:
        counts[row.status] += 1
    return counts


def report_doc(report: InvariantReport) -> dict:
    p = report.params
    return {
        "kind": "report",
        "version": __version__,
        "params": {"a": p.a, "b": p.b, "n": p.n},
        "source": report.source,
        "generators": list(report.generators),
        "frobenius": report.frobenius,
        "genus": report.genus,
        "pseudo_frobenius": list(report.pseudo_frobenius),
        "type": report.type,
        "apery_sum": report.apery_sum,
        "n_of_s": report.n_of_s,
        "wilf_ok": report.wilf_ok,
    }


def row_dict(row: VerifyOutcome) -> dict:
    return {
        "a": row.a,
        "b": row.b,
        "n": row.n,
        "check": row.check,
        "closed": row.closed,
        "oracle": row.oracle,
        "status": row.status,
        "note": row.note,
    }


def render_report(report: InvariantReport, fmt: str) -> str:
    doc = report_doc(report)
    if fmt == "json":
        return json.dumps(json_ready(doc), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        columns = [k for k in doc if k not in ("kind", "version", "params")]
        writer.writerow(["a", "b", "n"] + columns)
        p = report.params
        writer.writerow([p.a, p.b, p.n] + [csv_cell(doc[k]) for k in columns])
        return buf.getvalue()
    lines = [f"generalized repunit semigroup  a={report.params.a} b={report.params.b} n={report.params.n}"]
    fields = (
        ("source", report.source),
        ("generators", " ".join(map(str, report.generators))),
        ("frobenius", report.frobenius),
        ("genus", report.genus),
        ("pseudo-frobenius", " ".join(map(str, report.pseudo_frobenius))),
        ("type", report.type),
        ("apery sum", report.apery_sum),
        ("n(S)", report.n_of_s),
        ("wilf", "ok" if report.wilf_ok else "VIOLATED"),
    )
    for name, value in fields:
        lines.append(f"  {name:<17} {value}")
    return "\n".join(lines) + "\n"


def render_rows(kind: str, header: dict, rows: list[VerifyOutcome], fmt: str) -> str:
    summary = summarize(rows)
    if fmt == "json":
        doc = {
            "kind": kind,
            "version": __version__,
            **header,
            "rows": [row_dict(r) for r in rows],
            "summary": summary,
        }
        return json.dumps(json_ready(doc), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in rows:
            writer.writerow(
                [r.a, r.b, r.n, r.check, csv_cell(r.closed), csv_cell(r.oracle), r.status]
            )
        return buf.getvalue()
    lines = []
    for r in rows:
        line = f"a={r.a} b={r.b} n={r.n}  {r.check:<12} {r.status:<20}"
        if r.status in (STATUS_MATCH, STATUS_MISMATCH):
            line += f" closed={csv_cell(r.closed)} oracle={csv_cell(r.oracle)}"
        if r.note:
            line += f"  ({r.note})"
        lines.append(line)
    lines.append("summary: " + ", ".join(f"{summary[s]} {s}" for s in STATUS_ORDER))
    return "\n".join(lines) + "\n"


def emit(text: str, out_path: Optional[str]) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def render_failure(args, error_kind: str, exc: Exception) -> None:
    """Errors honor --format too: JSON consumers get a structured object."""
    if getattr(args, "format", "text") == "json":
        doc = {
            "kind": "error",
            "version": __version__,
            "error": error_kind,
            "message": str(exc),
        }
        sys.stdout.write(json.dumps(json_ready(doc), indent=2) + "\n")
    else:
        print(f"error: {exc}", file=sys.stderr)


def make_caps(args) -> Caps:
    if args.cap is None:
        return Caps()
    return Caps(apery=args.cap, sieve=args.cap)


def cmd_report(args) -> int:
    params = validate(args.a, args.b, args.n)
    if args.source == "oracle":
        report = oracle_report(params, make_caps(args))
    else:
        report = invariant_report(params)
    emit(render_report(report, args.format), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    params = validate(args.a, args.b, args.n)
    rows = run_checks(params, args.checks, make_caps(args))
    header = {"params": {"a": params.a, "b": params.b, "n": params.n}}
    emit(render_rows("verify", header, rows, args.format), args.out)
    statuses = {r.status for r in rows}
    if STATUS_MISMATCH in statuses:
        return EXIT_MISMATCH
    if STATUS_SKIPPED_CAPACITY in statuses:
        return EXIT_CAPACITY
    return EXIT_OK


def cmd_sweep(args) -> int:
    try:
        spec = SweepSpec(
            a_range=args.a,
            b_range=args.b,
            n_range=args.n,
            checks=args.checks,
            skip_invalid=not args.no_skip_invalid,
        )
    except ValueError as exc:
        raise UsageError(str(exc))
    rows, summary = sweep(spec, make_caps(args))
    header = {
        "spec": {
            "a_range": list(spec.a_range),
            "b_range": list(spec.b_range),
            "n_range": list(spec.n_range),
            "checks": list(spec.checks),
            "skip_invalid": spec.skip_invalid,
        }
    }
    emit(render_rows("sweep", header, rows, args.format), args.out)
    if args.out or args.format == "csv":
        stream = sys.stdout if args.out else sys.stderr
        print("summary: " + ", ".join(f"{summary[s]} {s}" for s in STATUS_ORDER), file=stream)
    return EXIT_MISMATCH if summary[STATUS_MISMATCH] else EXIT_OK


class UsageError(Exception):
    pass


def build_parser() -> Parser:
    parser = Parser(prog="grepunit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--cap", type=int, default=None, metavar="N",
                       help="capacity limit for Apéry enumeration and sieves")
        p.add_argument("--out", default=None, metavar="PATH", help="write output to a file")
        p.add_argument("--format", choices=FORMATS, default="text")

    rep = sub.add_parser("report", help="all invariants of one semigroup")
    rep.add_argument("-a", type=int, required=True)
    rep.add_argument("-b", type=int, required=True)
    rep.add_argument("-n", type=int, required=True)
    rep.add_argument("--source", choices=("closed", "oracle"), default="closed",
                     help="compute via closed formulas (default) or brute force")
    common(rep)
    rep.set_defaults(func=cmd_report)

    ver = sub.add_parser("verify", help="closed formulas vs oracle on one semigroup")
    ver.add_argument("-a", type=int, required=True)
    ver.add_argument("-b", type=int, required=True)
    ver.add_argument("-n", type=int, required=True)
    ver.add_argument("--checks", type=parse_checks, default=CHECK_NAMES,
                     metavar="NAMES", help="comma-separated check names, or 'all'")
    common(ver)
    ver.set_defaults(func=cmd_verify)

    swp = sub.add_parser("sweep", help="verify over an inclusive parameter grid")
    swp.add_argument("--a", type=parse_range, required=True, metavar="LO..HI")
    swp.add_argument("--b", type=parse_range, required=True, metavar="LO..HI")
    swp.add_argument("--n", type=parse_range, required=True, metavar="LO..HI")
    swp.add_argument("--checks", type=parse_checks, default=CHECK_NAMES,
                     metavar="NAMES", help="comma-separated check names, or 'all'")
    swp.add_argument("--no-skip-invalid", action="store_true",
                     help="fail on invalid triples instead of recording them")
    common(swp)
    swp.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except InvalidParametersError as exc:
        render_failure(args, "invalid-params", exc)
        return EXIT_INVALID
    except CapacityError as exc:
        render_failure(args, "capacity", exc)
        return EXIT_CAPACITY
    except OSError as exc:
        render_failure(args, "io", exc)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
