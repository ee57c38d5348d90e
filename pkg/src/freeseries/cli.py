"""Command-line front end; a thin shell over the library.

Exit codes: 0 on success, 1 when a verification fails or a count table has
a mismatch, 2 on usage errors.  Output is deterministic byte for byte;
timing goes to the optional --timings flag and warnings go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ops
from .freealg import to_json_terms


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freeseries",
        description="Exact non-commutative power series: polynomial families, "
        "identity verification, and monomial-count tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fam = sub.add_parser("family", help="print one polynomial from the d/c/u/t families")
    fam.add_argument("family", choices=ops.FAMILY_NAMES)
    fam.add_argument("n", type=_positive_int)
    fam.add_argument(
        "--x",
        choices=ops.X_OPTIONS,
        default="keep",
        help="substitute x: 'comm' uses ab-ba, 'one' uses 1, 'keep' leaves it symbolic",
    )
    fam.add_argument(
        "--zero-diag",
        action="store_true",
        help="set the matrix entry a_{1,1} to zero (t family only)",
    )
    fam.add_argument("--format", choices=("text", "json"), default="text")

    ver = sub.add_parser("verify", help="run an identity verification suite")
    ver.add_argument("suite", choices=ops.SUITES)
    ver.add_argument("--degree", type=_nonnegative_int, default=8, help="truncation degree")
    ver.add_argument("--timings", action="store_true", help="append elapsed time per check")

    cnt = sub.add_parser("counts", help="monomial-count table with expected values")
    cnt.add_argument("family", choices=ops.COUNT_FAMILIES)
    cnt.add_argument("--n-max", type=_positive_int, default=5)
    cnt.add_argument("--zero-diag", action="store_true")
    return parser


def _warn_if_expensive(degree: int) -> None:
    if degree > ops.EXPENSIVE_DEGREE:
        print(
            f"warning: degree {degree} grows combinatorially; this may take a while",
            file=sys.stderr,
        )


def _cmd_family(args: argparse.Namespace) -> int:
    poly = ops.family_polynomial(args.family, args.n, args.x, args.zero_diag)
    _warn_if_expensive(ops.family_degree(args.family, args.n))
    if args.format == "json":
        print(json.dumps(to_json_terms(poly), indent=2))
    else:
        print(poly.canonical_string())
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    _warn_if_expensive(args.degree)
    reports = ops.run_suite(args.suite, args.degree)
    for report in reports:
        print(report.line(timings=args.timings))
    return 0 if all(report.passed for report in reports) else 1


def _cmd_counts(args: argparse.Namespace) -> int:
    rows = ops.counts_table(args.family, args.n_max, args.zero_diag)
    print(f"{'n':>3} {'count':>12} {'expected':>12}  match")
    for row in rows:
        marker = "ok" if row.match else "MISMATCH"
        print(f"{row.n:>3} {row.count:>12} {row.expected:>12}  {marker}")
    return 0 if all(row.match for row in rows) else 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "family":
            return _cmd_family(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_counts(args)
    except ops.UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
