"""Command-line interface.

    partition-expansion exact N
    partition-expansion approx N [--order 17] [--kind simple|full|hr] [--digits D]
    partition-expansion table [N ...] [--order 17] [--format csv|json] [--out PATH]
    partition-expansion verify [N ...] [--format json|csv] [--out PATH]

Lists of ``n`` accept single values, comma-separated values and ranges
written ``a..b``.  Exit codes: 0 success, 1 usage error, 2 numeric or solver
failure, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import __version__
from .errors import PartitionError
from .exact import exact_values, partition_exact
from .expansion import RATIO_DIGITS, Kind, evaluate, p_approx_simple
from .numerics import PrecisionContext, context_for_n, format_fraction
from .saddle import BOUND_NAMES, _sci, saddle_checks, solve_tn, verify_saddle_bounds

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2
EXIT_VERIFY = 3

TABLE_NS = (10, 11, 50, 51, 100, 101, 200, 201, 500, 600, 700, 800, 900, 1000)
DEFAULT_ORDER = 17
VERIFY_DIGITS = 50

_KINDS = {"simple": Kind.SIMPLIFIED, "full": Kind.FULL, "hr": Kind.HARDY_RAMANUJAN}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class TableRow:
    n: int
    p_exact: int
    p_bar: int

    @property
    def ratio(self) -> str:
        return format_fraction(Fraction(self.p_bar, self.p_exact), RATIO_DIGITS)

    def as_record(self) -> dict:
        return {"n": self.n, "p": str(self.p_exact), "p_bar": str(self.p_bar),
                "ratio": self.ratio}


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


def _positive(text: str) -> int:
    value = _non_negative(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _digits(text: str) -> int:
    value = _positive(text)
    if value < 20:
        raise argparse.ArgumentTypeError("precision must be at least 20 digits")
    return value


def parse_n_list(tokens: Iterable[str]) -> list[int]:
    """Expand ``["1..3", "10,11"]`` into ``[1, 2, 3, 10, 11]``."""
    out: list[int] = []
    for token in tokens:
        for piece in filter(None, token.split(",")):
            if ".." in piece:
                a, b = piece.split("..", 1)
                lo, hi = _positive(a), _positive(b)
                if hi < lo:
                    raise UsageError(f"empty range {piece!r}")
                out.extend(range(lo, hi + 1))
            else:
                out.append(_positive(piece))
    return out


def _context(n: int, order: int, digits: Optional[int]) -> PrecisionContext:
    ctx = context_for_n(n, order)
    return ctx if digits is None else ctx.with_digits(digits)


def table_rows(ns: Sequence[int], order: int = DEFAULT_ORDER,
               digits: Optional[int] = None, extra_digits: int = 0) -> list[TableRow]:
    """Rows of the comparison table; exact values from one shared prefix."""
    exact = exact_values(ns)
    rows = []
    for n in ns:
        ctx = _context(n, order, digits)
        if extra_digits:
            ctx = ctx.escalated(extra_digits)
        rows.append(TableRow(n, exact[n], p_approx_simple(n, order, ctx).rounded))
    return rows


def render_table(rows: Sequence[TableRow], fmt: str, order: int) -> str:
    if fmt == "json":
        return json.dumps({"order": order, "rows": [r.as_record() for r in rows]},
                          indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "p", "p_bar", "ratio"])
    for r in rows:
        writer.writerow([r.n, r.p_exact, r.p_bar, r.ratio])
    return buf.getvalue()


def verify_records(ns: Sequence[int], digits: int = VERIFY_DIGITS) -> list[dict]:
    ctx = PrecisionContext(decimal_digits=digits)
    records = []
    for n in ns:
        report = verify_saddle_bounds(n, ctx)
        checks = saddle_checks(solve_tn(n, ctx), ctx)
        record = report.to_dict()
        record["checks"] = {k: _sci(v, 6) for k, v in checks.items()}
        record["checks_passed"] = all(v <= ctx.tolerance for v in checks.values())
        records.append(record)
    return records


def render_verify(records: Sequence[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"passed": all(r["passed"] for r in records),
                           "reports": list(records)}, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "quantity", "residual", "envelope", "ratio", "passed"])
    for rec in records:
        for name in BOUND_NAMES:
            ratio = rec["ratios"][name]
            writer.writerow([rec["n"], name, rec["residuals"][name],
                             rec["envelopes"][name], ratio, float(ratio) <= 1])
        for name, value in rec["checks"].items():
            writer.writerow([rec["n"], f"check:{name}", value, "", "",
                             rec["checks_passed"]])
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="partition-expansion",
                     description="Exact and asymptotic partition numbers p(n).")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("exact", help="print p(n) exactly")
    p.add_argument("n", type=_non_negative)
    p.add_argument("--out")

    p = sub.add_parser("approx", help="evaluate an asymptotic formula for p(n)")
    p.add_argument("n", type=_positive)
    p.add_argument("--order", type=_non_negative, default=DEFAULT_ORDER)
    p.add_argument("--kind", choices=sorted(_KINDS), default="simple")
    p.add_argument("--digits", type=_digits)
    p.add_argument("--out")

    p = sub.add_parser("table", help="compare the simplified expansion with p(n)")
    p.add_argument("n", nargs="*")
    p.add_argument("--order", type=_non_negative, default=DEFAULT_ORDER)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--digits", type=_digits)
    p.add_argument("--out")

    p = sub.add_parser("verify", help="check the saddle-point error envelopes")
    p.add_argument("n", nargs="*")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--digits", type=_digits, default=VERIFY_DIGITS)
    p.add_argument("--out")
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "exact":
            _emit(f"{partition_exact(args.n)}\n", args.out)
            return EXIT_OK

        if args.command == "approx":
            ctx = _context(args.n, args.order, args.digits)
            result = evaluate(args.n, args.order, _KINDS[args.kind], ctx)
            result = result.compared_to(partition_exact(args.n))
            _emit(json.dumps(result.to_dict()) + "\n", args.out)
            return EXIT_OK

        if args.command == "table":
            ns = parse_n_list(args.n) if args.n else list(TABLE_NS)
            rows = table_rows(ns, args.order, args.digits)
            _emit(render_table(rows, args.format, args.order), args.out)
            return EXIT_OK

        ns = parse_n_list(args.n)
        records = verify_records(ns, args.digits)
        _emit(render_verify(records, args.format), args.out)
        return EXIT_OK if all(r["passed"] for r in records) else EXIT_VERIFY

    except (UsageError, argparse.ArgumentTypeError) as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"{parser.prog}: error: {exc}\n")
        return EXIT_USAGE
    except (PartitionError, ArithmeticError, ValueError) as exc:
        sys.stdout.write(json.dumps({"error": type(exc).__name__, "message": str(exc)})
                         + "\n")
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
