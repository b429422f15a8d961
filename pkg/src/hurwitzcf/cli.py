"""Command-line front end: ``hurwitz-cf {expand,classify,tables,verify}``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cfengine import DEFAULT_MAX_STEPS, DomainError, Status, expand_value
from .classify import InconclusiveOrbit, classify
from .exactnum import QuadraticElement
from .suites import SUITES, run_suite
from .tables import check_tables
from .textio import ExprError, format_expansion, parse_expr

SCHEMA = "hurwitz-cf/1"

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_TRUNCATED = 0, 1, 2, 3


class _Out:
    """Buffered output; written once at the end to stdout or ``--out``."""

    def __init__(self, path: str | None):
        self.path = path
        self.lines: list[str] = []
        stream_tty = path is None and sys.stdout.isatty()
        self.color = stream_tty and "NO_COLOR" not in os.environ

    def line(self, text: str = ""):
        self.lines.append(text)

    def mark(self, ok: bool) -> str:
        word = "PASS" if ok else "FAIL"
        if not self.color:
            return word
        return f"\x1b[{32 if ok else 31}m{word}\x1b[0m"

    def json(self, obj: dict):
        self.lines.append(json.dumps({"schema": SCHEMA, **obj}, sort_keys=True, ensure_ascii=False))

    def flush(self):
        text = "\n".join(self.lines) + ("\n" if self.lines else "")
        if self.path is None:
            sys.stdout.write(text)
        else:
            with open(self.path, "w", encoding="utf-8") as fh:
                fh.write(text)


def _fail(message: str) -> int:
    print(f"hurwitz-cf: error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _expansion_record(text: str, e) -> dict:
    return {
        "input": text,
        "algorithm": e.algorithm.value,
        "initial": str(e.initial),
        "preperiod": [str(q) for q in e.preperiod],
        "period": [str(q) for q in e.period],
        "status": e.status.value,
    }


def cmd_expand(args, out: _Out) -> int:
    try:
        value = parse_expr(args.expression)
        e = expand_value(value, args.algo, args.max_steps)
    except (ExprError, DomainError, ValueError) as exc:
        return _fail(str(exc))
    if args.json:
        out.json(_expansion_record(args.expression, e))
    else:
        out.line(format_expansion(e, "paper" if args.paper_style else "human"))
        if not args.paper_style:
            out.line(f"status: {e.status.value}")
    return EXIT_TRUNCATED if e.status is Status.TRUNCATED else EXIT_OK


def cmd_classify(args, out: _Out) -> int:
    try:
        value = parse_expr(args.expression)
        if not isinstance(value, QuadraticElement):
            raise ValueError(f"{value} is rational; classification needs a quadratic irrational")
        report = classify(value, args.algo, args.max_steps)
    except (ExprError, DomainError, ValueError) as exc:
        return _fail(str(exc))
    except InconclusiveOrbit as exc:
        print(f"hurwitz-cf: {exc}", file=sys.stderr)
        return EXIT_TRUNCATED
    witness = [[str(r1.value), str(r2.value)] for r1, r2 in report.witness]
    if args.json:
        out.json(
            {
                "input": args.expression,
                "algorithm": report.algorithm.value,
                "predicate": report.predicate_result,
                "oracle": report.oracle_result,
                "period_length": report.period_length,
                "witness": witness,
                "corrected_predicate": report.corrected_result,
                "agrees": report.agrees,
            }
        )
    else:
        name = "N1" if report.algorithm.value == "H" else "N2"
        out.line(f"predicate ({name}): {str(report.predicate_result).lower()}")
        out.line(f"oracle (orbit): {str(report.oracle_result).lower()}")
        out.line(f"period length: {report.period_length if report.period_length is not None else '-'}")
        out.line("witness: " + (", ".join(f"{a} x {b}" for a, b in witness) or "none"))
        if report.far_ray_case:
            out.line("note: conjugate lies on the far ray of the Y line (corrected predicate: true)")
        out.line(out.mark(report.agrees))
    return EXIT_OK if report.agrees else EXIT_MISMATCH


def cmd_tables(args, out: _Out) -> int:
    rows = check_tables(args.table)
    bad = [r for r in rows if not r.ok]
    if args.json:
        out.json(
            {
                "table": args.table,
                "rows": [
                    {"table": r.table, "label": r.label, "expected": r.expected, "computed": r.computed, "match": r.ok}
                    for r in rows
                ],
                "matched": len(rows) - len(bad),
                "total": len(rows),
            }
        )
    else:
        for r in rows:
            out.line(f"{out.mark(r.ok)} table {r.table}  {r.label}  {r.computed}")
            if not r.ok:
                out.line(f"  - expected {r.expected}")
                out.line(f"  + computed {r.computed}" + ("" if r.floor_ok else "  (floor differs)"))
        out.line(f"{len(rows) - len(bad)}/{len(rows)} rows match")
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_verify(args, out: _Out) -> int:
    result = run_suite(args.suite, seed=args.seed, count=args.count)
    if args.json:
        out.json(
            {
                "suite": args.suite,
                "seed": args.seed,
                "count": args.count,
                "passed": result.passed,
                "failed": result.failed,
                "failures": result.failures,
                "diagnostics": result.diagnostics,
            }
        )
    else:
        for f in result.failures[: args.show]:
            out.line(f"failure: {f}")
        if len(result.failures) > args.show:
            out.line(f"... {len(result.failures) - args.show} more failures")
        for d in result.diagnostics[: args.show]:
            out.line(f"note: {d}")
        out.line(f"{out.mark(result.ok)} {result.summary()}")
    return EXIT_OK if result.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hurwitz-cf", description="Complex continued fractions over Q(i) and its quadratic extensions.")
    parser.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand an exact value")
    p.add_argument("expression")
    p.add_argument("--algo", choices=["h", "t", "d"], default="h")
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.add_argument("--json", action="store_true")
    p.add_argument("--paper-style", action="store_true", help="print [0;\\overline{...}] notation")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("classify", help="pure periodicity: region predicate against the orbit")
    p.add_argument("expression")
    p.add_argument("--algo", choices=["h", "t"], default="h")
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("tables", help="recompute the golden sqrt tables and diff")
    p.add_argument("--table", choices=["1", "2", "all"], default="all")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", help="run a seeded verification suite")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--show", type=int, default=20, help="failures and notes to print")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "max_steps", 1) < 1:
        return _fail("--max-steps must be positive")
    out = _Out(args.out)
    code = args.func(args, out)
    out.flush()
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
