"""Command line: verify, dump, constants, list."""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import identities
from .catalog import catalog_names, named_series
from .identities import UsageError, general_alpha_checks
from .report import Report, constants_table, constants_text, render_series

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    return value


def _order(text: str) -> Fraction:
    value = _fraction(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("order must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="septic-qseries", description="Exact q-series identity verifier.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("--order", type=_order, help="exponent bound N or N/D (default: per-check)")
    v.add_argument("--check", action="append", default=[], metavar="NAME",
                   help="check name or group prefix (repeatable)")
    v.add_argument("--all", action="store_true", help="run every registered check")
    v.add_argument("--alpha", action="append", default=[], type=_fraction, metavar="P/N",
                   help="also run the e/P/Q system at this alpha (repeatable)")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out", help="write the report here instead of stdout")
    v.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    v.add_argument("--seed", type=int, help="accepted for interface stability; verification is deterministic")

    d = sub.add_parser("dump", help="print the coefficients of a catalog series")
    d.add_argument("--series", required=True)
    d.add_argument("--order", type=_fraction, required=True)
    d.add_argument("--format", choices=("csv", "json"), default="csv")
    d.add_argument("--out")

    c = sub.add_parser("constants", help="closed-form constants against their sine-transform derivations")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--out")

    sub.add_parser("list", help="list checks with anchors and default orders")
    return p


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text + ("" if text.endswith("\n") else "\n"))
    else:
        print(text)


def cmd_verify(args) -> int:
    if not args.all and not args.check and not args.alpha:
        raise UsageError("nothing selected: pass --all, --check NAME or --alpha P/N")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    names = None if args.all else args.check
    if names is not None:
        identities.resolve(names)
    extra = []
    for alpha in args.alpha:
        extra += general_alpha_checks(alpha)
    t0 = time.perf_counter()
    results = identities.run(names, args.order, jobs=args.jobs, extra=extra)
    # a check selected twice (by name and by --alpha) is reported once
    unique = {r.name: r for r in results}
    report = Report(args.order, list(unique.values()))
    report.total_elapsed_ms = int((time.perf_counter() - t0) * 1000)
    _emit(report.to_json() if args.format == "json" else report.to_text(), args.out)
    return report.exit_code


def cmd_dump(args) -> int:
    try:
        series = named_series(args.series, args.order)
    except KeyError:
        raise UsageError(f"unknown series {args.series!r}; known: {', '.join(catalog_names())}")
    _emit(render_series(series, args.order, args.format).rstrip("\n"), args.out)
    return EXIT_OK


def cmd_constants(args) -> int:
    table = constants_table()
    text = json.dumps(table, indent=2) if args.format == "json" else constants_text(table)
    _emit(text, args.out)
    return EXIT_OK if all(r["match"] for r in table["efund"]) else EXIT_FAIL


def cmd_list(args) -> int:
    checks = [identities.REGISTRY[n] for n in identities.check_names()]
    width = max(len(c.name) for c in checks)
    for c in checks:
        print(f"{c.name:<{width}}  {str(c.default_order):>4}  {c.ring:<15}  {c.anchor}")
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "dump": cmd_dump, "constants": cmd_constants, "list": cmd_list}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - surfaced as exit code 3
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
