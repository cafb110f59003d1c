"""Command line entry point: ``drgcheck check|scan|oracle``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .feasibility import run_nonexistence_chain
from .io import FORMATS, ArrayParseError, parse_array, read_batch, render_report, scan_batch

EXIT_INCONCLUSIVE, EXIT_INFEASIBLE, EXIT_BAD_INPUT = 0, 1, 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="drgcheck",
        description="Feasibility checks for distance-regular graph intersection arrays.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="check a single intersection array")
    check.add_argument("array", help='brace notation, e.g. "{55,36,11;1,4,45}"')
    check.add_argument("--format", choices=FORMATS, default="text")

    scan = sub.add_parser("scan", help="check every array in a batch file")
    scan.add_argument("--input", required=True, type=Path)
    scan.add_argument("--format", choices=FORMATS, default="text")
    scan.add_argument("--output", type=Path)
    scan.add_argument("--input-format", choices=("auto", "text", "csv"), default="auto",
                      help="auto picks csv for *.csv files, text otherwise")
    scan.add_argument("--workers", type=int, default=1)

    oracle = sub.add_parser("oracle", help="validate the local-graph lemmas on an explicit graph")
    oracle.add_argument("--graph", required=True, type=Path, help="edge list, one 'u v' per line")
    return parser


def _check(args) -> int:
    try:
        arr = parse_array(args.array)
    except (ArrayParseError, ValueError) as exc:
        print(f"drgcheck: parse error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    verdict = run_nonexistence_chain(arr)
    sys.stdout.write(render_report([verdict], args.format).decode())
    return EXIT_INFEASIBLE if verdict.infeasible else EXIT_INCONCLUSIVE


def _scan(args) -> int:
    fmt = args.input_format
    if fmt == "auto":
        fmt = "csv" if args.input.suffix.lower() == ".csv" else "text"
    try:
        text = args.input.read_text()
    except OSError as exc:
        print(f"drgcheck: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    payload = render_report(scan_batch(read_batch(text, fmt), workers=args.workers), args.format)
    if args.output:
        args.output.write_bytes(payload)
    else:
        sys.stdout.write(payload.decode())
    return 0


def _oracle(args) -> int:
    from .oracle import parse_edgelist, validate_lemmas

    try:
        graph = parse_edgelist(args.graph.read_text())
    except (OSError, ValueError) as exc:
        print(f"drgcheck: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    report = validate_lemmas(graph)
    print("\n".join(report.lines()))
    if report.array is None:
        return EXIT_BAD_INPUT
    return 0 if report.passed else 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {"check": _check, "scan": _scan, "oracle": _oracle}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
