"""Command-line front end.

Exit status: 0 when a decision is "yes" (or a command succeeds), 1 when it is
"no", 2 on any error. Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .bench import run_bench, to_csv, to_table
from .curvefile import CurveFileError, dump_curve, load_curve
from .decision import bisect_distance, decide
from .diagram import render_svg
from .geometry import GeometryError
from .synth import KINDS, generate

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _non_negative(text: str) -> float:
    value = float(text)
    if not value >= 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative number, got {text}")
    return value


def _positive(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _sizes(text: str) -> list[tuple[int, int]]:
    sizes = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        m, _, n = item.partition("x")
        try:
            size = (int(m), int(n or m))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad size {item!r}; use MxN, e.g. 64x64") from None
        if min(size) < 1:
            raise argparse.ArgumentTypeError(f"sizes must be positive, got {item!r}")
        sizes.append(size)
    return sizes


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc) + "\n")


def cmd_decide(args) -> int:
    x, y = load_curve(args.curve_a), load_curve(args.curve_b)
    start = time.perf_counter()
    report = decide(x, y, args.eps)
    elapsed = time.perf_counter() - start
    doc = report.to_dict()
    doc["wall_time_ms"] = round(1000 * elapsed, 3)
    _emit(doc)
    return EXIT_YES if report.answer else EXIT_NO


def cmd_distance(args) -> int:
    x, y = load_curve(args.curve_a), load_curve(args.curve_b)
    result = bisect_distance(x, y, args.tol)
    _emit({"distance": result.distance, "iterations": result.iterations, "tol": args.tol})
    return EXIT_YES


def cmd_diagram(args) -> int:
    x, y = load_curve(args.curve_a), load_curve(args.curve_b)
    if 2 * x.m * y.m > 100_000:
        raise CliError(f"diagram too large ({2 * x.m * y.m} cells, limit 100000)")
    report = decide(x, y, args.eps, keep=True)
    svg = render_svg(report)
    try:
        Path(args.out).write_text(svg, encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc.strerror}") from exc
    doc = report.to_dict()
    doc["out"] = str(args.out)
    _emit(doc)
    return EXIT_YES


def cmd_bench(args) -> int:
    rows = run_bench(args.sizes, args.trials, args.seed, timing=True)
    csv_text = to_csv(rows, timing=args.timing)
    if args.out:
        try:
            Path(args.out).write_text(csv_text, encoding="utf-8")
        except OSError as exc:
            raise CliError(f"cannot write {args.out}: {exc.strerror}") from exc
    if args.format == "csv":
        sys.stdout.write(csv_text)
    elif args.format == "json":
        if not args.timing:
            for row in rows:
                row.pop("wall_ms", None)
        _emit({"rows": rows})
    else:
        sys.stdout.write(to_table(rows))
    return EXIT_YES


def cmd_gen(args) -> int:
    try:
        curve = generate(args.kind, args.m, args.seed)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    text = dump_curve(curve)
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise CliError(f"cannot write {args.out}: {exc.strerror}") from exc
    else:
        sys.stdout.write(text)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="closedfrechet",
        description="Frechet distance of closed polygonal curves (O(mn) decision).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="is the distance at most EPS? (exit 0 yes, 1 no)")
    p.add_argument("curve_a")
    p.add_argument("curve_b")
    p.add_argument("--eps", type=_non_negative, required=True)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("distance", help="distance to a tolerance by bisection")
    p.add_argument("curve_a")
    p.add_argument("curve_b")
    p.add_argument("--tol", type=_positive, default=1e-6)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("diagram", help="render the free-space diagram as SVG")
    p.add_argument("curve_a")
    p.add_argument("curve_b")
    p.add_argument("--eps", type=_non_negative, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("bench", help="timing and instrumentation on random curves")
    p.add_argument("--sizes", type=_sizes, default=[(64, 64), (128, 128)])
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--out", help="also write CSV to this file")
    p.add_argument("--timing", action="store_true", help="include wall_ms in CSV/JSON (not reproducible)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="write a synthetic closed curve")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_YES
    if getattr(args, "trials", 0) < 0:
        print("error: --trials must be >= 0", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except (CliError, CurveFileError, GeometryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
