"""
Command-line interface.

    gridcontour trace --input C.csv --nx 100 --ny 100 --out-mesh mesh.csv [--out-svg fig.svg]
    gridcontour study --input C.csv --levels 50,100,200 --out study.csv
    gridcontour distances --input C.csv --nx 100 --ny 100 --out dist.csv

Exit status: 0 on success, 1 on bad input or usage, 2 when tracing fails.
Diagnostics go to standard error; when an output path is omitted the
payload is written to standard output.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional, Sequence

from .classify import classify_nodes
from .errors import GridContourError, TraceError
from .fileio import load_contour, write_distances_csv, write_mesh, write_study_csv, write_svg
from .grid import build_grid
from .metrics import boundary_distance_profile, refinement_study
from .tracer import trace_contour

EXIT_OK, EXIT_INPUT, EXIT_TRACE = 0, 1, 2

log = logging.getLogger("gridcontour")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; this tool reserves 2 for trace failures
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _levels(text: str) -> List[int]:
    try:
        levels = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"levels must be comma-separated integers, got {text!r}") from None
    if not levels:
        raise argparse.ArgumentTypeError("at least one level is required")
    return levels


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gridcontour", description="Approximate a polygon by grid nodes for finite differences.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to standard error")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("trace", help="trace one grid and write the labelled mesh")
    p.add_argument("--input", required=True)
    p.add_argument("--nx", type=int, required=True)
    p.add_argument("--ny", type=int, required=True)
    p.add_argument("--padding", type=float, default=0.0)
    p.add_argument("--out-mesh", help="mesh CSV path (standard output when omitted)")
    p.add_argument("--out-svg")

    p = sub.add_parser("study", help="area difference and node counts over several n x n grids")
    p.add_argument("--input", required=True)
    p.add_argument("--levels", type=_levels, required=True, help="e.g. 50,100,200")
    p.add_argument("--padding", type=float, default=0.0)
    p.add_argument("--out", help="CSV path (standard output when omitted)")

    p = sub.add_parser("distances", help="distance from each chain node to the given contour")
    p.add_argument("--input", required=True)
    p.add_argument("--nx", type=int, required=True)
    p.add_argument("--ny", type=int, required=True)
    p.add_argument("--padding", type=float, default=0.0)
    p.add_argument("--out", help="CSV path (standard output when omitted)")
    return parser


def _check_partitions(args):
    for name in ("nx", "ny"):
        v = getattr(args, name, None)
        if v is not None and v < 2:
            raise ValueError(f"--{name} must be >= 2, got {v}")
    for n in getattr(args, "levels", None) or ():
        if n < 2:
            raise ValueError(f"every level must be >= 2, got {n}")


def _run(args) -> int:
    _check_partitions(args)
    contour = load_contour(args.input)

    if args.command == "study":
        rows = refinement_study(contour, args.levels, args.padding)
        write_study_csv(rows, args.out or sys.stdout)
        return EXIT_OK if all(r.ok for r in rows) else EXIT_TRACE

    grid = build_grid(contour, args.nx, args.ny, args.padding)
    approx = trace_contour(contour, grid)
    if args.command == "distances":
        write_distances_csv(boundary_distance_profile(approx, contour), args.out or sys.stdout)
        return EXIT_OK

    labels = classify_nodes(grid, approx)
    log.info("boundary nodes: %d, interior nodes: %d", labels.boundary_count, labels.interior_count)
    write_mesh(labels, approx, args.out_mesh or sys.stdout)
    if args.out_svg:
        write_svg(contour, approx, labels, args.out_svg)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_INPUT

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.INFO if args.verbose else logging.WARNING)
    log.propagate = False
    try:
        return _run(args)
    except TraceError as exc:
        print(f"gridcontour: trace failed: {exc}", file=sys.stderr)
        return EXIT_TRACE
    except (GridContourError, ValueError, OSError) as exc:
        print(f"gridcontour: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        log.removeHandler(handler)


if __name__ == "__main__":
    sys.exit(main())
