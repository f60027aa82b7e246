"""Command line interface.

    scenic synth --shape line_alternating --count 4 --delta 0.75 > pts.json
    scenic arrange pts.json
    scenic route pts.json --algo acu > route.json
    scenic render route.json -o route.svg
    scenic experiment --trials 100 --seed 7

Every file argument accepts ``-`` (the default) for stdin/stdout, so the
subcommands can be piped.  Exit status: 0 success, 2 malformed input,
3 degenerate geometry, 64 usage error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import Sequence

from .arrangement import bridge_components, build_arrangement
from .experiment import ExperimentConfig, format_csv, format_tables, format_trials_csv, run_random_experiment
from .fileio import (
    POINTS_SCHEMA,
    ROUTE_SCHEMA,
    PointSetError,
    arrangement_document,
    dumps,
    parse_points,
    parse_route,
    route_document,
    serialize_points,
)
from .geometry import DegeneratePairError
from .metrics import format_report, requirement_report
from .render import render_route_document, render_svg
from .routes import Algorithm, run_algorithm
from .shortest_paths import compute_apsp
from .synth import Shape, SynthConfig, generate_synthetic

EXIT_INPUT = 2
EXIT_GEOMETRY = 3
EXIT_USAGE = 64

log = logging.getLogger("scenic_routes")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise PointSetError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _env_seed() -> int | None:
    raw = os.environ.get("SCENIC_SEED")
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"SCENIC_SEED must be an integer, got {raw!r}") from None


def _pipeline(points, algo: str):
    arr = bridge_components(build_arrangement(points))
    apsp = compute_apsp(arr)
    return arr, run_algorithm(algo, arr, apsp)


def cmd_synth(args) -> None:
    try:
        cfg = SynthConfig(Shape(args.shape), args.count, args.spacing, args.radius, args.delta)
    except ValueError as exc:
        raise UsageError(f"scenic synth: {exc}") from None
    _write(args.output, serialize_points(generate_synthetic(cfg)))


def cmd_arrange(args) -> None:
    points = parse_points(_read(args.input))
    raw = build_arrangement(points)
    bridged = bridge_components(raw)
    _write(args.output, dumps(arrangement_document(raw, bridged, full=args.full)))


def cmd_route(args) -> None:
    points = parse_points(_read(args.input))
    arr, route = _pipeline(points, args.algo)
    seed = args.seed if args.seed is not None else _env_seed()
    _write(args.output, dumps(route_document(route, arr, seed)))
    if args.report:
        print(format_report(requirement_report(route, arr)), file=sys.stderr)


def cmd_render(args) -> None:
    text = _read(args.input)
    if f'"{ROUTE_SCHEMA}"' in text:
        svg = render_route_document(parse_route(text))
    elif f'"{POINTS_SCHEMA}"' in text:
        points = parse_points(text)
        if args.algo:
            arr, route = _pipeline(points, args.algo)
            svg = render_svg(arr, route)
        else:
            svg = render_svg(bridge_components(build_arrangement(points)))
    else:
        raise PointSetError("input is neither a point-set nor a route file")
    _write(args.output, svg)


def cmd_experiment(args) -> None:
    seed = args.seed if args.seed is not None else _env_seed()
    try:
        cfg = ExperimentConfig(
            trials=args.trials,
            n_red=args.n_red,
            n_blue=args.n_blue,
            coord_range=tuple(args.coord_range),
            weight_range=tuple(args.weight_range),
            seed=0 if seed is None else seed,
            jobs=args.jobs,
        )
    except ValueError as exc:
        raise UsageError(f"scenic experiment: {exc}") from None
    summary = run_random_experiment(cfg)
    _write(args.output, format_tables(summary) + "\n" + format_csv(summary))
    if args.trials_csv:
        _write(args.trials_csv, format_trials_csv(summary))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="scenic", description="Scenic curves, arrangements and routes.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("synth", help="write a synthetic point set")
    p.add_argument("--shape", required=True, choices=[s.value for s in Shape])
    p.add_argument("--count", type=int, help="points per class")
    p.add_argument("--spacing", type=float, default=10.0)
    p.add_argument("--radius", type=float, default=20.0)
    p.add_argument("--delta", type=float, help="blue weight / red weight")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("arrange", help="summarize the scenic-path arrangement of a point set")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--full", action="store_true", help="include every node and edge")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_arrange)

    p = sub.add_parser("route", help="compute a scenic route and write a route file")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--algo", required=True, choices=[a.value for a in Algorithm])
    p.add_argument("--seed", type=int, help="seed recorded in the route file")
    p.add_argument("--report", action="store_true", help="print the requirement report to stderr")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_route)

    p = sub.add_parser("render", help="render a point set or route file as SVG")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--algo", choices=[a.value for a in Algorithm], help="overlay a route (point-set input)")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("experiment", help="run the random-configuration comparison")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--n-red", type=int, default=4)
    p.add_argument("--n-blue", type=int, default=4)
    p.add_argument("--coord-range", type=float, nargs=2, default=[-30.0, 30.0], metavar=("LO", "HI"))
    p.add_argument("--weight-range", type=float, nargs=2, default=[1.0, 50.0], metavar=("LO", "HI"))
    p.add_argument("--seed", type=int, help="master seed (default: $SCENIC_SEED or 0)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--trials-csv", help="also write per-trial rows to this file")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
        args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except DegeneratePairError as exc:
        print(f"scenic: degenerate geometry: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except PointSetError as exc:
        print(f"scenic: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"scenic: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return 0


if __name__ == "__main__":
    sys.exit(main())
