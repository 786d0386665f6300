"""The ``route`` command line tool.

Exit codes: 0 success, 1 usage error, 2 parse/validation error,
3 unreachable destination.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .colony import ColonyConfig
from .errors import MapFormatError, UnreachableError
from .harness import ALGORITHMS, ComparisonReport, ExperimentSpec, emit_csv, run_experiment
from .hybrid import HybridConfig


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1 (argparse defaults to 2, which we reserve
    # for map parse/validation failures)
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_weights(text: str) -> dict[str, float]:
    weights: dict[str, float] = {}
    for chunk in text.split(","):
        name, sep, value = chunk.partition("=")
        name = name.strip()
        if not sep or not name:
            raise argparse.ArgumentTypeError(f"expected name=value, got {chunk!r}")
        if name in weights:
            raise argparse.ArgumentTypeError(f"duplicate weight key {name!r}")
        try:
            weights[name] = float(value)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad weight value in {chunk!r}") from None
    if not weights:
        raise argparse.ArgumentTypeError("empty weight list")
    return weights


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="route",
        description="Plan lowest-aggregate-cost directions on a road-network map.",
    )
    parser.add_argument("--map", required=True, type=Path, help="map file to load")
    parser.add_argument("--origin", required=True, type=int, help="origin intersection id")
    parser.add_argument("--dest", required=True, type=int, help="destination intersection id")
    parser.add_argument(
        "--weights",
        required=True,
        type=_parse_weights,
        help="comma-separated name=value importance weights; must cover the map's PARAMS exactly",
    )
    parser.add_argument("--algo", required=True, choices=ALGORITHMS, help="planner to run")
    parser.add_argument("--repeats", type=int, default=1, help="independent seeded runs to average")
    parser.add_argument("--seed", type=int, default=0, help="base random seed")
    parser.add_argument("--loops", type=int, default=None, help="colony loop count override")
    parser.add_argument("--ants", type=int, default=None, help="walkers per loop override")
    parser.add_argument("--out", type=Path, default=None, help="write per-loop stats CSV here")
    parser.add_argument("--velocity", type=float, default=40.0, help="vehicle velocity in km/h (metadata)")
    parser.add_argument("--start-time", default="18:00", help="departure clock time (metadata)")
    return parser


def _print_report(args: argparse.Namespace, report: ComparisonReport) -> None:
    print(f"algorithm: {args.algo}")
    print(f"map: {args.map} (origin {args.origin} -> dest {args.dest})")
    print(f"metadata: velocity {args.velocity:g} km/h, start time {args.start_time}")
    best = report.finals[args.algo]
    print(f"best: {' -> '.join(str(n) for n in best.nodes)} (cost {best.total_cost:.6g})")
    if args.repeats > 1:
        mean_cost = report.mean_best_cost[args.algo]
        print(f"mean final best cost over {args.repeats} runs: {mean_cost:.6g}")
    if report.fallback_runs:
        print(f"warm-start fallback used in {report.fallback_runs}/{args.repeats} runs")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    colony = ColonyConfig()
    if args.loops is not None:
        colony = replace(colony, loop_count=args.loops)
    if args.ants is not None:
        colony = replace(colony, ant_count=args.ants)

    try:
        spec = ExperimentSpec(
            map_path=args.map,
            origin=args.origin,
            dest=args.dest,
            weights=args.weights,
            algorithm=args.algo,
            repeats=args.repeats,
            rng_seed=args.seed,
            config=HybridConfig(colony=colony),
            velocity_kmh=args.velocity,
            start_time=args.start_time,
        )
        report = run_experiment(spec)
    except UnreachableError as exc:
        print(f"route: {exc}", file=sys.stderr)
        return 3
    except (MapFormatError, ValueError, OSError) as exc:
        print(f"route: {exc}", file=sys.stderr)
        return 2

    _print_report(args, report)
    if args.out is not None:
        emit_csv(report, args.out)
        print(f"wrote {args.out}")
    return 0


def main_entry() -> None:
    raise SystemExit(main())
