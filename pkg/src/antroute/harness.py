"""Experiment runner: load a map, run a planner repeatedly, aggregate stats.

Runs are seeded ``rng_seed .. rng_seed + repeats - 1`` so two algorithms
launched with the same spec fields consume paired random streams, which is
what makes seeded-vs-unseeded cost comparisons meaningful.  Per-loop stats
are averaged across repeats and can be dumped to CSV for external plotting.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

from .astar import graph_astar
from .colony import LoopStats, init_pheromone, run_colony
from .errors import UnreachableError
from .hybrid import HybridConfig, run_hybrid
from .network import (
    Direction,
    RoadNetwork,
    aggregate_route_cost,
    check_weights,
    parse_map,
)

ALGORITHMS = ("astar", "ants", "hybrid")

CSV_HEADER = "loop,algorithm,mean_tcost,best_tcost,arrived"

# bundled benchmark profiles for the six-parameter city map
WEIGHT_PRESETS: dict[str, dict[str, float]] = {
    "shortest-first": {
        "distance": 1.0,
        "width": 0.25,
        "traffic_load": 0.50,
        "road_risk": 0.25,
        "road_quality": 0.50,
        "traffic_lights": 0.25,
    },
    "calm-traffic": {
        "distance": 0.50,
        "width": 0.25,
        "traffic_load": 0.75,
        "road_risk": 0.75,
        "road_quality": 0.50,
        "traffic_lights": 0.25,
    },
}


def bundled_map_path() -> Path:
    """Path of the synthetic 27-intersection city map shipped with the package."""
    return Path(__file__).with_name("maps") / "city27.map"


@dataclass
class ExperimentSpec:
    """One experiment: a map, a query, an algorithm and its repetition plan.

    ``velocity_kmh`` and ``start_time`` are run metadata only; edge costs in
    the map are static.
    """

    map_path: str | Path
    origin: int
    dest: int
    weights: Mapping[str, float]
    algorithm: str
    repeats: int = 1
    rng_seed: int = 0
    config: HybridConfig | None = None
    velocity_kmh: float = 40.0
    start_time: str = "18:00"

    def __post_init__(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}; pick from {ALGORITHMS}")
        if self.repeats < 1:
            raise ValueError("repeats must be >= 1")
        if self.velocity_kmh <= 0:
            raise ValueError("velocity must be positive")


@dataclass(frozen=True)
class ReportRow:
    """One aggregated per-loop line; None means no walker arrived that loop."""

    loop: int
    algorithm: str
    mean_tcost: float | None
    best_tcost: float | None
    arrived: float


@dataclass
class ComparisonReport:
    """Aggregated experiment output.

    ``finals`` maps algorithm name to the single best direction found across
    repeats; ``mean_best_cost`` to the mean of each repeat's final best cost.
    """

    rows: list[ReportRow]
    finals: dict[str, Direction]
    mean_best_cost: dict[str, float]
    velocity_kmh: float
    start_time: str
    fallback_runs: int = 0

    @staticmethod
    def merged(first: "ComparisonReport", second: "ComparisonReport") -> "ComparisonReport":
        """Concatenate two reports (e.g. seeded vs. unseeded) into one CSV-able view."""
        return ComparisonReport(
            rows=list(first.rows) + list(second.rows),
            finals={**first.finals, **second.finals},
            mean_best_cost={**first.mean_best_cost, **second.mean_best_cost},
            velocity_kmh=first.velocity_kmh,
            start_time=first.start_time,
            fallback_runs=first.fallback_runs + second.fallback_runs,
        )


def _aggregate_rows(algorithm: str, runs: Sequence[Sequence[LoopStats]]) -> list[ReportRow]:
    """Arithmetic mean per loop across repeats; loops with no arrivals anywhere stay None."""
    loop_counts = {len(stats) for stats in runs}
    if len(loop_counts) != 1:
        raise ValueError("repeats produced differing loop counts")
    rows = []
    for per_loop in zip(*runs):
        means = [s.mean_tcost for s in per_loop if s.mean_tcost is not None]
        bests = [s.best_tcost for s in per_loop if s.best_tcost is not None]
        rows.append(
            ReportRow(
                loop=per_loop[0].loop,
                algorithm=algorithm,
                mean_tcost=sum(means) / len(means) if means else None,
                best_tcost=sum(bests) / len(bests) if bests else None,
                arrived=sum(s.arrived for s in per_loop) / len(per_loop),
            )
        )
    return rows


def run_experiment(spec: ExperimentSpec) -> ComparisonReport:
    """Execute the spec and aggregate per-loop stats across repeats.

    "ants" runs the colony on an unseeded uniform pheromone field, "hybrid"
    the warm-started pipeline, "astar" a single deterministic search (one
    row, repeats ignored).  Raises the underlying parse/validation errors
    and :class:`UnreachableError` when no direction exists.
    """
    net = parse_map(Path(spec.map_path).read_text(encoding="utf-8"))
    check_weights(net, spec.weights, exact=True)
    for name, node in (("origin", spec.origin), ("dest", spec.dest)):
        if not net.has_node(node):
            raise ValueError(f"unknown {name} intersection {node}")
    cfg = spec.config if spec.config is not None else HybridConfig()

    if spec.algorithm == "astar":
        found = graph_astar(net, spec.weights, spec.origin, spec.dest)
        rows = [ReportRow(1, "astar", found.total_cost, found.total_cost, 1.0)]
        return ComparisonReport(
            rows=rows,
            finals={"astar": found},
            mean_best_cost={"astar": found.total_cost},
            velocity_kmh=spec.velocity_kmh,
            start_time=spec.start_time,
        )

    bests: list[Direction] = []
    stats_per_run: list[tuple[LoopStats, ...]] = []
    fallback_runs = 0
    for r in range(spec.repeats):
        rng = random.Random(spec.rng_seed + r)
        if spec.algorithm == "ants":
            result = run_colony(
                net,
                spec.weights,
                spec.origin,
                spec.dest,
                cfg.colony,
                init_pheromone(net, cfg.tau0),
                rng,
            )
            bests.append(result.best)
            stats_per_run.append(result.stats)
        else:
            hybrid_result = run_hybrid(net, spec.weights, spec.origin, spec.dest, cfg, rng)
            fallback_runs += int(hybrid_result.used_fallback)
            bests.append(hybrid_result.best)
            stats_per_run.append(hybrid_result.stats)

    rows = _aggregate_rows(spec.algorithm, stats_per_run)
    final = min(bests, key=lambda d: (d.total_cost, d.nodes))
    return ComparisonReport(
        rows=rows,
        finals={spec.algorithm: final},
        mean_best_cost={spec.algorithm: sum(d.total_cost for d in bests) / len(bests)},
        velocity_kmh=spec.velocity_kmh,
        start_time=spec.start_time,
        fallback_runs=fallback_runs,
    )


def brute_force_best(
    net: RoadNetwork,
    weights: Mapping[str, float],
    origin: int,
    dest: int,
    max_nodes: int = 12,
) -> Direction:
    """Exhaustive test oracle: cheapest simple path by full enumeration.

    Guarded to small networks; ties break toward the lexicographically
    smallest node sequence.  Raises :class:`UnreachableError` when no simple
    path exists.
    """
    if len(net.intersections) > max_nodes:
        raise ValueError(
            f"network has {len(net.intersections)} nodes, too large to enumerate (max {max_nodes})"
        )
    for name, node in (("origin", origin), ("dest", dest)):
        if not net.has_node(node):
            raise ValueError(f"unknown {name} intersection {node}")

    best: tuple[float, tuple[int, ...]] | None = None

    def walk(node: int, visited: set[int], cost: float, path: list[int]) -> None:
        nonlocal best
        if node == dest:
            candidate = (cost, tuple(path))
            if best is None or candidate < best:
                best = candidate
            return
        for neighbor in net.neighbors(node):
            if neighbor in visited:
                continue
            visited.add(neighbor)
            path.append(neighbor)
            walk(
                neighbor,
                visited,
                cost + aggregate_route_cost(net.routes[(node, neighbor)], weights),
                path,
            )
            path.pop()
            visited.remove(neighbor)

    walk(origin, {origin}, 0.0, [origin])
    if best is None:
        raise UnreachableError(f"no direction from {origin} to {dest}")
    return Direction(best[1], best[0])


def _format_value(value: float | None) -> str:
    return "NA" if value is None else f"{value:.6g}"


def emit_csv(report: ComparisonReport, out: str | Path) -> None:
    """Write per-loop rows as CSV: 6 significant digits, LF endings, NA for empties."""
    lines = [CSV_HEADER]
    for row in report.rows:
        lines.append(
            ",".join(
                (
                    str(row.loop),
                    row.algorithm,
                    _format_value(row.mean_tcost),
                    _format_value(row.best_tcost),
                    _format_value(row.arrived),
                )
            )
        )
    Path(out).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
