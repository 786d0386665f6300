"""Warm-started colony pipeline.

The searcher produces candidate directions, their routes get a pheromone
boost, then the colony runs on the boosted field.  The result is floored by
the cheapest candidate: if the colony never beats (or never reaches) it,
the candidate is returned and flagged, so experiments can tell walked
results from warm-start fallbacks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Mapping

from .astar import SeedPathSet, generate_seed_paths
from .colony import ColonyConfig, LoopStats, PheromoneMap, _run_colony, init_pheromone
from .errors import NoDirectionError
from .network import Direction, RoadNetwork


@dataclass
class HybridConfig:
    """Colony settings plus the warm-start knobs.

    ``delta_tau`` is the pheromone boost added per seed path per route; it
    must be at least 1 and defaults to five times the initial intensity,
    strong enough to bias early loops yet erased by evaporation within a
    dozen loops at the default decay.
    """

    colony: ColonyConfig = dc_field(default_factory=ColonyConfig)
    tau0: float = 1.0
    delta_tau: float | None = None

    def __post_init__(self) -> None:
        if self.tau0 <= 0:
            raise ValueError(f"tau0 must be positive, got {self.tau0}")
        if self.delta_tau is None:
            self.delta_tau = 5.0 * self.tau0
        if self.delta_tau < 1.0:
            raise ValueError(f"delta_tau must be at least 1, got {self.delta_tau}")


@dataclass(frozen=True)
class HybridResult:
    """Best direction, per-loop stats, the warm-start set and its provenance.

    ``used_fallback`` is True when ``best`` comes from the warm-start set
    rather than from a walker (colony failed, or every walker was costlier).
    """

    best: Direction
    stats: tuple[LoopStats, ...]
    seeds: SeedPathSet
    used_fallback: bool


def seed_pheromone(
    tau: PheromoneMap, seeds: SeedPathSet, delta_tau: float
) -> PheromoneMap:
    """Boost every route on every seed path by ``delta_tau`` (mutates ``tau``).

    The boost applies once per distinct path containing the route, so a
    route shared by n seed paths gains n times the boost; all other routes
    are untouched.
    """
    for path in seeds.paths:
        for pair in zip(path.nodes, path.nodes[1:]):
            if pair not in tau:
                raise ValueError(f"seed path uses unknown route {pair[0]}->{pair[1]}")
            tau[pair] += delta_tau
    return tau


def run_hybrid(
    net: RoadNetwork,
    weights: Mapping[str, float],
    origin: int,
    dest: int,
    cfg: HybridConfig | None = None,
    rng: random.Random | None = None,
) -> HybridResult:
    """Seeded search pipeline: candidates, pheromone boost, colony, best.

    With an empty seed set this is observationally identical to running the
    colony alone on a uniform field.  Raises :class:`NoDirectionError` only
    when the seed set is empty and the colony also fails.
    """
    cfg = cfg if cfg is not None else HybridConfig()
    tau = init_pheromone(net, cfg.tau0)
    seeds = generate_seed_paths(net, weights, origin, dest)
    seed_pheromone(tau, seeds, cfg.delta_tau)

    master = rng if rng is not None else random.Random(cfg.colony.rng_seed)
    best, stats = _run_colony(net, weights, origin, dest, cfg.colony, tau, master)

    cheapest_seed = seeds.cheapest()
    if best is None:
        if cheapest_seed is None:
            raise NoDirectionError(f"no direction found from {origin} to {dest}")
        return HybridResult(cheapest_seed, stats, seeds, True)
    if cheapest_seed is not None and cheapest_seed.total_cost < best.total_cost:
        return HybridResult(cheapest_seed, stats, seeds, True)
    return HybridResult(best, stats, seeds, False)
