"""Pheromone-guided walkers over the road network.

Two rule sets live here.  The planner uses the multi-parameter system: each
walker ("ant") favors routes with strong pheromone and low per-parameter
costs, arrived walkers are split into award/punish lists around the mean
trip cost, and the whole field evaporates once per loop.  A classic
trail-and-visibility variant (explicit visibility table, deposit
proportional to inverse solution cost) is kept alongside as a cross-check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Sequence

from .errors import NoDirectionError
from .network import DirectedRoute, Direction, RoadNetwork, aggregate_route_cost

Route = tuple[int, int]
PheromoneMap = dict[Route, float]

ALIVE = "alive"
ARRIVED = "arrived"
BLOCKED = "blocked"

# keeps inverse-cost terms finite on zero-cost routes
COST_EPSILON = 1e-6
# pheromone floor applied after every update, so transition weights stay positive
TAU_MIN = 1e-9


@dataclass
class ColonyConfig:
    """Tuning knobs for the walker colony.

    ``importance`` holds the per-parameter weights used both for trip costs
    and for route desirability; when None, the query weights are used.
    ``iteration_cap`` bounds walker steps per loop (None: twice the
    intersection count, a safety net on top of the visited-set guarantee).
    """

    alpha: float = 2.0
    importance: Mapping[str, float] | None = None
    q0: float = 0.9
    pv: float = 0.9
    av: float = 950.0
    rho: float = 0.9
    ant_count: int = 20
    loop_count: int = 100
    iteration_cap: int | None = None
    rng_seed: int = 0

    def __post_init__(self) -> None:
        if self.alpha < 0:
            raise ValueError("alpha must be >= 0")
        if not 0 <= self.q0 <= 1:
            raise ValueError("q0 must be in [0, 1]")
        if not 0 < self.pv < 1:
            raise ValueError("pv must be in (0, 1)")
        if self.av <= 1:
            raise ValueError("av must be > 1")
        if not 0 < self.rho < 1:
            raise ValueError("rho must be in (0, 1)")
        if self.ant_count < 1 or self.loop_count < 1:
            raise ValueError("ant_count and loop_count must be positive")
        if self.iteration_cap is not None and self.iteration_cap < 1:
            raise ValueError("iteration_cap must be positive")


@dataclass
class ClassicParams:
    """Parameters of the classic trail/visibility update rules."""

    beta: float
    deposit: float
    rho: float

    def __post_init__(self) -> None:
        if self.beta < 0:
            raise ValueError("beta must be >= 0")
        if self.deposit <= 0:
            raise ValueError("deposit must be positive")
        if not 0 < self.rho < 1:
            raise ValueError("rho must be in (0, 1)")


@dataclass
class Ant:
    """A walker: its path so far, visited-set, accumulated cost and status."""

    id: int
    path: list[int]
    tabu: set[int]
    tcost: float = 0.0
    status: str = ALIVE

    def position(self) -> int:
        return self.path[-1]


@dataclass(frozen=True)
class LoopValuation:
    """Award/punish split of one loop's arrived walkers around their mean cost."""

    awa: frozenset[int]
    pla: frozenset[int]
    avg_tcost: float


@dataclass(frozen=True)
class LoopStats:
    """Per-loop record: 1-based loop index, arrivals, mean and best trip cost."""

    loop: int
    arrived: int
    mean_tcost: float | None
    best_tcost: float | None


@dataclass(frozen=True)
class ColonyResult:
    best: Direction
    stats: tuple[LoopStats, ...]


def _path_routes(path: Sequence[int]) -> Iterable[Route]:
    return zip(path, path[1:])


def route_desirability(route: DirectedRoute, weights: Mapping[str, float]) -> float:
    """Static attractiveness of a route.

    Product over parameters of the inverse cost raised to twice the
    parameter's importance weight, so expensive routes on heavily weighted
    parameters are strongly discouraged.
    """
    result = 1.0
    for name, cost in route.costs.items():
        try:
            w = weights[name]
        except KeyError:
            raise ValueError(f"missing weight for parameter {name!r}") from None
        result *= (1.0 / (cost + COST_EPSILON)) ** (2.0 * w)
    return result


def init_pheromone(net: RoadNetwork, tau0: float) -> PheromoneMap:
    """Uniform pheromone field over every directed route."""
    if tau0 <= 0:
        raise ValueError(f"tau0 must be positive, got {tau0}")
    return {route: tau0 for route in net.routes}


def transition_probabilities(
    ant: Ant,
    net: RoadNetwork,
    tau: PheromoneMap,
    cfg: ColonyConfig,
    desirability: Mapping[Route, float] | None = None,
) -> dict[int, float]:
    """Move distribution for an alive walker at the head of its path.

    Support is the unvisited out-neighbors; each gets pheromone^alpha times
    the route desirability, normalized to sum 1.  An empty mapping means the
    walker is stuck (the caller marks it blocked).  ``desirability`` may be a
    precomputed per-route table to spare recomputation in hot loops.
    """
    if ant.status != ALIVE:
        raise ValueError(f"ant {ant.id} is not alive")
    if cfg.importance is None:
        raise ValueError("config has no importance weights")
    here = ant.position()
    raw: dict[int, float] = {}
    for neighbor in net.neighbors(here):
        if neighbor in ant.tabu:
            continue
        route = (here, neighbor)
        base = (
            desirability[route]
            if desirability is not None
            else route_desirability(net.routes[route], cfg.importance)
        )
        raw[neighbor] = tau[route] ** cfg.alpha * base
    total = sum(raw.values())
    if not raw or total <= 0:
        return {}
    return {neighbor: weight / total for neighbor, weight in raw.items()}


def classic_transition(
    ant: Ant,
    net: RoadNetwork,
    tau: PheromoneMap,
    eta: Mapping[Route, float],
    alpha: float,
    beta: float,
) -> dict[int, float]:
    """Classic move distribution: pheromone^alpha times visibility^beta."""
    if ant.status != ALIVE:
        raise ValueError(f"ant {ant.id} is not alive")
    here = ant.position()
    raw: dict[int, float] = {}
    for neighbor in net.neighbors(here):
        if neighbor in ant.tabu:
            continue
        route = (here, neighbor)
        raw[neighbor] = tau[route] ** alpha * eta[route] ** beta
    total = sum(raw.values())
    if not raw or total <= 0:
        return {}
    return {neighbor: weight / total for neighbor, weight in raw.items()}


def select_next(
    probs: Mapping[int, float], q_draw: float, q0: float, rng: random.Random
) -> int:
    """Pick the next intersection from a move distribution.

    A draw above the threshold takes the argmax (ties toward the smaller
    id); otherwise a roulette wheel samples proportionally to probability.
    """
    if not probs:
        raise ValueError("empty probability mapping")
    total = sum(probs.values())
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"probabilities must sum to 1, got {total!r}")
    items = sorted(probs.items())
    if q_draw > q0:
        best_id, best_p = items[0]
        for neighbor, p in items[1:]:
            if p > best_p:
                best_id, best_p = neighbor, p
        return best_id
    point = rng.random()
    cumulative = 0.0
    for neighbor, p in items:
        cumulative += p
        if point < cumulative:
            return neighbor
    return items[-1][0]


def step_ant(
    ant: Ant,
    net: RoadNetwork,
    tau: PheromoneMap,
    cfg: ColonyConfig,
    rng: random.Random,
    dest: int,
    desirability: Mapping[Route, float] | None = None,
    edge_costs: Mapping[Route, float] | None = None,
) -> Ant:
    """Apply one transition to an alive walker (mutates and returns it).

    Blocking is a status outcome, not an error: with no feasible move the
    walker is marked blocked and its path stays untouched.
    """
    probs = transition_probabilities(ant, net, tau, cfg, desirability)
    if not probs:
        ant.status = BLOCKED
        return ant
    q_draw = rng.random()
    nxt = select_next(probs, q_draw, cfg.q0, rng)
    route = (ant.position(), nxt)
    cost = (
        edge_costs[route]
        if edge_costs is not None
        else aggregate_route_cost(net.routes[route], cfg.importance)
    )
    ant.path.append(nxt)
    ant.tabu.add(nxt)
    ant.tcost += cost
    if nxt == dest:
        ant.status = ARRIVED
    return ant


def value_ants(arrived: Iterable[Ant]) -> LoopValuation:
    """Split arrived walkers around their mean trip cost.

    Strictly below the mean earns an award; at or above (including the
    single-arrival case, where tcost equals the mean) lands in the punish
    list.  Empty input yields an empty valuation with mean 0.
    """
    ants = list(arrived)
    if not ants:
        return LoopValuation(frozenset(), frozenset(), 0.0)
    avg = sum(ant.tcost for ant in ants) / len(ants)
    awa = frozenset(ant.id for ant in ants if ant.tcost < avg)
    pla = frozenset(ant.id for ant in ants) - awa
    return LoopValuation(awa, pla, avg)


def reward_punish(
    tau: PheromoneMap,
    valuation: LoopValuation,
    ants: Iterable[Ant],
    net: RoadNetwork,
    cfg: ColonyConfig,
    edge_costs: Mapping[Route, float] | None = None,
) -> PheromoneMap:
    """Per-walker pheromone update (mutates and returns ``tau``).

    Punished walkers decay every route they traversed by ``pv``; awarded
    walkers then add ``av`` divided by the route's aggregate cost, so cheap
    routes on good trips gain the most.  Decay runs before deposits, and a
    route touched by both receives both effects.
    """
    if cfg.importance is None:
        raise ValueError("config has no importance weights")
    by_id = {ant.id: ant for ant in ants}
    for ant_id in sorted(valuation.pla):
        for route in _path_routes(by_id[ant_id].path):
            tau[route] *= cfg.pv
    for ant_id in sorted(valuation.awa):
        for route in _path_routes(by_id[ant_id].path):
            cost = (
                edge_costs[route]
                if edge_costs is not None
                else aggregate_route_cost(net.routes[route], cfg.importance)
            )
            tau[route] += cfg.av / max(cost, COST_EPSILON)
    for route, value in tau.items():
        if value < TAU_MIN:
            tau[route] = TAU_MIN
    return tau


def global_evaporate(tau: PheromoneMap, rho: float) -> PheromoneMap:
    """Scale the whole field by ``rho``, floored at the pheromone minimum."""
    if not 0 < rho < 1:
        raise ValueError(f"rho must be in (0, 1), got {rho}")
    for route, value in tau.items():
        tau[route] = max(value * rho, TAU_MIN)
    return tau


def classic_global_update(
    tau: PheromoneMap,
    solutions: Iterable[tuple[Sequence[int], float]],
    rho: float,
    deposit: float,
) -> PheromoneMap:
    """Classic end-of-cycle rule: evaporate everywhere, deposit on solutions.

    Each solution is a (path, cost) pair; its traversed routes gain
    ``deposit / cost``.  ``rho`` may be 0 (no evaporation) up to 1.
    """
    if not 0 <= rho <= 1:
        raise ValueError(f"rho must be in [0, 1], got {rho}")
    pairs = [(list(path), cost) for path, cost in solutions]
    for _, cost in pairs:
        if cost <= 0:
            raise ValueError(f"solution cost must be positive, got {cost}")
    for route, value in tau.items():
        tau[route] = (1.0 - rho) * value
    for path, cost in pairs:
        for route in _path_routes(path):
            if route not in tau:
                raise ValueError(f"solution uses unknown route {route[0]}->{route[1]}")
            tau[route] += deposit / cost
    for route, value in tau.items():
        if value < TAU_MIN:
            tau[route] = TAU_MIN
    return tau


def run_colony(
    net: RoadNetwork,
    weights: Mapping[str, float],
    origin: int,
    dest: int,
    cfg: ColonyConfig | None = None,
    tau: PheromoneMap | None = None,
    rng: random.Random | None = None,
) -> ColonyResult:
    """Run the full colony and return the best direction plus per-loop stats.

    Each loop places ``ant_count`` walkers at the origin, steps them until
    all are arrived or blocked (capped walkers count as blocked), values the
    arrivals, applies the award/punish update and evaporates.  The returned
    best is the cheapest arrived direction across all loops.  Identical
    inputs and seed reproduce the output bit for bit.

    Raises :class:`NoDirectionError` if no walker ever arrives.
    """
    best, stats = _run_colony(net, weights, origin, dest, cfg, tau, rng)
    if best is None:
        raise NoDirectionError(f"no direction found from {origin} to {dest}")
    return ColonyResult(best, stats)


def _run_colony(
    net: RoadNetwork,
    weights: Mapping[str, float],
    origin: int,
    dest: int,
    cfg: ColonyConfig | None,
    tau: PheromoneMap | None,
    rng: random.Random | None,
) -> tuple[Direction | None, tuple[LoopStats, ...]]:
    """Colony loops without the no-direction check; hybrid reuses this."""
    cfg = cfg if cfg is not None else ColonyConfig()
    if cfg.importance is None:
        cfg = replace(cfg, importance=weights)
    for name, node in (("origin", origin), ("dest", dest)):
        if not net.has_node(node):
            raise ValueError(f"unknown {name} intersection {node}")
    field_ = dict(tau) if tau is not None else init_pheromone(net, 1.0)
    if set(field_) != set(net.routes):
        raise ValueError("pheromone map keys do not match the network's routes")
    master = rng if rng is not None else random.Random(cfg.rng_seed)
    cap = cfg.iteration_cap if cfg.iteration_cap is not None else 2 * len(net.intersections)

    importance = cfg.importance
    desirability = {r: route_desirability(route, importance) for r, route in net.routes.items()}
    edge_costs = {r: aggregate_route_cost(route, importance) for r, route in net.routes.items()}

    best: Direction | None = None
    stats: list[LoopStats] = []
    for loop in range(1, cfg.loop_count + 1):
        # per-walker streams are fixed at loop start, so results cannot
        # depend on the order walkers are stepped in
        streams = [random.Random(master.getrandbits(64)) for _ in range(cfg.ant_count)]
        birth_status = ARRIVED if origin == dest else ALIVE
        ants = [
            Ant(k, [origin], {origin}, 0.0, birth_status) for k in range(cfg.ant_count)
        ]

        for _ in range(cap):
            alive = [ant for ant in ants if ant.status == ALIVE]
            if not alive:
                break
            for ant in alive:
                step_ant(ant, net, field_, cfg, streams[ant.id], dest, desirability, edge_costs)
        for ant in ants:
            if ant.status == ALIVE:
                ant.status = BLOCKED

        arrived = [ant for ant in ants if ant.status == ARRIVED]
        valuation = value_ants(arrived)
        reward_punish(field_, valuation, arrived, net, cfg, edge_costs)
        global_evaporate(field_, cfg.rho)

        if arrived:
            mean_tcost = sum(ant.tcost for ant in arrived) / len(arrived)
            best_tcost = min(ant.tcost for ant in arrived)
        else:
            mean_tcost = best_tcost = None
        stats.append(LoopStats(loop, len(arrived), mean_tcost, best_tcost))

        for ant in arrived:
            if best is None or ant.tcost < best.total_cost:
                best = Direction(tuple(ant.path), ant.tcost)

    return best, tuple(stats)
