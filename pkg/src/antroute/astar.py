"""Lowest-aggregate-cost search over the road network, plus warm-start paths.

The searcher explores the directed network under a weighted-sum cost and a
straight-line lower bound on the distance component.  ``generate_seed_paths``
runs it once per weight profile of interest and collects the distinct
results; those paths later receive a pheromone boost before the colony runs.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Mapping

from .errors import UnreachableError
from .network import (
    DISTANCE_COST_CEILING,
    DISTANCE_PARAM,
    Direction,
    RoadNetwork,
    aggregate_route_cost,
    direction_cost,
)


@dataclass(frozen=True)
class SeedPathSet:
    """Distinct warm-start directions, ordered by node sequence."""

    paths: tuple[Direction, ...] = ()

    def __bool__(self) -> bool:
        return bool(self.paths)

    def __len__(self) -> int:
        return len(self.paths)

    def cheapest(self) -> Direction | None:
        if not self.paths:
            return None
        return min(self.paths, key=lambda d: (d.total_cost, d.nodes))


def _euclid(net: RoadNetwork, a: int, b: int) -> float:
    pa, pb = net.intersections[a], net.intersections[b]
    return math.hypot(pa.x - pb.x, pa.y - pb.y)


def _heuristic_scale(net: RoadNetwork, weights: Mapping[str, float]) -> float:
    """Cost-per-meter factor that keeps the straight-line bound admissible.

    Route lengths may exceed the straight line between their endpoints but
    never undercut it on a sane map; if some route does (bridge, data quirk),
    the bound is shrunk by that route's length/straight-line ratio so it still
    never exceeds the true remaining cost.
    """
    if DISTANCE_PARAM not in net.parameter_names:
        return 0.0
    w_distance = weights.get(DISTANCE_PARAM, 0.0)
    max_d = net.max_route_distance_m
    if w_distance <= 0 or not max_d:
        return 0.0
    ratio = 1.0
    for route in net.routes.values():
        straight = _euclid(net, route.start, route.end)
        if straight > 0:
            ratio = min(ratio, route.distance_m / straight)
    if ratio <= 0:
        return 0.0
    return w_distance * (DISTANCE_COST_CEILING / max_d) * ratio


def heuristic_lower_bound(
    net: RoadNetwork, weights: Mapping[str, float], node: int, dest: int
) -> float:
    """Lower bound on the remaining aggregate cost from ``node`` to ``dest``.

    Only the distance component has a geometric bound; with zero distance
    weight this degenerates to 0 and the search becomes uniform-cost.
    """
    if node == dest:
        return 0.0
    return _heuristic_scale(net, weights) * _euclid(net, node, dest)


def graph_astar(
    net: RoadNetwork, weights: Mapping[str, float], origin: int, dest: int
) -> Direction:
    """Minimum aggregate-cost direction from ``origin`` to ``dest``.

    Deterministic: frontier ties on equal f break toward the smaller
    intersection id.  Raises :class:`UnreachableError` when no direction
    exists under the network's one-way constraints.
    """
    for name, node in (("origin", origin), ("dest", dest)):
        if not net.has_node(node):
            raise ValueError(f"unknown {name} intersection {node}")
    if origin == dest:
        return Direction((origin,), 0.0)

    scale = _heuristic_scale(net, weights)

    def h(node: int) -> float:
        return scale * _euclid(net, node, dest)

    g: dict[int, float] = {origin: 0.0}
    parent: dict[int, int] = {}
    closed: set[int] = set()
    frontier: list[tuple[float, int]] = [(h(origin), origin)]

    while frontier:
        _, current = heapq.heappop(frontier)
        if current in closed:
            continue
        closed.add(current)
        if current == dest:
            nodes = [current]
            while nodes[-1] != origin:
                nodes.append(parent[nodes[-1]])
            nodes.reverse()
            return Direction(tuple(nodes), g[dest])
        for neighbor in net.neighbors(current):
            if neighbor in closed:
                continue
            score = g[current] + aggregate_route_cost(net.routes[(current, neighbor)], weights)
            if score < g.get(neighbor, math.inf):
                g[neighbor] = score
                parent[neighbor] = current
                heapq.heappush(frontier, (score + h(neighbor), neighbor))

    raise UnreachableError(f"no direction from {origin} to {dest}")


def generate_seed_paths(
    net: RoadNetwork, weights: Mapping[str, float], origin: int, dest: int
) -> SeedPathSet:
    """Candidate directions for warm-starting the colony.

    One search under the full weight profile plus one per parameter with that
    parameter alone active; distinct node sequences are kept, each re-costed
    under the full profile so seed costs are comparable.  Unreachable runs
    contribute nothing, so an empty set is a valid result.
    """
    profiles: list[Mapping[str, float]] = [weights]
    for active in net.parameter_names:
        profiles.append({name: 1.0 if name == active else 0.0 for name in net.parameter_names})

    sequences: set[tuple[int, ...]] = set()
    for profile in profiles:
        try:
            found = graph_astar(net, profile, origin, dest)
        except UnreachableError:
            continue
        sequences.add(found.nodes)

    paths = tuple(
        Direction(nodes, direction_cost(nodes, net, weights)) for nodes in sorted(sequences)
    )
    return SeedPathSet(paths)
