"""Directed road-network model: map-file ingestion and aggregate cost evaluation.

A network is a set of intersections on a planar meter grid plus directed
routes between them.  Every route carries one nonnegative cost per named
parameter (distance, traffic load, ...).  A query supplies importance
weights per parameter; the scalar cost of a route is the weighted sum of
its parameter costs, which keeps costs additive along a path.

Map file format (UTF-8, line oriented, ``#`` starts a comment, tokens are
whitespace separated)::

    PARAMS <name_1> ... <name_k>          # exactly once, before any EDGE
    NODE <id> <x> <y>                     # id positive int, coords in meters
    EDGE <from> <to> <oneway:0|1> <c_1> ... <c_k>

A two-way EDGE (oneway=0) expands into two reciprocal directed routes with
identical costs.  Non-distance costs are stored as given (map authors keep
them on a 0..10 scale, larger = worse).  The ``distance`` cost is given in
meters and rescaled at load time so the longest single route costs 10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import MapFormatError

DISTANCE_PARAM = "distance"

# the longest single route ends up with this normalized distance cost
DISTANCE_COST_CEILING = 10.0


@dataclass(frozen=True)
class Intersection:
    """A junction of the road network, placed on a planar meter grid."""

    id: int
    x: float
    y: float


@dataclass(frozen=True)
class DirectedRoute:
    """One drivable direction between two intersections.

    ``costs`` maps parameter name to its normalized cost.  When the network
    has a distance parameter, ``distance_m`` keeps the raw length in meters
    (the normalized value lives in ``costs``).
    """

    start: int
    end: int
    costs: Mapping[str, float]
    distance_m: float | None = None


@dataclass(frozen=True)
class Direction:
    """An ordered intersection sequence with its aggregate cost: the planner's output."""

    nodes: tuple[int, ...]
    total_cost: float


@dataclass
class RoadNetwork:
    """Directed road graph.  Treat as immutable once built."""

    intersections: dict[int, Intersection]
    routes: dict[tuple[int, int], DirectedRoute]
    parameter_names: tuple[str, ...]
    max_route_distance_m: float | None = field(default=None, compare=False)
    _neighbors: dict[int, tuple[int, ...]] = field(
        default_factory=dict, compare=False, repr=False
    )

    def neighbors(self, node: int) -> tuple[int, ...]:
        """Out-neighbors of ``node``, ascending by id."""
        return self._neighbors.get(node, ())

    def route(self, start: int, end: int) -> DirectedRoute:
        route = self.routes.get((start, end))
        if route is None:
            raise ValueError(f"no route {start}->{end} in network")
        return route

    def has_node(self, node: int) -> bool:
        return node in self.intersections


def _check_cost_value(name: str, value: float) -> None:
    if not math.isfinite(value) or value < 0:
        raise ValueError(f"cost for {name!r} must be finite and >= 0, got {value!r}")


def _finalize(
    intersections: dict[int, Intersection],
    raw_routes: dict[tuple[int, int], dict[str, float]],
    parameter_names: tuple[str, ...],
) -> RoadNetwork:
    """Normalize distance costs and build the neighbor index."""
    max_d: float | None = None
    if DISTANCE_PARAM in parameter_names:
        max_d = max((c[DISTANCE_PARAM] for c in raw_routes.values()), default=0.0)

    routes: dict[tuple[int, int], DirectedRoute] = {}
    for (a, b) in sorted(raw_routes):
        costs = dict(raw_routes[(a, b)])
        distance_m = None
        if max_d is not None:
            distance_m = costs[DISTANCE_PARAM]
            scaled = DISTANCE_COST_CEILING * distance_m / max_d if max_d > 0 else 0.0
            costs[DISTANCE_PARAM] = scaled
        routes[(a, b)] = DirectedRoute(a, b, costs, distance_m)

    neighbors: dict[int, list[int]] = {node: [] for node in intersections}
    for (a, b) in routes:
        neighbors[a].append(b)

    return RoadNetwork(
        intersections=dict(sorted(intersections.items())),
        routes=routes,
        parameter_names=parameter_names,
        max_route_distance_m=max_d,
        _neighbors={node: tuple(sorted(out)) for node, out in neighbors.items()},
    )


def build_network(
    intersections: Iterable[Intersection],
    edges: Iterable[tuple[int, int, bool, Mapping[str, float]]],
    parameter_names: Sequence[str],
) -> RoadNetwork:
    """Assemble a validated network from in-memory pieces.

    ``edges`` entries are ``(start, end, oneway, raw_costs)`` with the
    distance cost (if any) in meters; two-way edges expand into both
    orientations, mirroring the map-file semantics.
    """
    params = tuple(parameter_names)
    if len(set(params)) != len(params) or not params:
        raise ValueError("parameter names must be non-empty and unique")

    nodes: dict[int, Intersection] = {}
    for node in intersections:
        if node.id <= 0:
            raise ValueError(f"intersection id must be positive, got {node.id}")
        if node.id in nodes:
            raise ValueError(f"duplicate node id {node.id}")
        nodes[node.id] = node

    raw_routes: dict[tuple[int, int], dict[str, float]] = {}

    def add(a: int, b: int, costs: dict[str, float]) -> None:
        if (a, b) in raw_routes:
            raise ValueError(f"duplicate directed edge {a}->{b}")
        raw_routes[(a, b)] = costs

    for start, end, oneway, costs in edges:
        if start not in nodes or end not in nodes:
            raise ValueError(f"edge {start}->{end} references unknown node")
        if start == end:
            raise ValueError(f"self-loop edge at node {start}")
        if set(costs) != set(params):
            raise ValueError(f"edge {start}->{end}: parameter mismatch with {params}")
        ordered = {name: float(costs[name]) for name in params}
        for name, value in ordered.items():
            _check_cost_value(name, value)
        add(start, end, ordered)
        if not oneway:
            add(end, start, dict(ordered))

    return _finalize(nodes, raw_routes, params)


def parse_map(text: str | Iterable[str]) -> RoadNetwork:
    """Parse the line-oriented map format into a validated :class:`RoadNetwork`."""
    lines = text.splitlines() if isinstance(text, str) else [str(ln) for ln in text]

    params: tuple[str, ...] | None = None
    nodes: dict[int, Intersection] = {}
    raw_routes: dict[tuple[int, int], dict[str, float]] = {}

    def fail(message: str, lineno: int) -> None:
        raise MapFormatError(message, line=lineno)

    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind, args = tokens[0], tokens[1:]

        if kind == "PARAMS":
            if params is not None:
                fail("duplicate PARAMS line", lineno)
            if not args:
                fail("PARAMS needs at least one parameter name", lineno)
            if len(set(args)) != len(args):
                fail("duplicate parameter name in PARAMS", lineno)
            params = tuple(args)

        elif kind == "NODE":
            if len(args) != 3:
                fail("NODE expects <id> <x> <y>", lineno)
            try:
                node_id = int(args[0])
                x, y = float(args[1]), float(args[2])
            except ValueError:
                fail(f"malformed NODE line: {line!r}", lineno)
            if node_id <= 0:
                fail(f"node id must be positive, got {node_id}", lineno)
            if not (math.isfinite(x) and math.isfinite(y)):
                fail("node coordinates must be finite", lineno)
            if node_id in nodes:
                fail(f"duplicate node id {node_id}", lineno)
            nodes[node_id] = Intersection(node_id, x, y)

        elif kind == "EDGE":
            if params is None:
                fail("EDGE before PARAMS", lineno)
            if len(args) != 3 + len(params):
                fail(
                    f"EDGE expects <from> <to> <oneway> and {len(params)} costs",
                    lineno,
                )
            try:
                a, b = int(args[0]), int(args[1])
                oneway = int(args[2])
                values = [float(tok) for tok in args[3:]]
            except ValueError:
                fail(f"malformed EDGE line: {line!r}", lineno)
            if oneway not in (0, 1):
                fail(f"oneway flag must be 0 or 1, got {args[2]}", lineno)
            if a not in nodes or b not in nodes:
                missing = a if a not in nodes else b
                fail(f"edge references unknown node {missing}", lineno)
            if a == b:
                fail(f"self-loop edge at node {a}", lineno)
            costs = dict(zip(params, values))
            for name, value in costs.items():
                if not math.isfinite(value) or value < 0:
                    fail(f"cost for {name!r} must be finite and >= 0", lineno)
            if (a, b) in raw_routes:
                fail(f"duplicate directed edge {a}->{b}", lineno)
            raw_routes[(a, b)] = costs
            if oneway == 0:
                if (b, a) in raw_routes:
                    fail(f"duplicate directed edge {b}->{a}", lineno)
                raw_routes[(b, a)] = dict(costs)

        else:
            fail(f"unknown directive {kind!r}", lineno)

    if params is None:
        raise MapFormatError("missing PARAMS line")
    return _finalize(nodes, raw_routes, params)


def format_map(net: RoadNetwork) -> str:
    """Serialize a network back to the map format.

    Every directed route is written as its own one-way EDGE line, with the
    distance cost expressed in raw meters, so parsing the result yields a
    network equal to ``net``.
    """
    lines = [" ".join(("PARAMS",) + net.parameter_names)]
    for node in net.intersections.values():
        lines.append(f"NODE {node.id} {node.x!r} {node.y!r}")
    for (a, b), route in net.routes.items():
        values = []
        for name in net.parameter_names:
            raw = route.distance_m if name == DISTANCE_PARAM else route.costs[name]
            values.append(repr(float(raw)))
        lines.append(f"EDGE {a} {b} 1 " + " ".join(values))
    return "\n".join(lines) + "\n"


def aggregate_route_cost(route: DirectedRoute, weights: Mapping[str, float]) -> float:
    """Scalar cost of one route: sum of parameter costs scaled by their weights."""
    total = 0.0
    for name, cost in route.costs.items():
        try:
            w = weights[name]
        except KeyError:
            raise ValueError(f"missing weight for parameter {name!r}") from None
        total += w * cost
    return total


def direction_cost(
    nodes: Sequence[int], net: RoadNetwork, weights: Mapping[str, float]
) -> float:
    """Aggregate cost of a whole path; a single-node path costs 0."""
    total = 0.0
    for a, b in zip(nodes, nodes[1:]):
        total += aggregate_route_cost(net.route(a, b), weights)
    return total


def travel_time_cost(distance_m: float, velocity_kmh: float) -> float:
    """Seconds needed to cover ``distance_m`` at a constant velocity in km/h."""
    if velocity_kmh <= 0:
        raise ValueError(f"velocity must be positive, got {velocity_kmh}")
    if distance_m < 0:
        raise ValueError(f"distance must be nonnegative, got {distance_m}")
    return distance_m / (velocity_kmh * 1000.0 / 3600.0)


def check_weights(
    net: RoadNetwork, weights: Mapping[str, float], exact: bool = False
) -> None:
    """Validate importance weights against a network's parameters.

    Weights must be finite and nonnegative and cover every parameter; with
    ``exact`` they must not mention unknown parameters either.
    """
    missing = [name for name in net.parameter_names if name not in weights]
    if missing:
        raise ValueError(f"missing weight for parameters: {', '.join(missing)}")
    if exact:
        unknown = [name for name in weights if name not in net.parameter_names]
        if unknown:
            raise ValueError(f"unknown weight keys: {', '.join(sorted(unknown))}")
    for name in net.parameter_names:
        value = weights[name]
        if not math.isfinite(value) or value < 0:
            raise ValueError(f"weight for {name!r} must be finite and >= 0")
