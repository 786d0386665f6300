"""antroute: multi-criteria road-network route planning.

A directed road network carries per-route cost vectors (distance, traffic
load, ...).  Given importance weights per parameter, the library finds
lowest-aggregate-cost directions three ways: a deterministic network
searcher, a pheromone-driven walker colony, and the hybrid of the two in
which the searcher's candidate paths warm-start the colony's pheromone
field.  A small harness runs seeded repetitions and emits per-loop cost
CSVs for seeded-vs-unseeded comparisons.
"""

from .astar import SeedPathSet, generate_seed_paths, graph_astar, heuristic_lower_bound
from .colony import (
    ALIVE,
    ARRIVED,
    BLOCKED,
    Ant,
    ClassicParams,
    ColonyConfig,
    ColonyResult,
    LoopStats,
    LoopValuation,
    PheromoneMap,
    classic_global_update,
    classic_transition,
    global_evaporate,
    init_pheromone,
    reward_punish,
    route_desirability,
    run_colony,
    select_next,
    step_ant,
    transition_probabilities,
    value_ants,
)
from .errors import MapFormatError, NoDirectionError, RoutingError, UnreachableError
from .grid import GridMap, grid_astar, manhattan_heuristic, parse_grid
from .harness import (
    ALGORITHMS,
    ComparisonReport,
    ExperimentSpec,
    WEIGHT_PRESETS,
    brute_force_best,
    bundled_map_path,
    emit_csv,
    run_experiment,
)
from .hybrid import HybridConfig, HybridResult, run_hybrid, seed_pheromone
from .network import (
    DirectedRoute,
    Direction,
    Intersection,
    RoadNetwork,
    aggregate_route_cost,
    build_network,
    check_weights,
    direction_cost,
    format_map,
    parse_map,
    travel_time_cost,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "ALIVE",
    "ARRIVED",
    "BLOCKED",
    "Ant",
    "ClassicParams",
    "ColonyConfig",
    "ColonyResult",
    "ComparisonReport",
    "DirectedRoute",
    "Direction",
    "ExperimentSpec",
    "GridMap",
    "HybridConfig",
    "HybridResult",
    "Intersection",
    "LoopStats",
    "LoopValuation",
    "MapFormatError",
    "NoDirectionError",
    "PheromoneMap",
    "RoadNetwork",
    "RoutingError",
    "SeedPathSet",
    "UnreachableError",
    "WEIGHT_PRESETS",
    "aggregate_route_cost",
    "brute_force_best",
    "build_network",
    "bundled_map_path",
    "check_weights",
    "classic_global_update",
    "classic_transition",
    "direction_cost",
    "emit_csv",
    "format_map",
    "generate_seed_paths",
    "global_evaporate",
    "graph_astar",
    "grid_astar",
    "heuristic_lower_bound",
    "init_pheromone",
    "manhattan_heuristic",
    "parse_grid",
    "parse_map",
    "reward_punish",
    "route_desirability",
    "run_colony",
    "run_experiment",
    "run_hybrid",
    "seed_pheromone",
    "select_next",
    "step_ant",
    "transition_probabilities",
    "travel_time_cost",
    "value_ants",
]
