"""Experiment runner, brute-force oracle and CSV emission."""

import random

import pytest

from antroute import (
    ExperimentSpec,
    Intersection,
    UnreachableError,
    brute_force_best,
    build_network,
    emit_csv,
    graph_astar,
    parse_map,
    run_experiment,
)
from antroute.harness import CSV_HEADER, WEIGHT_PRESETS, ComparisonReport, ReportRow, bundled_map_path

from oracles import random_network, random_weights

LINE_MAP_TEXT = """
PARAMS toll
NODE 1 0 0
NODE 2 1 0
NODE 3 2 0
EDGE 1 2 1 1
EDGE 2 3 1 2
"""


@pytest.fixture
def line_map(tmp_path):
    path = tmp_path / "line.map"
    path.write_text(LINE_MAP_TEXT, encoding="utf-8")
    return path


def test_brute_force_unique_path():
    net = parse_map(LINE_MAP_TEXT)
    best = brute_force_best(net, {"toll": 1.0}, 1, 3)
    assert best.nodes == (1, 2, 3)
    assert best.total_cost == 3.0


def test_brute_force_complete_digraph_tie_rule():
    nodes = [Intersection(i, float(i), 0.0) for i in range(1, 5)]
    edges = [
        (a, b, True, {"toll": 1.0})
        for a in range(1, 5)
        for b in range(1, 5)
        if a != b
    ]
    net = build_network(nodes, edges, ("toll",))
    best = brute_force_best(net, {"toll": 1.0}, 1, 4)
    assert best.nodes == (1, 4)  # unit costs: the direct hop, by the tie rule
    assert best.total_cost == 1.0


@pytest.mark.parametrize("seed", range(10))
def test_brute_force_cross_validates_searcher(seed):
    rng = random.Random(7000 + seed)
    net = random_network(rng, max_nodes=8, max_edges=16)
    weights = random_weights(rng)
    origin, dest = rng.sample(sorted(net.intersections), 2)
    try:
        expected = brute_force_best(net, weights, origin, dest)
    except UnreachableError:
        with pytest.raises(UnreachableError):
            graph_astar(net, weights, origin, dest)
        return
    assert graph_astar(net, weights, origin, dest).total_cost == expected.total_cost


def test_brute_force_guards_large_networks():
    rng = random.Random(1)
    net = random_network(rng, max_nodes=10)
    with pytest.raises(ValueError, match="too large"):
        brute_force_best(net, random_weights(rng), 1, 2, max_nodes=3)


def test_astar_experiment_reports_exact_path(line_map):
    spec = ExperimentSpec(line_map, 1, 3, {"toll": 1.0}, "astar")
    report = run_experiment(spec)
    assert report.finals["astar"].nodes == (1, 2, 3)
    assert report.finals["astar"].total_cost == 3.0
    assert len(report.rows) == 1
    assert report.rows[0].best_tcost == 3.0


def test_experiment_validates_weights_and_nodes(line_map):
    with pytest.raises(ValueError, match="unknown weight"):
        run_experiment(ExperimentSpec(line_map, 1, 3, {"toll": 1.0, "x": 2.0}, "astar"))
    with pytest.raises(ValueError, match="missing weight"):
        run_experiment(ExperimentSpec(line_map, 1, 3, {}, "astar"))
    with pytest.raises(ValueError, match="unknown dest"):
        run_experiment(ExperimentSpec(line_map, 1, 99, {"toll": 1.0}, "astar"))
    with pytest.raises(ValueError, match="unknown algorithm"):
        ExperimentSpec(line_map, 1, 3, {"toll": 1.0}, "dijkstra")
    with pytest.raises(ValueError, match="repeats"):
        ExperimentSpec(line_map, 1, 3, {"toll": 1.0}, "astar", repeats=0)


def test_experiment_unreachable_raises(line_map):
    with pytest.raises(UnreachableError):
        run_experiment(ExperimentSpec(line_map, 3, 1, {"toll": 1.0}, "astar"))


def _small_spec(path, algorithm, repeats=1, seed=0):
    from antroute import ColonyConfig, HybridConfig

    return ExperimentSpec(
        path,
        1,
        3,
        {"toll": 1.0},
        algorithm,
        repeats=repeats,
        rng_seed=seed,
        config=HybridConfig(colony=ColonyConfig(loop_count=4, ant_count=3)),
    )


def test_repeats_aggregate_is_mean_of_single_runs(line_map):
    merged = run_experiment(_small_spec(line_map, "ants", repeats=2, seed=5))
    first = run_experiment(_small_spec(line_map, "ants", repeats=1, seed=5))
    second = run_experiment(_small_spec(line_map, "ants", repeats=1, seed=6))
    for row, a, b in zip(merged.rows, first.rows, second.rows):
        assert row.mean_tcost == (a.mean_tcost + b.mean_tcost) / 2
        assert row.best_tcost == (a.best_tcost + b.best_tcost) / 2
        assert row.arrived == (a.arrived + b.arrived) / 2
    assert merged.mean_best_cost["ants"] == (
        first.mean_best_cost["ants"] + second.mean_best_cost["ants"]
    ) / 2


def test_hybrid_experiment_runs(line_map):
    report = run_experiment(_small_spec(line_map, "hybrid", repeats=2))
    assert report.finals["hybrid"].nodes == (1, 2, 3)
    assert len(report.rows) == 4


def test_csv_single_row(tmp_path):
    report = ComparisonReport(
        rows=[ReportRow(1, "ants", 12.345678, 11.0, 20.0)],
        finals={},
        mean_best_cost={},
        velocity_kmh=40.0,
        start_time="18:00",
    )
    out = tmp_path / "report.csv"
    emit_csv(report, out)
    text = out.read_text(encoding="utf-8")
    assert text == f"{CSV_HEADER}\n1,ants,12.3457,11,20\n"


def test_csv_na_encoding(tmp_path):
    report = ComparisonReport(
        rows=[ReportRow(1, "ants", None, None, 0.0)],
        finals={},
        mean_best_cost={},
        velocity_kmh=40.0,
        start_time="18:00",
    )
    out = tmp_path / "report.csv"
    emit_csv(report, out)
    assert out.read_text(encoding="utf-8").splitlines()[1] == "1,ants,NA,NA,0"


def test_csv_round_trip_row_count(line_map, tmp_path):
    report = run_experiment(_small_spec(line_map, "ants"))
    out = tmp_path / "loops.csv"
    emit_csv(report, out)
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) - 1 == 4  # loop_count rows


def test_csv_bit_identical_reruns(line_map, tmp_path):
    spec = _small_spec(line_map, "hybrid", repeats=2)
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    emit_csv(run_experiment(spec), first)
    emit_csv(run_experiment(spec), second)
    assert first.read_bytes() == second.read_bytes()


def test_report_merge_combines_algorithms(line_map):
    ants = run_experiment(_small_spec(line_map, "ants"))
    astar = run_experiment(ExperimentSpec(line_map, 1, 3, {"toll": 1.0}, "astar"))
    combined = ComparisonReport.merged(ants, astar)
    assert set(combined.finals) == {"ants", "astar"}
    assert len(combined.rows) == len(ants.rows) + 1


def test_bundled_map_seeded_mean_never_worse_via_harness():
    # 20 paired repeats on the city fixture: the warm-started planner's mean
    # final cost stays at or below the plain colony's
    from antroute import ColonyConfig, HybridConfig

    common = dict(
        map_path=bundled_map_path(),
        origin=24,
        dest=23,
        weights=WEIGHT_PRESETS["shortest-first"],
        repeats=20,
        rng_seed=0,
        config=HybridConfig(colony=ColonyConfig(loop_count=50)),
    )
    hybrid = run_experiment(ExperimentSpec(algorithm="hybrid", **common))
    ants = run_experiment(ExperimentSpec(algorithm="ants", **common))
    assert hybrid.mean_best_cost["hybrid"] <= ants.mean_best_cost["ants"]
    assert len(hybrid.rows) == len(ants.rows) == 50


def test_weight_presets_cover_bundled_map():
    net = parse_map(bundled_map_path().read_text(encoding="utf-8"))
    assert len(net.intersections) == 27
    assert (6, 7) in net.routes and (7, 6) not in net.routes
    assert (7, 3) in net.routes and (3, 7) not in net.routes
    for preset in WEIGHT_PRESETS.values():
        assert set(preset) == set(net.parameter_names)
    assert WEIGHT_PRESETS["shortest-first"]["distance"] == 1.0
    assert WEIGHT_PRESETS["calm-traffic"]["road_risk"] == 0.75
