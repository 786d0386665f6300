"""
Seeded vs. unseeded colony: the headline comparison
===================================================

Same map, same query, same paired random seeds.  The plain colony explores
from a uniform pheromone field; the seeded pipeline first boosts the
routes of the searcher's candidate paths.  The seeded runs start cheaper
in loop 1 and end with a lower (never higher) final cost.  Per-loop means
land in a merged CSV for external plotting.
"""

from antroute import ColonyConfig, ExperimentSpec, HybridConfig, emit_csv, run_experiment
from antroute.harness import WEIGHT_PRESETS, ComparisonReport, bundled_map_path

ORIGIN, DEST = 24, 23
REPEATS = 10

for preset_name, weights in WEIGHT_PRESETS.items():
    print(f"=== importance profile: {preset_name} ===")
    reports = {}
    for algorithm in ("ants", "hybrid"):
        spec = ExperimentSpec(
            map_path=bundled_map_path(),
            origin=ORIGIN,
            dest=DEST,
            weights=weights,
            algorithm=algorithm,
            repeats=REPEATS,
            rng_seed=0,
            config=HybridConfig(colony=ColonyConfig(loop_count=60)),
        )
        reports[algorithm] = run_experiment(spec)

    for algorithm, report in reports.items():
        best = report.finals[algorithm]
        print(
            f"  {algorithm:>6}: mean final best {report.mean_best_cost[algorithm]:7.2f}, "
            f"overall best {best.total_cost:7.2f}  {' -> '.join(map(str, best.nodes))}"
        )
    first_rows = {alg: rep.rows[0] for alg, rep in reports.items()}
    print(
        f"  loop-1 mean best: hybrid {first_rows['hybrid'].best_tcost:.2f} "
        f"vs ants {first_rows['ants'].best_tcost:.2f}"
    )

    merged = ComparisonReport.merged(reports["ants"], reports["hybrid"])
    out = f"comparison_{preset_name.replace('-', '_')}.csv"
    emit_csv(merged, out)
    print(f"  per-loop means written to {out}\n")
