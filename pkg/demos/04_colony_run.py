"""
Watching the walker colony converge
===================================

Twenty walkers start at the origin each loop and move stochastically,
favoring strong pheromone and cheap routes.  Arrived walkers cheaper than
the loop average reinforce their routes, the rest decay them, and the whole
field evaporates.  The per-loop stats show the mean trip cost tightening
around the best direction found.
"""

import random

from antroute import ColonyConfig, init_pheromone, parse_map, run_colony
from antroute.harness import WEIGHT_PRESETS, bundled_map_path

ORIGIN, DEST = 24, 23

net = parse_map(bundled_map_path().read_text(encoding="utf-8"))
weights = WEIGHT_PRESETS["shortest-first"]
cfg = ColonyConfig(loop_count=30)

result = run_colony(net, weights, ORIGIN, DEST, cfg, init_pheromone(net, 1.0), random.Random(4))

print("loop  arrived  mean_tcost  best_tcost")
for stat in result.stats:
    if stat.loop <= 10 or stat.loop % 5 == 0:
        mean = f"{stat.mean_tcost:10.2f}" if stat.mean_tcost is not None else "        NA"
        best = f"{stat.best_tcost:10.2f}" if stat.best_tcost is not None else "        NA"
        print(f"{stat.loop:4d}  {stat.arrived:7d}  {mean}  {best}")

print(f"\nbest direction: {' -> '.join(map(str, result.best.nodes))}")
print(f"best cost:      {result.best.total_cost:.2f}")
