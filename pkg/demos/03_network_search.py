"""
Deterministic network search and warm-start candidates
======================================================

The searcher minimizes the weighted-sum cost under a straight-line lower
bound on the distance component.  Different importance profiles pick
different corridors through the city; the distinct per-profile optima form
the candidate set that later seeds the colony.
"""

from antroute import generate_seed_paths, graph_astar
from antroute import parse_map
from antroute.harness import WEIGHT_PRESETS, bundled_map_path

ORIGIN, DEST = 24, 23

net = parse_map(bundled_map_path().read_text(encoding="utf-8"))

print(f"query: {ORIGIN} -> {DEST} on the bundled city map\n")

print("full benchmark profiles:")
for name, weights in WEIGHT_PRESETS.items():
    best = graph_astar(net, weights, ORIGIN, DEST)
    print(f"  {name:>15}: cost {best.total_cost:7.2f}  {' -> '.join(map(str, best.nodes))}")

print("\nsingle-parameter profiles:")
for active in net.parameter_names:
    profile = {name: 1.0 if name == active else 0.0 for name in net.parameter_names}
    best = graph_astar(net, profile, ORIGIN, DEST)
    print(f"  {active:>15}: cost {best.total_cost:7.2f}  {' -> '.join(map(str, best.nodes))}")

weights = WEIGHT_PRESETS["calm-traffic"]
seeds = generate_seed_paths(net, weights, ORIGIN, DEST)
print(f"\nwarm-start candidates under 'calm-traffic' ({len(seeds)} distinct):")
for path in seeds.paths:
    print(f"  cost {path.total_cost:7.2f}  {' -> '.join(map(str, path.nodes))}")
