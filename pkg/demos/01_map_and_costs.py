"""
Loading a road-network map and pricing routes
=============================================

The map file is line oriented: a PARAMS header naming the cost parameters,
NODE lines with planar meter coordinates, and EDGE lines carrying one cost
per parameter.  Distance is written in meters and rescaled at load time so
the longest single route costs 10; the other parameters are already on a
0..10 scale (larger = worse).
"""

from antroute import aggregate_route_cost, direction_cost, parse_map, travel_time_cost
from antroute.harness import WEIGHT_PRESETS, bundled_map_path

net = parse_map(bundled_map_path().read_text(encoding="utf-8"))
print(f"loaded {len(net.intersections)} intersections, {len(net.routes)} directed routes")
print(f"parameters: {', '.join(net.parameter_names)}")

# one-way streets appear as a single directed route
print("\none-way checks:")
for pair in ((6, 7), (7, 6), (7, 3), (3, 7)):
    print(f"  route {pair[0]:>2} -> {pair[1]:<2}: {'yes' if pair in net.routes else 'no'}")

# the same route prices differently under different importance profiles
route = net.routes[(24, 2)]
print(f"\nroute 24 -> 2: {route.distance_m:.0f} m, costs {dict(route.costs)}")
for name, weights in WEIGHT_PRESETS.items():
    print(f"  aggregate cost under {name!r}: {aggregate_route_cost(route, weights):.3f}")

# costs add along a path, and a one-node journey is free
walk = [24, 2, 27, 25]
weights = WEIGHT_PRESETS["shortest-first"]
print(f"\npath {' -> '.join(map(str, walk))}: cost {direction_cost(walk, net, weights):.3f}")
print(f"path [24]: cost {direction_cost([24], net, weights):.3f}")

# travel time is derived from raw meters and an assumed constant velocity
meters = sum(net.routes[(a, b)].distance_m for a, b in zip(walk, walk[1:]))
seconds = travel_time_cost(meters, velocity_kmh=40.0)
print(f"\n{meters:.0f} m at 40 km/h takes {seconds:.0f} s ({seconds / 60:.1f} min)")
