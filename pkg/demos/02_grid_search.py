"""
Grid pathfinding with 10/14 movement scores
===========================================

A small standalone searcher over square grids: orthogonal steps score 10,
diagonals 14, guided by the city-block heuristic.  The fixture below has a
vertical wall, so the walk must climb over the top.
"""

from antroute import grid_astar, manhattan_heuristic, parse_grid

FIXTURE = """\
9 6
.........
...#.....
.S.#..G..
...#.....
...#.....
.........
"""

grid, start, goal = parse_grid(FIXTURE)
print(f"grid {grid.width}x{grid.height}, start {start}, goal {goal}")
print(f"city-block estimate start -> goal: {manhattan_heuristic(start, goal)}")


def render(path):
    cells = set(path)
    rows = []
    for r in range(grid.height):
        row = ""
        for c in range(grid.width):
            if (c, r) == start:
                row += "S"
            elif (c, r) == goal:
                row += "G"
            elif (c, r) in grid.blocked:
                row += "#"
            elif (c, r) in cells:
                row += "o"
            else:
                row += "."
        rows.append(row)
    return "\n".join(rows)


for allow_diagonal in (False, True):
    path, score = grid_astar(grid, start, goal, allow_diagonal=allow_diagonal)
    mode = "diagonal moves allowed" if allow_diagonal else "orthogonal only"
    print(f"\n{mode}: {len(path)} cells, movement score {score}")
    print(render(path))
