"""Square-grid shortest path search with 10/14 movement scoring.

Standalone grid searcher: orthogonal steps score 10, diagonal steps 14,
and the heuristic is the 10-per-step city-block distance.  With diagonals
enabled that heuristic can overestimate, so optimality is only guaranteed
in orthogonal-only mode; the road-network planner uses its own searcher
(see :mod:`antroute.astar`), this one exists for grid maps.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import MapFormatError, UnreachableError

Cell = tuple[int, int]  # (col, row)

ORTHOGONAL_SCORE = 10
DIAGONAL_SCORE = 14

_ORTHOGONAL_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))
_DIAGONAL_STEPS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


@dataclass(frozen=True)
class GridMap:
    """A bounded grid of walkable cells with a blocked-cell set."""

    width: int
    height: int
    blocked: frozenset[Cell] = frozenset()

    def in_bounds(self, cell: Cell) -> bool:
        col, row = cell
        return 0 <= col < self.width and 0 <= row < self.height

    def walkable(self, cell: Cell) -> bool:
        return self.in_bounds(cell) and cell not in self.blocked


def manhattan_heuristic(cell: Cell, goal: Cell) -> int:
    """City-block movement estimate: 10 per horizontal or vertical step."""
    return ORTHOGONAL_SCORE * (abs(cell[0] - goal[0]) + abs(cell[1] - goal[1]))


def parse_grid(text: str) -> tuple[GridMap, Cell | None, Cell | None]:
    """Read a grid fixture: "<width> <height>" then height rows of ``. # S G``."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise MapFormatError("empty grid fixture")
    header = lines[0].split()
    if len(header) != 2:
        raise MapFormatError("first line must be '<width> <height>'", line=1)
    try:
        width, height = int(header[0]), int(header[1])
    except ValueError:
        raise MapFormatError("first line must be '<width> <height>'", line=1) from None
    if width <= 0 or height <= 0 or len(lines) != height + 1:
        raise MapFormatError(f"expected {height} rows of width {width}")

    blocked = set()
    start = goal = None
    for row, line in enumerate(lines[1 : height + 1]):
        if len(line) != width:
            raise MapFormatError(f"row has width {len(line)}, expected {width}", line=row + 2)
        for col, ch in enumerate(line):
            if ch == "#":
                blocked.add((col, row))
            elif ch == "S":
                start = (col, row)
            elif ch == "G":
                goal = (col, row)
            elif ch != ".":
                raise MapFormatError(f"unknown cell character {ch!r}", line=row + 2)
    return GridMap(width, height, frozenset(blocked)), start, goal


def grid_astar(
    grid: GridMap, start: Cell, goal: Cell, allow_diagonal: bool = False
) -> tuple[list[Cell], int]:
    """Search the grid from ``start`` to ``goal``; returns (path, movement score).

    Frontier entries are ordered by f = g + heuristic; among equal f the most
    recently added cell is expanded first, which pins down one deterministic
    path.  Diagonal moves may not cut corners past a blocked orthogonal
    neighbor.  Raises :class:`UnreachableError` when the frontier empties.
    """
    for name, cell in (("start", start), ("goal", goal)):
        if not grid.walkable(cell):
            raise ValueError(f"{name} cell {cell} is blocked or out of bounds")
    if start == goal:
        return [start], 0

    g: dict[Cell, int] = {start: 0}
    parent: dict[Cell, Cell] = {}
    closed: set[Cell] = set()
    push_id = 0
    frontier: list[tuple[int, int, Cell]] = [(manhattan_heuristic(start, goal), 0, start)]

    while frontier:
        _, _, current = heapq.heappop(frontier)
        if current in closed:
            continue
        closed.add(current)
        if current == goal:
            path = [current]
            while path[-1] != start:
                path.append(parent[path[-1]])
            path.reverse()
            return path, g[goal]

        col, row = current
        steps = _ORTHOGONAL_STEPS + (_DIAGONAL_STEPS if allow_diagonal else ())
        for dc, dr in steps:
            nxt = (col + dc, row + dr)
            if not grid.walkable(nxt) or nxt in closed:
                continue
            diagonal = dc != 0 and dr != 0
            if diagonal and not (
                grid.walkable((col + dc, row)) and grid.walkable((col, row + dr))
            ):
                continue  # no cutting corners around a blocked cell
            score = g[current] + (DIAGONAL_SCORE if diagonal else ORTHOGONAL_SCORE)
            if score < g.get(nxt, float("inf")):
                g[nxt] = score
                parent[nxt] = current
                push_id -= 1  # newest pushes win ties on equal f
                heapq.heappush(frontier, (score + manhattan_heuristic(nxt, goal), push_id, nxt))

    raise UnreachableError(f"no path from {start} to {goal}")
