"""Cells, fixed polyominoes, colorings and integer lattice geometry.

Conventions used throughout the package:

* a cell is an ``(x, y)`` pair naming the closed unit square
  ``[x, x+1] x [y, y+1]``; y grows upward,
* fixed polyominoes are considered up to translation only,
* the canonical translate of a cell set has ``min x == min y == 0`` and
  its cells are listed in lexicographic ``(x, y)`` order,
* colors are the integers ``1..n``.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

Cell = tuple[int, int]
Vec = tuple[int, int]

NEIGHBOR_STEPS: tuple[Vec, ...] = ((1, 0), (-1, 0), (0, 1), (0, -1))


class LatticeError(Exception):
    """Base class for lattice-level errors."""


class EmptySetError(LatticeError):
    pass


class DisconnectedError(LatticeError):
    pass


class NotAnInstanceError(LatticeError):
    pass


class UnknownMapError(LatticeError):
    pass


def is_connected(cells: Iterable[Cell]) -> bool:
    """True iff the cell set is edge-connected (empty sets are not)."""
    todo = set(cells)
    if not todo:
        return False
    seed = next(iter(todo))
    todo.discard(seed)
    queue = deque([seed])
    while queue:
        x, y = queue.popleft()
        for dx, dy in NEIGHBOR_STEPS:
            nb = (x + dx, y + dy)
            if nb in todo:
                todo.discard(nb)
                queue.append(nb)
    return not todo


def translate(cells: Iterable[Cell], vec: Vec) -> frozenset[Cell]:
    vx, vy = vec
    return frozenset((x + vx, y + vy) for x, y in cells)


@dataclass(frozen=True)
class Polyomino:
    """A non-empty edge-connected cell set in canonical position.

    ``cells`` is sorted lexicographically by ``(x, y)`` and satisfies
    ``min x == min y == 0``.  Use :func:`normalize` to build one from an
    arbitrary translate.
    """

    cells: tuple[Cell, ...]

    def __post_init__(self) -> None:
        if not self.cells:
            raise EmptySetError("polyomino needs at least one cell")
        if list(self.cells) != sorted(set(self.cells)):
            raise LatticeError("cells must be sorted and duplicate free")
        if min(x for x, _ in self.cells) != 0 or min(y for _, y in self.cells) != 0:
            raise LatticeError("cells must be in canonical position")
        if not is_connected(self.cells):
            raise DisconnectedError("cells must be edge-connected")
        object.__setattr__(self, "_cellset", frozenset(self.cells))

    @property
    def cell_set(self) -> frozenset[Cell]:
        return self._cellset  # type: ignore[attr-defined]

    @property
    def width(self) -> int:
        return max(x for x, _ in self.cells) + 1

    @property
    def height(self) -> int:
        return max(y for _, y in self.cells) + 1

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def __contains__(self, cell: Cell) -> bool:
        return cell in self._cellset  # type: ignore[attr-defined]


def normalize(cells: Iterable[Cell]) -> Polyomino:
    """Canonical translate of ``cells`` as a :class:`Polyomino`.

    Raises :class:`EmptySetError` on empty input and
    :class:`DisconnectedError` when the set is not edge-connected.
    """
    cs = set(cells)
    if not cs:
        raise EmptySetError("cannot normalize an empty cell set")
    mx = min(x for x, _ in cs)
    my = min(y for _, y in cs)
    return Polyomino(tuple(sorted((x - mx, y - my) for x, y in cs)))


def dimensions(shape: Polyomino) -> tuple[int, int]:
    """Bounding box (width, height) of a canonical polyomino."""
    return shape.width, shape.height


def instances_of(pattern: Polyomino, cells: Iterable[Cell]) -> list[Vec]:
    """All vectors v with ``pattern + v`` contained in ``cells``, sorted.

    ``cells`` may be any cell set, canonical or not, with or without holes.
    """
    cellset = cells.cell_set if isinstance(cells, Polyomino) else frozenset(cells)
    pcells = pattern.cells
    anchor = pcells[0]
    rest = [(x - anchor[0], y - anchor[1]) for x, y in pcells[1:]]
    found = []
    for cx, cy in cellset:
        if all((cx + dx, cy + dy) in cellset for dx, dy in rest):
            found.append((cx - anchor[0], cy - anchor[1]))
    found.sort()
    return found


@dataclass(frozen=True)
class ColoredPattern:
    """A pattern shape together with one coloring of it.

    ``colors[i]`` colors ``shape.cells[i]``; equal patterns mean the same
    colored translate of the pattern.
    """

    shape: Polyomino
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.colors) != len(self.shape.cells):
            raise LatticeError("one color per cell required")


@dataclass(frozen=True)
class ColoredPolyomino:
    """A polyomino whose cells each carry one of the colors ``1..n``."""

    shape: Polyomino
    n: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise LatticeError("need at least one color")
        if len(self.colors) != len(self.shape.cells):
            raise LatticeError("one color per cell required")
        if any(c < 1 or c > self.n for c in self.colors):
            raise LatticeError("colors must lie in 1..n")
        object.__setattr__(
            self, "_by_cell", dict(zip(self.shape.cells, self.colors))
        )

    @classmethod
    def from_mapping(cls, mapping: Mapping[Cell, int], n: int) -> "ColoredPolyomino":
        """Build from a cell->color mapping, normalizing the translate."""
        shape = normalize(mapping)
        mx = min(x for x, _ in mapping)
        my = min(y for _, y in mapping)
        colors = tuple(mapping[(x + mx, y + my)] for x, y in shape.cells)
        return cls(shape, n, colors)

    def color_at(self, cell: Cell) -> int:
        return self._by_cell[cell]  # type: ignore[attr-defined]

    def mapping(self) -> dict[Cell, int]:
        return dict(zip(self.shape.cells, self.colors))


def coloring_of_instance(
    colored: ColoredPolyomino, pattern: Polyomino, vec: Vec
) -> ColoredPattern:
    """Restrict ``colored`` to the instance ``pattern + vec``.

    The result lists colors in the canonical cell order of ``pattern``.
    Raises :class:`NotAnInstanceError` when some cell of ``pattern + vec``
    is missing from the shape.
    """
    vx, vy = vec
    try:
        colors = tuple(
            colored.color_at((x + vx, y + vy)) for x, y in pattern.cells
        )
    except KeyError as exc:
        raise NotAnInstanceError(
            f"{pattern.cells} + {vec} is not contained in the shape"
        ) from exc
    return ColoredPattern(pattern, colors)


@dataclass(frozen=True)
class PickQuantities:
    """Lattice point counts of the closed region covered by a cell set."""

    area: int
    boundary: int
    interior: int
    holes: int


def pick_quantities(cells: Iterable[Cell]) -> PickQuantities:
    """Area, boundary points, interior points and holes of a cell union.

    A lattice point is a boundary point when it is an endpoint of a unit
    edge with a covered cell on one side and an uncovered cell on the
    other.  Holes are bounded 4-connected components of the complement;
    they are found inside the bounding box, seeded from a frame around it.

    When the shape has no pinch (see :func:`has_pinch`) its boundary
    decomposes into ``holes + 1`` disjoint simple loops, each loop visits
    as many points as it has unit edges, and the counts satisfy
    ``boundary / 2 == area + 1 - interior - holes``.  At a pinch the
    boundary revisits a point, the point count drops below the edge
    count, and the identity can be off by half the number of pinches.
    The interior count equals the number of square-tetromino instances
    regardless of pinches.
    """
    cellset = frozenset(cells)
    if not cellset:
        raise EmptySetError("cannot measure an empty cell set")
    area = len(cellset)

    boundary: set[Cell] = set()
    for x, y in cellset:
        if (x + 1, y) not in cellset:
            boundary.update(((x + 1, y), (x + 1, y + 1)))
        if (x - 1, y) not in cellset:
            boundary.update(((x, y), (x, y + 1)))
        if (x, y + 1) not in cellset:
            boundary.update(((x, y + 1), (x + 1, y + 1)))
        if (x, y - 1) not in cellset:
            boundary.update(((x, y), (x + 1, y)))

    # A lattice point not incident to any boundary edge has all four or
    # none of its incident cells covered, so one membership probe decides
    # between interior and exterior.
    xs = [x for x, _ in cellset]
    ys = [y for _, y in cellset]
    interior = 0
    for px in range(min(xs), max(xs) + 2):
        for py in range(min(ys), max(ys) + 2):
            if (px, py) not in boundary and (px, py) in cellset:
                interior += 1

    holes = 0
    x0, x1 = min(xs) - 1, max(xs) + 1
    y0, y1 = min(ys) - 1, max(ys) + 1
    seen: set[Cell] = set()
    frame = [
        (x, y)
        for x in range(x0, x1 + 1)
        for y in range(y0, y1 + 1)
        if x in (x0, x1) or y in (y0, y1)
    ]

    def flood(seeds: Iterable[Cell]) -> None:
        queue = deque()
        for s in seeds:
            if s not in seen:
                seen.add(s)
                queue.append(s)
        while queue:
            x, y = queue.popleft()
            for dx, dy in NEIGHBOR_STEPS:
                nb = (x + dx, y + dy)
                nx, ny = nb
                if x0 <= nx <= x1 and y0 <= ny <= y1:
                    if nb not in seen and nb not in cellset:
                        seen.add(nb)
                        queue.append(nb)

    flood(frame)
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            cand = (x, y)
            if cand not in cellset and cand not in seen:
                holes += 1
                flood([cand])
    return PickQuantities(area, len(boundary), interior, holes)


# Named lattice maps.  Each entry is the matrix (a, b, c, d) of the map
# (x, y) -> (a x + b y, c x + d y); all three are invertible over Z.
LATTICE_MAPS: dict[str, tuple[int, int, int, int]] = {
    "row-shift": (1, -1, 0, 1),
    "skew-rotate": (0, 1, -1, -1),
    "transpose": (0, 1, 1, 0),
}


def apply_lattice_map(obj, name: str):
    """Apply a named lattice map cellwise, carrying colors along.

    ``obj`` may be an iterable of cells (returns a frozenset), a mapping
    cell -> color (returns a dict) or a :class:`ColoredPolyomino`
    (returns a dict keyed by mapped cells).  The image is not
    re-normalized.  Raises :class:`UnknownMapError` for unknown names.
    """
    try:
        a, b, c, d = LATTICE_MAPS[name]
    except KeyError:
        raise UnknownMapError(
            f"unknown lattice map {name!r}; known: {sorted(LATTICE_MAPS)}"
        ) from None
    if isinstance(obj, ColoredPolyomino):
        obj = obj.mapping()
    if isinstance(obj, Mapping):
        return {
            (a * x + b * y, c * x + d * y): col for (x, y), col in obj.items()
        }
    return frozenset((a * x + b * y, c * x + d * y) for x, y in obj)


def row_shift(obj):
    """The shear (x, y) -> (x - y, y); maps each lattice row onto itself."""
    return apply_lattice_map(obj, "row-shift")


def has_pinch(cells: Iterable[Cell]) -> bool:
    """True when two cells meet only at a corner lattice point.

    A pinch is a point whose four incident cells are covered exactly on
    one diagonal.  At a pinch the boundary passes through the same point
    twice, so it does not decompose into disjoint simple loops and the
    half-boundary identity of :func:`pick_quantities` can fail.
    """
    cellset = frozenset(cells)
    for x, y in cellset:
        for dx in (-1, 1):
            for dy in (-1, 1):
                if (
                    (x + dx, y + dy) in cellset
                    and (x + dx, y) not in cellset
                    and (x, y + dy) not in cellset
                ):
                    return True
    return False


def random_polyomino(rng: random.Random, size: int) -> Polyomino:
    """Seeded random growth of a connected ``size``-cell shape.

    Growth never lets two cells meet only at a corner, so the boundary
    of the result decomposes into disjoint simple loops and the
    quantities of :func:`pick_quantities` satisfy the half-boundary
    identity exactly.  There is always a safe cell to add (the cell
    above a topmost cell is one), hence no dead ends.  Not uniform over
    polyominoes; intended for randomized testing.
    """
    if size < 1:
        raise EmptySetError("size must be positive")
    cells = {(0, 0)}
    frontier = {(1, 0), (-1, 0), (0, 1), (0, -1)}
    while len(cells) < size:
        safe = [
            (x, y)
            for x, y in sorted(frontier)
            if not any(
                (x + dx, y + dy) in cells
                and (x + dx, y) not in cells
                and (x, y + dy) not in cells
                for dx in (-1, 1)
                for dy in (-1, 1)
            )
        ]
        pick = rng.choice(safe)
        cells.add(pick)
        frontier.discard(pick)
        x, y = pick
        for dx, dy in NEIGHBOR_STEPS:
            nb = (x + dx, y + dy)
            if nb not in cells:
                frontier.add(nb)
    return normalize(cells)
