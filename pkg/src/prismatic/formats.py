"""JSON and ASCII interchange for cell sets and colorings.

JSON layout: ``{"n": 2, "cells": [{"x": 0, "y": 0, "color": 1}, ...]}``
with cells sorted by ``(x, y)``; uncolored shapes drop the ``n`` key and
the ``color`` fields.  ASCII grids print one text row per lattice row
from max y down to min y, digit characters for colors and ``.`` for
absent cells.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .lattice import Cell, ColoredPolyomino, LatticeError, Polyomino


def to_json(obj, n: int | None = None) -> dict:
    """JSON-ready dict for a shape, coloring or cell->color mapping."""
    if isinstance(obj, ColoredPolyomino):
        return {
            "n": obj.n,
            "cells": [
                {"x": x, "y": y, "color": c}
                for (x, y), c in zip(obj.shape.cells, obj.colors)
            ],
        }
    if isinstance(obj, Mapping):
        return {
            "n": n if n is not None else max(obj.values()),
            "cells": [
                {"x": x, "y": y, "color": c} for (x, y), c in sorted(obj.items())
            ],
        }
    cells = obj.cells if isinstance(obj, Polyomino) else sorted(obj)
    return {"cells": [{"x": x, "y": y} for x, y in cells]}


def parse_json(doc: dict) -> tuple[frozenset[Cell] | dict[Cell, int], int | None]:
    """Inverse of :func:`to_json`, kept in absolute coordinates.

    Returns ``(cells, None)`` for uncolored shapes and
    ``(mapping, n)`` for colorings.  ``n`` defaults to the largest color
    present when the document does not carry it.
    """
    if "cells" not in doc or not isinstance(doc["cells"], list):
        raise LatticeError("document needs a 'cells' list")
    records = doc["cells"]
    if not records:
        raise LatticeError("document lists no cells")
    colored = any("color" in r for r in records)
    if colored:
        if not all("color" in r for r in records):
            raise LatticeError("either all cells carry a color or none")
        mapping = {(int(r["x"]), int(r["y"])): int(r["color"]) for r in records}
        if len(mapping) != len(records):
            raise LatticeError("duplicate cells in document")
        n = int(doc["n"]) if "n" in doc else max(mapping.values())
        return mapping, n
    cells = frozenset((int(r["x"]), int(r["y"])) for r in records)
    if len(cells) != len(records):
        raise LatticeError("duplicate cells in document")
    return cells, None


def colored_from_json(doc: dict) -> ColoredPolyomino:
    """Parse a colored document into a canonical :class:`ColoredPolyomino`."""
    mapping, n = parse_json(doc)
    if n is None:
        raise LatticeError("document carries no colors")
    return ColoredPolyomino.from_mapping(mapping, n)


def ascii_render(obj, empty: str = ".") -> str:
    """ASCII grid of a shape or coloring, top lattice row first.

    Colored cells print their color digit (colors above 9 are rejected),
    uncolored cells print ``#``.
    """
    if isinstance(obj, ColoredPolyomino):
        mapping: Mapping[Cell, int] | None = obj.mapping()
    elif isinstance(obj, Mapping):
        mapping = obj
    else:
        mapping = None
    cells: Iterable[Cell] = mapping if mapping is not None else (
        obj.cells if isinstance(obj, Polyomino) else obj
    )
    cells = set(cells)
    if not cells:
        raise LatticeError("nothing to render")
    if mapping is not None and any(c > 9 for c in mapping.values()):
        raise LatticeError("ASCII rendering supports colors 1..9 only")
    xs = [x for x, _ in cells]
    ys = [y for _, y in cells]
    lines = []
    for y in range(max(ys), min(ys) - 1, -1):
        row = []
        for x in range(min(xs), max(xs) + 1):
            if mapping is not None:
                row.append(str(mapping[(x, y)]) if (x, y) in mapping else empty)
            else:
                row.append("#" if (x, y) in cells else empty)
        lines.append("".join(row))
    return "\n".join(lines)
