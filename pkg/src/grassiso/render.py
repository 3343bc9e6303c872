"""Text rendering of diagrams."""

from __future__ import annotations

from .partitions import Partition
from .skew import SkewShape

CELL = "▪"
DOT = "·"


def render_ascii(diagram: Partition | SkewShape, *, dots: bool = False) -> str:
    """One line per row, cells drawn as ``▪``.

    Skew rows are indented by blanks, or by ``·`` when ``dots`` is set, in
    which case the whole bounding box is drawn.
    """
    if isinstance(diagram, Partition):
        diagram = SkewShape.straight(diagram)
    if not diagram:
        return "(empty)"
    pad = DOT if dots else " "
    lines = []
    for r in range(diagram.height):
        cols = range(diagram.width) if dots else range(max((c for rr, c in diagram.cells if rr == r), default=-1) + 1)
        lines.append("".join(CELL if (r, c) in diagram.cells else pad for c in cols))
    return "\n".join(lines)
