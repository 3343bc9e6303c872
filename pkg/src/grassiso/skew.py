"""Skew diagrams as translation-normalized cell sets.

Cells are ``(row, col)`` pairs with rows growing downward and columns
rightward. Two skew diagrams are the same when their cell sets agree after
translating both so that the minimal row and the minimal column are 0.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, ParseError
from .partitions import Partition, contains, parse_partition

__all__ = [
    "SkewShape",
    "assemble",
    "connected_components_diag",
    "from_partitions",
    "is_skew",
    "pack",
    "parse_skew",
    "rotate180",
    "shape_equal",
    "transpose_skew",
]

Cell = tuple[int, int]


def _normalize(cells: Iterable[Cell]) -> frozenset[Cell]:
    cells = list(cells)
    if not cells:
        return frozenset()
    r0 = min(r for r, _ in cells)
    c0 = min(c for _, c in cells)
    return frozenset((r - r0, c - c0) for r, c in cells)


def _row_intervals(cells: frozenset[Cell]) -> dict[int, list[int]]:
    rows: dict[int, list[int]] = defaultdict(list)
    for r, c in cells:
        rows[r].append(c)
    return rows


def is_skew(cells: Iterable[Cell]) -> bool:
    """True iff some pair ``lam <= nu`` produces ``cells`` up to translation.

    Checks that rows and columns are contiguous intervals and that the left
    and right row endpoints weakly decrease going down.
    """
    cells = _normalize(cells)
    if not cells:
        return True
    rows = _row_intervals(cells)
    cols: dict[int, list[int]] = defaultdict(list)
    for r, c in cells:
        cols[c].append(r)
    for line in (*rows.values(), *cols.values()):
        if max(line) - min(line) + 1 != len(line):
            return False
    prev = None
    for r in sorted(rows):
        left, right = min(rows[r]), max(rows[r]) + 1
        if prev is not None and (left > prev[0] or right > prev[1]):
            return False
        prev = (left, right)
    return True


@dataclass(frozen=True)
class SkewShape:
    cells: frozenset[Cell] = frozenset()

    def __post_init__(self) -> None:
        cells = _normalize(self.cells)
        if not is_skew(cells):
            raise DomainError(f"not a skew shape: {sorted(cells)}")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def straight(cls, lam: Partition) -> SkewShape:
        return cls(lam.cells())

    def __len__(self) -> int:
        return len(self.cells)

    def __bool__(self) -> bool:
        return bool(self.cells)

    @property
    def height(self) -> int:
        return 1 + max(r for r, _ in self.cells) if self.cells else 0

    @property
    def width(self) -> int:
        return 1 + max(c for _, c in self.cells) if self.cells else 0

    def sort_key(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells))

    def row_intervals(self) -> list[tuple[int, int]]:
        """Half-open column interval per row, top to bottom.

        An empty row between two nonempty ones is reported as ``(c, c)`` with
        ``c`` the left endpoint of the row above.
        """
        rows = _row_intervals(self.cells)
        out: list[tuple[int, int]] = []
        for r in range(self.height):
            if r in rows:
                out.append((min(rows[r]), max(rows[r]) + 1))
            else:
                out.append((out[-1][0], out[-1][0]))
        return out

    def to_partitions(self) -> tuple[Partition, Partition]:
        """A generating pair ``(lam, nu)`` with ``nu / lam`` equal to this shape."""
        intervals = self.row_intervals()
        return (
            Partition(tuple(left for left, _ in intervals)),
            Partition(tuple(right for _, right in intervals)),
        )

    def to_json(self) -> dict:
        return {"rows": [list(iv) for iv in self.row_intervals()]}

    @classmethod
    def from_json(cls, data: dict) -> SkewShape:
        return cls(
            frozenset((r, c) for r, (left, right) in enumerate(data["rows"]) for c in range(left, right))
        )

    def __str__(self) -> str:
        lam, nu = self.to_partitions()
        return f"{nu} / {lam}"


def from_partitions(lam: Partition, nu: Partition) -> SkewShape:
    """The shape ``nu / lam``: cells of ``nu`` outside ``lam``."""
    if not contains(nu, lam):
        raise DomainError(f"{lam} is not contained in {nu}")
    return SkewShape(frozenset((i, j) for i, p in enumerate(nu.parts) for j in range(lam.part(i), p)))


def parse_skew(text: str) -> SkewShape:
    """Read ``"nu / lam"``; a bare partition is read as a straight shape."""
    pieces = text.split("/")
    if len(pieces) > 2:
        raise ParseError(f"expected 'nu / lambda', got {text!r}")
    nu = parse_partition(pieces[0])
    lam = parse_partition(pieces[1]) if len(pieces) == 2 else Partition()
    try:
        return from_partitions(lam, nu)
    except DomainError as exc:
        raise ParseError(str(exc)) from exc


def transpose_skew(theta: SkewShape) -> SkewShape:
    return SkewShape(frozenset((c, r) for r, c in theta.cells))


def rotate180(theta: SkewShape) -> SkewShape:
    return SkewShape(frozenset((-r, -c) for r, c in theta.cells))


def shape_equal(theta: SkewShape, other: SkewShape) -> bool:
    return theta.cells == other.cells


def _diagonal_bands(cells: Iterable[Cell]) -> list[list[Cell]]:
    # A NW-SE cut avoids every cell iff some diagonal (col - row) is unoccupied.
    by_diag: dict[int, list[Cell]] = defaultdict(list)
    for r, c in cells:
        by_diag[c - r].append((r, c))
    bands: list[list[Cell]] = []
    prev = None
    for d in sorted(by_diag):
        if prev is None or d != prev + 1:
            bands.append([])
        bands[-1].extend(by_diag[d])
        prev = d
    return bands


def connected_components_diag(theta: SkewShape) -> list[SkewShape]:
    """Pieces separated by NW-SE diagonal cuts, ordered from SW to NE."""
    return [SkewShape(frozenset(band)) for band in _diagonal_bands(theta.cells)]


def assemble(components: Iterable[SkewShape]) -> SkewShape:
    """Lay connected shapes out from SW to NE, consecutive ones one diagonal apart.

    Each next shape gets its bottom row directly above the previous shape's
    top row and its first column right after the previous shape's last column.
    """
    cells: set[Cell] = set()
    top, right = 0, -1
    for component in components:
        base_row = top - component.height
        base_col = right + 1
        cells.update((base_row + r, base_col + c) for r, c in component.cells)
        top, right = base_row, base_col + component.width - 1
    return SkewShape(frozenset(cells))


def pack(theta: SkewShape) -> SkewShape:
    """Remove surplus empty diagonals between the components of ``theta``."""
    return assemble(connected_components_diag(theta))
