"""Slow, definition-level reference computations used only by the tests."""

from __future__ import annotations

import itertools
from collections import Counter

from grassiso.partitions import Partition
from grassiso.posets import CellPoset


def naive_subdiagrams(lam: Partition) -> list[Partition]:
    """Every mu contained in lam, by trying all row-length vectors."""
    ranges = [range(p + 1) for p in lam.parts]
    found = set()
    for rows in itertools.product(*ranges):
        if all(rows[i] >= rows[i + 1] for i in range(len(rows) - 1)):
            found.add(Partition(rows))
    return sorted(found)


def naive_subdiagram_counts(lam: Partition) -> list[int]:
    sizes = Counter(mu.size for mu in naive_subdiagrams(lam))
    return [sizes[i] for i in range(lam.size + 1)]


def columns_oracle(lam: Partition) -> Partition:
    """Transpose by counting, for each column index, the rows long enough to reach it."""
    cells = lam.cells()
    width = max((c for _, c in cells), default=-1) + 1
    return Partition(tuple(sum(1 for r, c in cells if c == j) for j in range(width)))


def hook_removal_components(lam: Partition) -> list[Partition]:
    """Singular components by removing the hook at each interior boundary corner.

    An interior corner is a cell (r, c) of lam with (r, c+1) and (r+1, c) in
    lam but (r+1, c+1) not in lam. The hook of that cell is its arm to the
    right and its leg downward. Corners are listed top to bottom.
    """
    cells = lam.cells()
    corners = sorted(
        (r, c)
        for r, c in cells
        if (r, c + 1) in cells and (r + 1, c) in cells and (r + 1, c + 1) not in cells
    )
    out = []
    for r, c in corners:
        hook = {(r, j) for j in range(c, lam.part(r))} | {
            (i, c) for i in range(r + 1, len(lam)) if lam.part(i) > c
        }
        rest = cells - hook
        out.append(Partition(tuple(sum(1 for rr, _ in rest if rr == i) for i in range(len(lam)))))
    return out


def brute_ideal_counts(poset: CellPoset) -> list[int]:
    n = len(poset)
    counts = [0] * (n + 1)
    for mask in range(1 << n):
        if all(not (mask >> y & 1) or (mask >> x & 1) for x, y in poset.covers):
            counts[bin(mask).count("1")] += 1
    return counts


def normalized(cells) -> frozenset:
    cells = list(cells)
    if not cells:
        return frozenset()
    r0, c0 = min(r for r, _ in cells), min(c for _, c in cells)
    return frozenset((r - r0, c - c0) for r, c in cells)


def partitions_in(rows: int, cols: int) -> list[tuple[int, ...]]:
    out = []
    for parts in itertools.product(range(cols + 1), repeat=rows):
        if all(parts[i] >= parts[i + 1] for i in range(rows - 1)):
            out.append(parts)
    return out


def generated_skew_sets(rows: int, cols: int, max_cells: int) -> set[frozenset]:
    """Normalized cell sets of every nu / lam with lam <= nu inside a rows x cols box."""
    shapes = set()
    boxes = partitions_in(rows, cols)
    for nu in boxes:
        for lam in boxes:
            if all(a <= b for a, b in zip(lam, nu)):
                cells = {(i, j) for i in range(rows) for j in range(lam[i], nu[i])}
                if len(cells) <= max_cells:
                    shapes.add(normalized(cells))
    return shapes


def edge_connected(cells) -> bool:
    cells = set(cells)
    if not cells:
        return True
    start = next(iter(cells))
    seen, stack = {start}, [start]
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def q_binomial_by_counting(a: int, b: int) -> list[int]:
    """Coefficients of [a+b choose b]_q by counting lattice paths' areas."""
    counts = Counter()
    for ups in itertools.combinations(range(a + b), b):
        # Area above a path of a right steps and b up steps, counted as inversions.
        steps = [1 if i in ups else 0 for i in range(a + b)]
        inversions = sum(1 for i in range(a + b) for j in range(i + 1, a + b) if steps[i] > steps[j])
        counts[inversions] += 1
    return [counts[i] for i in range(a * b + 1)]
