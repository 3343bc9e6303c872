"""Combinatorics of the singular locus of a Grassmannian Schubert variety.

For ``lam = (a_1^b_1, ..., a_r^b_r)`` the singular locus has ``r - 1``
irreducible components indexed by

    lam^i = (a_1^b_1, ..., a_i^(b_i - 1), (a_{i+1} - 1)^(b_{i+1} + 1), a_{i+2}^b_{i+2}, ...)

each obtained from ``lam`` by removing one boundary hook.
"""

from __future__ import annotations

from functools import reduce

from .errors import DomainError
from .partitions import Partition, intersect, rect_decomposition

__all__ = [
    "components_intersect_properly",
    "is_smooth",
    "lambda_zero",
    "removed_hook",
    "sing_components",
]


def sing_components(lam: Partition) -> list[Partition]:
    if not lam:
        raise DomainError("the empty partition indexes a point; it has no singular locus")
    blocks = rect_decomposition(lam).blocks
    components = []
    for i in range(len(blocks) - 1):
        (a_i, b_i), (a_next, b_next) = blocks[i], blocks[i + 1]
        modified = [*blocks[:i], (a_i, b_i - 1), (a_next - 1, b_next + 1), *blocks[i + 2:]]
        components.append(Partition.from_blocks(modified))
    return components


def _component(lam: Partition, i: int) -> Partition:
    components = sing_components(lam)
    if not 1 <= i <= len(components):
        raise DomainError(f"component index {i} out of range 1..{len(components)} for {lam}")
    return components[i - 1]


def removed_hook(lam: Partition, i: int) -> frozenset[tuple[int, int]]:
    """Cells of ``lam`` that are not in the ``i``-th singular component (1-based)."""
    return lam.cells() - _component(lam, i).cells()


def components_intersect_properly(lam: Partition, i: int, j: int) -> bool:
    if i == j:
        raise DomainError("components_intersect_properly needs two distinct indices")
    return not (removed_hook(lam, i) & removed_hook(lam, j))


def lambda_zero(lam: Partition) -> Partition:
    """Partition of the intersection of all singular components, from its closed form."""
    blocks = rect_decomposition(lam).blocks
    r = len(blocks)
    if r <= 1:
        raise DomainError(f"smooth Schubert variety, lambda^0 undefined for {lam}")
    (a_1, b_1), (a_r, b_r) = blocks[0], blocks[-1]
    middle = [(a - 1, b) for a, b in blocks[1:-1]]
    return Partition.from_blocks([(a_1, b_1 - 1), *middle, (a_r - 1, b_r + 1)])


def lambda_zero_by_intersection(lam: Partition) -> Partition:
    components = sing_components(lam)
    if not components:
        raise DomainError(f"smooth Schubert variety, lambda^0 undefined for {lam}")
    return reduce(intersect, components)


def is_smooth(lam: Partition) -> bool:
    return rect_decomposition(lam).r <= 1
