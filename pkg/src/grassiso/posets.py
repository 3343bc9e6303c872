"""The cell poset of a skew diagram and semi-isomorphism.

``build_poset`` orders the cells of a skew shape by the covering relations
"x is immediately left of y" and "x is immediately above y".
``semi_isomorphic`` is the production decider; it compares canonical
component classes under transposition and 180-degree rotation. The generic
backtracking search (``iter_isomorphisms``) and ``semi_isomorphic_by_search``
decide the same question from the poset definition alone and serve as the
independent check.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable, Iterator, Sequence

from .errors import DomainError, ResourceBoundError
from .skew import SkewShape, connected_components_diag, rotate180, transpose_skew

__all__ = [
    "CellPoset",
    "DEFAULT_IDEAL_BOUND",
    "DEFAULT_ISO_BOUND",
    "InvariantSignature",
    "automorphism_count",
    "build_poset",
    "canonical_skew_class",
    "component_classes",
    "find_isomorphisms",
    "is_connected_poset",
    "is_isomorphic",
    "iter_isomorphisms",
    "match_components",
    "opposite",
    "order_ideal_counts",
    "semi_isomorphic",
    "semi_isomorphic_by_search",
]

DEFAULT_ISO_BOUND = 24
DEFAULT_IDEAL_BOUND = 20


@dataclass(frozen=True)
class CellPoset:
    """Finite poset given by its Hasse diagram.

    ``covers`` holds index pairs ``(x, y)`` meaning ``elements[x]`` is covered
    by ``elements[y]``.
    """

    elements: tuple[Hashable, ...]
    covers: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.elements)

    def up(self) -> list[list[int]]:
        ups: list[list[int]] = [[] for _ in self.elements]
        for x, y in self.covers:
            ups[x].append(y)
        return ups

    def down(self) -> list[list[int]]:
        downs: list[list[int]] = [[] for _ in self.elements]
        for x, y in self.covers:
            downs[y].append(x)
        return downs

    def ranks(self) -> list[int]:
        """Length of the longest chain from a minimal element to each element."""
        downs = self.down()
        rank: list[int | None] = [None] * len(self.elements)

        def visit(x: int) -> int:
            if rank[x] is None:
                rank[x] = 1 + max((visit(y) for y in downs[x]), default=-1)
            return rank[x]

        return [visit(x) for x in range(len(self.elements))]

    def component_indices(self) -> list[list[int]]:
        neighbors = [set() for _ in self.elements]
        for x, y in self.covers:
            neighbors[x].add(y)
            neighbors[y].add(x)
        seen: set[int] = set()
        components = []
        for start in range(len(self.elements)):
            if start in seen:
                continue
            seen.add(start)
            queue, members = deque([start]), [start]
            while queue:
                x = queue.popleft()
                for y in neighbors[x]:
                    if y not in seen:
                        seen.add(y)
                        members.append(y)
                        queue.append(y)
            components.append(sorted(members))
        return components

    def induced(self, indices: Sequence[int]) -> CellPoset:
        # Valid for connected components, where the Hasse diagram restricts.
        position = {x: i for i, x in enumerate(indices)}
        return CellPoset(
            tuple(self.elements[x] for x in indices),
            frozenset(
                (position[x], position[y])
                for x, y in self.covers
                if x in position and y in position
            ),
        )

    def components(self) -> list[CellPoset]:
        return [self.induced(idx) for idx in self.component_indices()]

    def to_json(self) -> dict:
        return {
            "elements": [list(e) if isinstance(e, tuple) else e for e in self.elements],
            "covers": sorted([x, y] for x, y in self.covers),
        }

    def to_dot(self, name: str = "P") -> str:
        def label(e: Hashable) -> str:
            return ",".join(map(str, e)) if isinstance(e, tuple) else str(e)

        lines = [f"digraph {name} {{", "  rankdir=TB;"]
        for i, e in enumerate(self.elements):
            lines.append(f'  n{i} [label="{label(e)}"];')
        for x, y in sorted(self.covers):
            lines.append(f"  n{x} -> n{y};")
        lines.append("}")
        return "\n".join(lines)


def build_poset(theta: SkewShape) -> CellPoset:
    elements = tuple(sorted(theta.cells))
    index = {cell: i for i, cell in enumerate(elements)}
    covers = set()
    for (r, c), i in index.items():
        for neighbor in ((r, c + 1), (r + 1, c)):
            j = index.get(neighbor)
            if j is not None:
                covers.add((i, j))
    return CellPoset(elements, frozenset(covers))


def opposite(poset: CellPoset) -> CellPoset:
    return CellPoset(poset.elements, frozenset((y, x) for x, y in poset.covers))


def is_connected_poset(poset: CellPoset) -> bool:
    return len(poset.component_indices()) <= 1


def _profile(poset: CellPoset) -> list[tuple[int, int, int]]:
    ups, downs, ranks = poset.up(), poset.down(), poset.ranks()
    return [(ranks[x], len(ups[x]), len(downs[x])) for x in range(len(poset))]


def iter_isomorphisms(
    p: CellPoset, q: CellPoset, *, bound: int = DEFAULT_ISO_BOUND
) -> Iterator[dict[int, int]]:
    """Yield every order isomorphism ``p -> q`` as an index map.

    Order isomorphisms are exactly the bijections that carry covers onto
    covers, so the search matches Hasse diagrams. Elements are assigned in
    order of (rank, up-degree, down-degree), and only to targets with the
    same triple.
    """
    n = len(p)
    if n > bound or len(q) > bound:
        raise ResourceBoundError(f"isomorphism search limited to {bound} elements, got {max(n, len(q))}")
    if n != len(q) or len(p.covers) != len(q.covers):
        return
    p_profile, q_profile = _profile(p), _profile(q)
    if Counter(p_profile) != Counter(q_profile):
        return
    order = sorted(range(n), key=lambda x: (p_profile[x], x))
    targets: dict[tuple[int, int, int], list[int]] = {}
    for y in range(n):
        targets.setdefault(q_profile[y], []).append(y)
    p_up, p_down = p.up(), p.down()
    q_covers = q.covers
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent(x: int, y: int) -> bool:
        for z in p_up[x]:
            if z in mapping and (y, mapping[z]) not in q_covers:
                return False
        for z in p_down[x]:
            if z in mapping and (mapping[z], y) not in q_covers:
                return False
        return True

    def extend(depth: int) -> Iterator[dict[int, int]]:
        if depth == n:
            yield dict(mapping)
            return
        x = order[depth]
        for y in targets[p_profile[x]]:
            if y in used or not consistent(x, y):
                continue
            mapping[x] = y
            used.add(y)
            yield from extend(depth + 1)
            del mapping[x]
            used.discard(y)

    # Equal cover counts plus cover-preservation make the map a Hasse isomorphism.
    yield from extend(0)


def find_isomorphisms(
    p: CellPoset, q: CellPoset, *, bound: int = DEFAULT_ISO_BOUND
) -> list[dict[int, int]]:
    return list(iter_isomorphisms(p, q, bound=bound))


def is_isomorphic(p: CellPoset, q: CellPoset, *, bound: int = DEFAULT_ISO_BOUND) -> bool:
    return next(iter_isomorphisms(p, q, bound=bound), None) is not None


def automorphism_count(poset: CellPoset, *, bound: int = DEFAULT_ISO_BOUND) -> int:
    return sum(1 for _ in iter_isomorphisms(poset, poset, bound=bound))


def canonical_skew_class(theta: SkewShape) -> SkewShape:
    """Least member of the orbit {theta, theta^T, rot(theta), rot(theta)^T}."""
    if len(connected_components_diag(theta)) > 1:
        raise DomainError("canonical_skew_class needs a connected shape")
    rotated = rotate180(theta)
    orbit = (theta, transpose_skew(theta), rotated, transpose_skew(rotated))
    return min(orbit, key=SkewShape.sort_key)


@lru_cache(maxsize=1 << 16)
def component_classes(theta: SkewShape) -> tuple[SkewShape, ...]:
    """Sorted canonical classes of the connected components of ``theta``."""
    return tuple(
        sorted(
            (canonical_skew_class(c) for c in connected_components_diag(theta)),
            key=SkewShape.sort_key,
        )
    )


def semi_isomorphic(theta: SkewShape, other: SkewShape) -> bool:
    """Whether the cell posets are semi-isomorphic.

    Connected skew posets are isomorphic exactly when the shapes agree up to
    transposition, and rotating by 180 degrees realizes the opposite poset,
    so comparing canonical component classes as multisets decides the
    question.
    """
    if len(theta) != len(other):
        return False
    return component_classes(theta) == component_classes(other)


def _max_matching(compatible: list[list[int]], right_size: int) -> int:
    match_right: list[int | None] = [None] * right_size

    def augment(left: int, seen: set[int]) -> bool:
        for right in compatible[left]:
            if right in seen:
                continue
            seen.add(right)
            if match_right[right] is None or augment(match_right[right], seen):
                match_right[right] = left
                return True
        return False

    return sum(1 for left in range(len(compatible)) if augment(left, set()))


def semi_isomorphic_by_search(
    p: CellPoset, q: CellPoset, *, bound: int = DEFAULT_ISO_BOUND, cache: dict | None = None
) -> bool:
    """Semi-isomorphism straight from the definition.

    Components are compared by backtracking isomorphism search against both
    the component and its opposite, then paired by maximum bipartite
    matching. ``cache`` is an optional dict reused across calls to remember
    component compatibility verdicts.
    """
    if len(p) != len(q):
        return False
    return match_components(p.components(), q.components(), bound=bound, cache=cache)


def match_components(
    left: Sequence[CellPoset],
    right: Sequence[CellPoset],
    *,
    bound: int = DEFAULT_ISO_BOUND,
    cache: dict | None = None,
) -> bool:
    """Whether some bijection pairs each left component with an isomorphic or opposite right one."""
    if len(left) != len(right):
        return False

    def compatible(a: CellPoset, b: CellPoset) -> bool:
        key = (len(a), a.covers, len(b), b.covers)
        if cache is not None and key in cache:
            return cache[key]
        verdict = is_isomorphic(a, b, bound=bound) or is_isomorphic(opposite(a), b, bound=bound)
        if cache is not None:
            cache[key] = verdict
        return verdict

    edges = [[j for j, b in enumerate(right) if len(a) == len(b) and compatible(a, b)] for a in left]
    return _max_matching(edges, len(right)) == len(left)


def order_ideal_counts(poset: CellPoset, *, bound: int = DEFAULT_IDEAL_BOUND) -> list[int]:
    """Number of down-closed subsets of each size.

    Elements are decided along a linear extension. The state is the set of
    included elements that still have an undecided upper cover; excluded
    elements never need remembering because an element whose lower cover was
    excluded can only be excluded.
    """
    n = len(poset)
    if n > bound:
        raise ResourceBoundError(f"order ideal counting limited to {bound} elements, got {n}")
    ranks = poset.ranks()
    order = sorted(range(n), key=lambda x: (ranks[x], x))
    position = {x: i for i, x in enumerate(order)}
    ups, downs = poset.up(), poset.down()
    last_needed = [max((position[y] for y in ups[x]), default=-1) for x in range(n)]

    states: dict[frozenset[int], list[int]] = {frozenset(): [1]}
    for step, x in enumerate(order):
        next_states: dict[frozenset[int], list[int]] = {}

        def add(state: frozenset[int], poly: list[int], shift: int) -> None:
            target = next_states.setdefault(state, [0] * (step + 2))
            for size, count in enumerate(poly):
                target[size + shift] += count

        for state, poly in states.items():
            keep = frozenset(z for z in state if last_needed[z] > step)
            add(keep, poly, 0)
            if all(z in state for z in downs[x]):
                grown = keep | {x} if last_needed[x] > step else keep
                add(grown, poly, 1)
        states = next_states

    total = [0] * (n + 1)
    for poly in states.values():
        for size, count in enumerate(poly):
            total[size] += count
    return total


@dataclass(frozen=True)
class InvariantSignature:
    """Computable semi-isomorphism invariants of a skew shape.

    ``component_profiles`` records, per component, its cell count and its
    bounding box as an unordered pair. ``order_ideal_counts`` multiplies the
    per-component ideal polynomials after orienting each one so that it is
    lexicographically least among itself and its reversal (passing to the
    opposite poset reverses the polynomial). ``xi_profile`` lists the longest
    hook of each component, counting hooks in both orientations.
    """

    cell_count: int
    component_profiles: tuple[tuple[int, tuple[int, int]], ...]
    order_ideal_counts: tuple[int, ...]
    xi_profile: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "cellCount": self.cell_count,
            "componentShapes": [[size, list(box)] for size, box in self.component_profiles],
            "orderIdealCounts": list(self.order_ideal_counts),
            "xiProfile": list(self.xi_profile),
        }
