"""Exhaustive small-size sweeps re-checking the combinatorial identities.

Every ``verify_*`` function returns a :class:`SweepReport`. The operations
under test are keyword arguments so a sweep can be pointed at a deliberately
broken implementation to confirm it notices. Sweeps split work by instance;
with ``jobs > 1`` chunks run in worker processes and the failure lists are
merged and sorted, so serial and parallel runs produce identical reports.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Callable, Iterator, Sequence

from .deciders import invariant_signature
from .errors import ResourceBoundError
from .partitions import (
    BoxFrame,
    Partition,
    intersect,
    rect_decomposition,
    subdiagram_counts,
    transpose,
    union_,
)
from .posets import (
    build_poset,
    find_isomorphisms,
    is_connected_poset,
    is_isomorphic,
    match_components,
    opposite,
    semi_isomorphic,
)
from .singular import lambda_zero, sing_components
from .skew import (
    SkewShape,
    assemble,
    connected_components_diag,
    from_partitions,
    rotate180,
    transpose_skew,
)

__all__ = [
    "DEFAULT_SKEW_BOUND",
    "SweepReport",
    "conjecture_collision_search",
    "enumerate_partitions_in_box",
    "enumerate_skew_shapes",
    "gaussian_binomial",
    "verify_betti_identities",
    "verify_lemma_conn",
    "verify_rotation_opposite",
    "verify_semi_iso_paths",
    "verify_sing_identities",
    "verify_strongskew",
]

DEFAULT_SKEW_BOUND = 12


@dataclass
class SweepReport:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "sweep": self.name,
            "checked": self.checked,
            "failures": self.failures,
            "elapsedMs": self.elapsed_ms,
        }

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: checked {self.checked}, failures {len(self.failures)}"


def _run(name: str, worker: Callable, chunks: Sequence, jobs: int) -> SweepReport:
    start = time.perf_counter()
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(worker, chunks))
    else:
        results = [worker(chunk) for chunk in chunks]
    report = SweepReport(name)
    for checked, failures in results:
        report.checked += checked
        report.failures.extend(failures)
    report.failures.sort()
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


def _chunked(items: Sequence, parts: int) -> list:
    parts = max(1, parts)
    size = max(1, -(-len(items) // parts))
    return [items[i : i + size] for i in range(0, len(items), size)] or [items]


# --- enumeration -----------------------------------------------------------


def enumerate_partitions_in_box(box: BoxFrame) -> Iterator[Partition]:
    """All partitions with at most ``m`` parts, each at most ``k``, in lexicographic order."""

    def grow(prefix: tuple[int, ...], cap: int) -> Iterator[Partition]:
        yield Partition(prefix)
        if len(prefix) < box.m:
            for value in range(1, cap + 1):
                yield from grow(prefix + (value,), value)

    yield from grow((), box.k)


def _connected_rows(n: int) -> Iterator[list[tuple[int, int]]]:
    # Rows listed bottom to top; each row above overlaps the one below and
    # neither endpoint moves left.
    def grow(rows: list[tuple[int, int]], remaining: int) -> Iterator[list[tuple[int, int]]]:
        if remaining == 0:
            yield rows
            return
        low_left, low_right = rows[-1]
        for left in range(low_left, low_right):
            for right in range(max(low_right, left + 1), left + remaining + 1):
                yield from grow(rows + [(left, right)], remaining - (right - left))

    for width in range(1, n + 1):
        yield from grow([(0, width)], n - width)


@lru_cache(maxsize=None)
def _connected_shapes(n: int) -> tuple[SkewShape, ...]:
    shapes = {}
    for rows in _connected_rows(n):
        top_down = rows[::-1]
        lam = Partition(tuple(left for left, _ in top_down))
        nu = Partition(tuple(right for _, right in top_down))
        shape = from_partitions(lam, nu)
        shapes[shape.cells] = shape
    return tuple(sorted(shapes.values(), key=SkewShape.sort_key))


@lru_cache(maxsize=None)
def _all_shapes(n: int) -> tuple[SkewShape, ...]:
    shapes = {}
    for composition in _compositions(n):
        for parts in itertools.product(*(_connected_shapes(k) for k in composition)):
            shape = assemble(parts)
            shapes[shape.cells] = shape
    return tuple(sorted(shapes.values(), key=SkewShape.sort_key))


def _compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first, *rest)


def enumerate_skew_shapes(
    n: int, connected_only: bool = False, *, bound: int = DEFAULT_SKEW_BOUND
) -> Iterator[SkewShape]:
    """Every skew shape with ``n`` cells, once each.

    Disconnected shapes are taken in packed form (consecutive components one
    empty diagonal apart), since the spacing between components does not
    change the shape's poset or its components.
    """
    if n > bound:
        raise ResourceBoundError(f"skew shape enumeration limited to {bound} cells, got {n}")
    if n == 0:
        yield SkewShape()
        return
    yield from _connected_shapes(n) if connected_only else _all_shapes(n)


def _shapes_up_to(max_cells: int, connected_only: bool = False) -> list[SkewShape]:
    if max_cells > DEFAULT_SKEW_BOUND:
        raise ResourceBoundError(f"skew shape enumeration limited to {DEFAULT_SKEW_BOUND} cells, got {max_cells}")
    return [s for n in range(1, max_cells + 1) for s in enumerate_skew_shapes(n, connected_only)]


# --- singular locus identities --------------------------------------------


def _sing_failures(lam: Partition, components_fn, zero_fn, union_min_r: int) -> list[str]:
    failures = []
    r = rect_decomposition(lam).r
    comps = components_fn(lam) if lam else []
    if len(comps) != max(r - 1, 0):
        return [f"{lam}: {len(comps)} components, expected {r - 1}"]
    if r >= 2:
        comps_t = components_fn(transpose(lam))
        for i in range(1, r):
            if comps_t[i - 1] != transpose(comps[r - i - 1]):
                failures.append(f"{lam}: (lam^T)^{i} = {comps_t[i - 1]} != (lam^{r - i})^T")
        zero = zero_fn(lam)
        meet = reduce(intersect, comps)
        if zero != meet:
            failures.append(f"{lam}: lambda^0 = {zero} but intersection of components = {meet}")
        if transpose(zero) != zero_fn(transpose(lam)):
            failures.append(f"{lam}: (lambda^0)^T != (lambda^T)^0")
    if r >= max(union_min_r, 2) and union_(comps[0], comps[-1]) != lam:
        failures.append(f"{lam}: lam^1 U lam^(r-1) = {union_(comps[0], comps[-1])}")
    return failures


def _sing_chunk(args) -> tuple[int, list[str]]:
    partitions, components_fn, zero_fn, union_min_r = args
    failures = []
    for lam in partitions:
        try:
            failures.extend(_sing_failures(lam, components_fn, zero_fn, union_min_r))
        except ValueError as exc:
            failures.append(f"{lam}: raised {exc}")
    return len(partitions), failures


def verify_sing_identities(
    box: BoxFrame,
    *,
    jobs: int = 1,
    components: Callable[[Partition], list[Partition]] = sing_components,
    zero: Callable[[Partition], Partition] = lambda_zero,
    union_min_rectangles: int = 4,
) -> SweepReport:
    """Check, for every partition in ``box``, the singular-locus identities.

    Transposition swaps components ``i`` and ``r - i``; the closed form of
    lambda^0 equals the intersection of all components and commutes with
    transposition; the first and last components together rebuild the
    partition once it has ``union_min_rectangles`` rectangles. With exactly
    three rectangles the two removed hooks share a cell, so the union misses
    it; the default threshold is therefore 4.
    """
    partitions = list(enumerate_partitions_in_box(box))
    chunks = [(c, components, zero, union_min_rectangles) for c in _chunked(partitions, jobs)]
    return _run(f"sing {box}", _sing_chunk, chunks, jobs)


# --- subdiagram counts ----------------------------------------------------


def gaussian_binomial(n: int, k: int) -> list[int]:
    """Coefficients of the q-binomial [n choose k]_q via the q-Pascal rule."""
    table: dict[tuple[int, int], list[int]] = {}

    def value(n: int, k: int) -> list[int]:
        if k < 0 or k > n:
            return [0]
        if k == 0 or k == n:
            return [1]
        if (n, k) not in table:
            left, right = value(n - 1, k - 1), value(n - 1, k)
            out = [0] * max(len(left), len(right) + k)
            for i, c in enumerate(left):
                out[i] += c
            for i, c in enumerate(right):
                out[i + k] += c
            table[n, k] = out
        return table[n, k]

    return value(n, k)


def verify_betti_identities(
    box: BoxFrame, *, counts: Callable[[Partition], list[int]] = subdiagram_counts
) -> SweepReport:
    start = time.perf_counter()
    report = SweepReport(f"betti {box}")
    for lam in enumerate_partitions_in_box(box):
        report.checked += 1
        if counts(lam) != counts(transpose(lam)):
            report.failures.append(f"{lam}: counts differ from those of its transpose")
    for a in range(box.k + 1):
        for b in range(box.m + 1):
            report.checked += 1
            got, expected = counts(Partition((a,) * b)), gaussian_binomial(a + b, b)
            if got != expected:
                report.failures.append(f"{a}^{b}: {got} != q-binomial {expected}")
    report.failures.sort()
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


# --- skew shapes and posets -----------------------------------------------


def _conn_chunk(args) -> tuple[int, list[str]]:
    shapes, components_fn, poset_fn = args
    failures = []
    for theta in shapes:
        try:
            diagonal = len(components_fn(theta)) == 1
            poset = is_connected_poset(poset_fn(theta))
        except ValueError as exc:
            failures.append(f"{theta}: raised {exc}")
            continue
        if diagonal != poset:
            failures.append(f"{theta}: diagonal-connected={diagonal}, poset-connected={poset}")
    return len(shapes), failures


def verify_lemma_conn(
    max_cells: int,
    *,
    jobs: int = 1,
    components: Callable[[SkewShape], list[SkewShape]] = connected_components_diag,
    poset: Callable = build_poset,
) -> SweepReport:
    """A skew shape has no separating diagonal iff its cell poset is connected."""
    shapes = _shapes_up_to(max_cells)
    chunks = [(c, components, poset) for c in _chunked(shapes, jobs)]
    return _run(f"conn <= {max_cells} cells", _conn_chunk, chunks, jobs)


def _strongskew_chunk(args) -> tuple[int, list[str]]:
    pairs, poset_fn, transpose_fn = args
    failures = []
    for theta, other in pairs:
        p, q = poset_fn(theta), poset_fn(other)
        isos = find_isomorphisms(p, q)
        equal = theta.cells == other.cells
        transposed = transpose_fn(theta).cells == other.cells
        if bool(isos) != (equal or transposed):
            failures.append(f"{theta} vs {other}: {len(isos)} isomorphisms, equal={equal}, transposed={transposed}")
            continue
        for iso in isos:
            images = {p.elements[x]: q.elements[y] for x, y in iso.items()}
            identity = equal and all(a == b for a, b in images.items())
            swap = transposed and all((a[1], a[0]) == b for a, b in images.items())
            if not (identity or swap):
                failures.append(f"{theta} vs {other}: isomorphism is neither identity nor transpose")
        if equal:
            # For a single box the transposition map is the identity.
            expected = 2 if transposed and len(theta) > 1 else 1
            if len(isos) != expected:
                failures.append(f"{theta}: {len(isos)} automorphisms, expected {expected}")
    return len(pairs), failures


def verify_strongskew(
    max_cells: int,
    *,
    jobs: int = 1,
    poset: Callable = build_poset,
    transpose: Callable[[SkewShape], SkewShape] = transpose_skew,
) -> SweepReport:
    """Isomorphisms between cell posets of connected shapes come only from equality or transposition.

    Runs over all ordered pairs of connected shapes of equal size. Each
    isomorphism found must be the identity cell map or the transposition
    cell map, and a shape has two automorphisms exactly when it is its own
    transpose.
    """
    if max_cells > DEFAULT_SKEW_BOUND:
        raise ResourceBoundError(f"skew shape enumeration limited to {DEFAULT_SKEW_BOUND} cells, got {max_cells}")
    pairs = [
        (a, b)
        for n in range(1, max_cells + 1)
        for a in enumerate_skew_shapes(n, connected_only=True)
        for b in enumerate_skew_shapes(n, connected_only=True)
    ]
    chunks = [(c, poset, transpose) for c in _chunked(pairs, max(jobs, 1) * 4 if jobs > 1 else 1)]
    return _run(f"strongskew <= {max_cells} cells", _strongskew_chunk, chunks, jobs)


def _rotation_chunk(args) -> tuple[int, list[str]]:
    shapes, rotate_fn, transpose_fn, poset_fn = args
    failures = []
    for theta in shapes:
        try:
            p = poset_fn(theta)
            if not is_isomorphic(poset_fn(rotate_fn(theta)), opposite(p)):
                failures.append(f"{theta}: P(rot180) is not isomorphic to P^op")
            if not is_isomorphic(poset_fn(transpose_fn(theta)), p):
                failures.append(f"{theta}: P(transpose) is not isomorphic to P")
        except ValueError as exc:
            failures.append(f"{theta}: raised {exc}")
    return len(shapes), failures


def verify_rotation_opposite(
    max_cells: int,
    *,
    jobs: int = 1,
    rotate: Callable[[SkewShape], SkewShape] = rotate180,
    transpose: Callable[[SkewShape], SkewShape] = transpose_skew,
    poset: Callable = build_poset,
) -> SweepReport:
    """Rotating by 180 degrees gives the opposite poset; transposing gives an isomorphic one."""
    shapes = _shapes_up_to(max_cells)
    chunks = [(c, rotate, transpose, poset) for c in _chunked(shapes, jobs)]
    return _run(f"rotation <= {max_cells} cells", _rotation_chunk, chunks, jobs)


def _semi_iso_chunk(args) -> tuple[int, list[str]]:
    rows, shapes, fast_fn = args
    components = [build_poset(s).components() for s in shapes]
    cache: dict = {}
    checked, failures = 0, []
    for i in rows:
        for j in range(i, len(shapes)):
            checked += 1
            fast = fast_fn(shapes[i], shapes[j])
            slow = len(shapes[i]) == len(shapes[j]) and match_components(
                components[i], components[j], cache=cache
            )
            if fast != slow:
                failures.append(f"{shapes[i]} vs {shapes[j]}: fast={fast}, search={slow}")
    return checked, failures


def verify_semi_iso_paths(
    max_cells: int,
    *,
    jobs: int = 1,
    fast: Callable[[SkewShape, SkewShape], bool] = semi_isomorphic,
) -> SweepReport:
    """The canonical-class decider agrees with search plus bipartite matching on all pairs."""
    shapes = _shapes_up_to(max_cells)
    rows = list(range(len(shapes)))
    # Interleave rows so chunks carry similar work.
    chunks = [(rows[k::jobs], shapes, fast) for k in range(jobs)] if jobs > 1 else [(rows, shapes, fast)]
    return _run(f"semi-iso <= {max_cells} cells", _semi_iso_chunk, chunks, jobs)


# --- conjecture exploration -----------------------------------------------


def conjecture_collision_search(max_cells: int) -> list[tuple[SkewShape, SkewShape]]:
    """Pairs of shapes that are not semi-isomorphic yet share an invariant signature.

    Purely observational: such pairs are where telling the varieties apart
    would need invariants beyond the ones computed here.
    """
    found = []
    for n in range(1, max_cells + 1):
        groups: dict = {}
        for theta in enumerate_skew_shapes(n):
            groups.setdefault(invariant_signature(theta), []).append(theta)
        for members in groups.values():
            for a, b in itertools.combinations(members, 2):
                if not semi_isomorphic(a, b):
                    found.append((a, b))
    return found
