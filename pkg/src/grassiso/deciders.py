"""Isomorphism deciders for Schubert and Richardson varieties.

Schubert varieties in Grassmannians are isomorphic exactly when their
partitions agree up to transposition. For Richardson varieties only one
direction is known: semi-isomorphic cell posets give isomorphic varieties.
The converse is open, so ``richardson_isomorphic_sufficient`` never reports
a non-isomorphism.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache

from .partitions import Partition, rect_decomposition, subdiagram_counts, transpose, xi
from .posets import (
    DEFAULT_IDEAL_BOUND,
    InvariantSignature,
    build_poset,
    component_classes,
    order_ideal_counts,
    semi_isomorphic,
)
from .singular import lambda_zero, sing_components
from .skew import SkewShape, connected_components_diag

__all__ = [
    "RichardsonVerdict",
    "SchubertReport",
    "Verdict",
    "invariant_signature",
    "richardson_isomorphic_sufficient",
    "schubert_distinguishing_invariants",
    "schubert_isomorphic",
    "skew_xi",
]

CONJECTURE_NOTE = (
    "not semi-isomorphic; the varieties are conjectured, not proven, to be "
    "non-isomorphic (open converse: isomorphic Richardson varieties should "
    "have semi-isomorphic skew posets)"
)


def schubert_isomorphic(lam: Partition, mu: Partition) -> bool:
    return lam == mu or transpose(lam) == mu


@dataclass(frozen=True)
class SchubertReport:
    """Outcome of ``schubert_distinguishing_invariants``.

    ``rung`` is 0 for isomorphic pairs, 1-6 for the invariant that separated
    the pair, and 7 when no invariant in the ladder did.
    """

    isomorphic: bool
    rung: int
    reason: str
    trace: tuple[str, ...] = ()
    via: str | None = None
    size_index: int | None = None

    def to_json(self) -> dict:
        return {
            "isomorphic": self.isomorphic,
            "via": self.via,
            "rung": self.rung,
            "reason": self.reason,
            "sizeIndex": self.size_index,
            "trace": list(self.trace),
        }


def _r(lam: Partition) -> int:
    return rect_decomposition(lam).r


def _xi0(lam: Partition) -> int:
    return xi(lam) if lam else 0


def _extremes(lam: Partition) -> tuple[Partition, Partition]:
    components = sing_components(lam)
    return components[0], components[-1]


@lru_cache(maxsize=4096)
def _witness(lam: Partition, mu: Partition, depth: int) -> SchubertReport:
    if lam == mu:
        return SchubertReport(True, 0, "identical partitions", via="equal")
    if transpose(lam) == mu:
        return SchubertReport(True, 0, "partitions are transposes of each other", via="transpose")

    if lam.size != mu.size:
        return SchubertReport(False, 1, f"dimensions differ: |lam| = {lam.size}, |mu| = {mu.size}")

    counts_l, counts_m = subdiagram_counts(lam), subdiagram_counts(mu)
    for i, (x, y) in enumerate(zip(counts_l, counts_m)):
        if x != y:
            return SchubertReport(
                False, 2, f"{x} vs {y} subdiagrams of size {i} (Chow group ranks differ)", size_index=i
            )

    r_l, r_m = _r(lam), _r(mu)
    if r_l != r_m:
        return SchubertReport(False, 3, f"rectangle counts differ: r = {r_l} vs {r_m}")
    if r_l < 2:
        return SchubertReport(False, 7, "smooth pair not separated by the invariant ladder")

    zero_l, zero_m = lambda_zero(lam), lambda_zero(mu)
    if _r(zero_l) != _r(zero_m):
        return SchubertReport(
            False, 4, f"lambda^0 rectangle counts differ: r0 = {_r(zero_l)} vs {_r(zero_m)}"
        )

    first_l, last_l = _extremes(lam)
    first_m, last_m = _extremes(mu)
    xi_l = sorted((_xi0(first_l), _xi0(last_l)))
    xi_m = sorted((_xi0(first_m), _xi0(last_m)))
    if xi_l != xi_m:
        return SchubertReport(False, 5, f"xi of extreme singular components differ: {xi_l} vs {xi_m}")

    if depth > 0:
        sub = _witness(zero_l, zero_m, depth - 1)
        if not sub.isomorphic and sub.rung < 7:
            return SchubertReport(
                False, 6, f"lambda^0 = {zero_l} and mu^0 = {zero_m} are separated",
                trace=(f"lambda^0 vs mu^0: {sub.reason}", *sub.trace),
            )
        # Extreme components must match in some order.
        pairings = [((first_l, first_m), (last_l, last_m)), ((first_l, last_m), (last_l, first_m))]
        blocked = []
        for pairing in pairings:
            for a, b in pairing:
                sub = _witness(a, b, depth - 1)
                if not sub.isomorphic and sub.rung < 7:
                    blocked.append(f"{a} vs {b}: {sub.reason}")
                    break
            else:
                blocked = None
                break
        if blocked:
            return SchubertReport(
                False, 6, "extreme singular components cannot be matched in either order",
                trace=tuple(blocked),
            )

    return SchubertReport(False, 7, "no witness found by this signature")


def schubert_distinguishing_invariants(lam: Partition, mu: Partition) -> SchubertReport:
    """Walk the invariant ladder and report the first invariant separating the pair.

    Order: size, subdiagram counts by size, rectangle count, rectangle count
    of the common singular intersection, hook lengths of the two extreme
    singular components, then recursion into those smaller partitions.
    """
    return _witness(lam, mu, max(lam.size, mu.size))


class Verdict(enum.Enum):
    ISOMORPHIC = "ISOMORPHIC"
    UNKNOWN_CONJECTURED_NOT = "UNKNOWN_CONJECTURED_NOT"


@dataclass(frozen=True)
class RichardsonVerdict:
    verdict: Verdict
    unmatched_left: tuple[SkewShape, ...] = ()
    unmatched_right: tuple[SkewShape, ...] = ()
    note: str = field(default="")

    @property
    def isomorphic(self) -> bool:
        return self.verdict is Verdict.ISOMORPHIC

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "unmatchedLeft": [str(s) for s in self.unmatched_left],
            "unmatchedRight": [str(s) for s in self.unmatched_right],
            "note": self.note,
        }


def richardson_isomorphic_sufficient(theta: SkewShape, other: SkewShape) -> RichardsonVerdict:
    if semi_isomorphic(theta, other):
        return RichardsonVerdict(Verdict.ISOMORPHIC, note="cell posets are semi-isomorphic")
    left, right = component_classes(theta), component_classes(other)
    remaining = list(right)
    unmatched_left = []
    for cls in left:
        if cls in remaining:
            remaining.remove(cls)
        else:
            unmatched_left.append(cls)
    return RichardsonVerdict(
        Verdict.UNKNOWN_CONJECTURED_NOT,
        tuple(unmatched_left),
        tuple(remaining),
        note=CONJECTURE_NOTE,
    )


def skew_xi(theta: SkewShape) -> int:
    """Longest hook in a skew shape, counting hooks opening right-down and left-up."""
    cells = theta.cells
    best = 0
    for r, c in cells:
        for dr, dc in ((1, 1), (-1, -1)):
            arm = 0
            while (r, c + dc * (arm + 1)) in cells:
                arm += 1
            leg = 0
            while (r + dr * (leg + 1), c) in cells:
                leg += 1
            best = max(best, arm + leg + 1)
    return best


def _oriented(counts: list[int]) -> list[int]:
    return min(counts, counts[::-1])


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def invariant_signature(theta: SkewShape, *, bound: int = DEFAULT_IDEAL_BOUND) -> InvariantSignature:
    components = connected_components_diag(theta)
    ideals = [1]
    for component in components:
        ideals = _poly_mul(ideals, _oriented(order_ideal_counts(build_poset(component), bound=bound)))
    return InvariantSignature(
        cell_count=len(theta),
        component_profiles=tuple(
            sorted((len(c), tuple(sorted((c.height, c.width)))) for c in components)
        ),
        order_ideal_counts=tuple(ideals),
        xi_profile=tuple(sorted(skew_xi(c) for c in components)),
    )
