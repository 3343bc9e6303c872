"""Partitions (Young diagrams) and the arithmetic on them.

Partitions are stored canonically: a tuple of weakly decreasing positive
integers with no trailing zeros. Constructors strip trailing zeros, so
expressions such as ``(a-1)^(b+1)`` with ``a == 1`` collapse cleanly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError, ParseError

__all__ = [
    "BoxFrame",
    "Partition",
    "RectangleDecomposition",
    "contains",
    "dual_in_box",
    "intersect",
    "parse_partition",
    "rect_decomposition",
    "subdiagram_counts",
    "transpose",
    "union_",
    "xi",
]


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = [int(p) for p in self.parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p < 0:
                raise DomainError(f"negative part {p} at position {i + 1}")
            if p == 0:
                raise DomainError(f"zero part at position {i + 1} followed by nonzero parts")
            if i and p > parts[i - 1]:
                raise DomainError(
                    f"parts must be weakly decreasing: {parts[i - 1]} < {p} at position {i + 1}"
                )
        object.__setattr__(self, "parts", tuple(parts))

    @classmethod
    def from_blocks(cls, blocks: Iterable[tuple[int, int]]) -> Partition:
        """Expand ``(a1^b1, a2^b2, ...)``; zero widths and zero exponents are allowed."""
        parts: list[int] = []
        for width, height in blocks:
            if height < 0:
                raise DomainError(f"negative exponent {height}")
            parts.extend([width] * height)
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def part(self, i: int) -> int:
        """The ``i``-th part (0-based), reading missing parts as 0."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def cells(self) -> frozenset[tuple[int, int]]:
        return frozenset((i, j) for i, p in enumerate(self.parts) for j in range(p))

    def transpose(self) -> Partition:
        return transpose(self)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "0"


@dataclass(frozen=True)
class RectangleDecomposition:
    """Blocks ``(a_i, b_i)``: ``b_i`` rows of length ``a_i``, with a_1 > ... > a_r > 0."""

    blocks: tuple[tuple[int, int], ...]

    @property
    def r(self) -> int:
        return len(self.blocks)

    @property
    def widths(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.blocks)

    @property
    def heights(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.blocks)

    def expand(self) -> Partition:
        return Partition.from_blocks(self.blocks)

    def __str__(self) -> str:
        if not self.blocks:
            return "()"
        return "(" + ", ".join(f"{a}^{b}" for a, b in self.blocks) + ")"


@dataclass(frozen=True)
class BoxFrame:
    """The ambient rectangle with ``m`` rows and ``k = n - m`` columns."""

    m: int
    k: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.k < 0:
            raise DomainError(f"box dimensions must be nonnegative, got {self.m}x{self.k}")

    @property
    def n(self) -> int:
        return self.m + self.k

    def fits(self, lam: Partition) -> bool:
        return len(lam) <= self.m and lam.part(0) <= self.k

    @classmethod
    def parse(cls, text: str) -> BoxFrame:
        match = re.fullmatch(r"\s*(\d+)\s*[xX]\s*(\d+)\s*", text)
        if not match:
            raise ParseError(f"box must look like MxK, got {text!r}")
        return cls(int(match.group(1)), int(match.group(2)))

    def __str__(self) -> str:
        return f"{self.m}x{self.k}"


_TOKEN = re.compile(r"(\d+)(?:\^(\d+))?")


def parse_partition(text: str) -> Partition:
    """Read ``"4,4,3,3,1"`` or ``"4^2,3^2,1"``; whitespace is ignored.

    The empty string and ``"0"`` both denote the empty partition.
    """
    stripped = re.sub(r"\s+", "", text)
    if stripped in ("", "∅"):
        return Partition()
    parts: list[int] = []
    for pos, token in enumerate(stripped.split(","), start=1):
        match = _TOKEN.fullmatch(token)
        if match is None:
            raise ParseError(f"malformed token {token!r} at position {pos}")
        value = int(match.group(1))
        reps = int(match.group(2)) if match.group(2) is not None else 1
        if parts and value > parts[-1]:
            raise ParseError(
                f"parts must be weakly decreasing: {value} at position {pos} exceeds {parts[-1]}"
            )
        parts.extend([value] * reps)
    while parts and parts[-1] == 0:
        parts.pop()
    if 0 in parts:
        raise ParseError(f"zero part before a nonzero part in {text!r}")
    return Partition(tuple(parts))


def transpose(lam: Partition) -> Partition:
    if not lam:
        return lam
    return Partition(tuple(sum(1 for p in lam.parts if p >= i) for i in range(1, lam.parts[0] + 1)))


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(q <= p for p, q in zip(outer.parts, inner.parts))


def intersect(lam: Partition, mu: Partition) -> Partition:
    return Partition(tuple(min(p, q) for p, q in zip(lam.parts, mu.parts)))


def union_(lam: Partition, mu: Partition) -> Partition:
    n = max(len(lam), len(mu))
    return Partition(tuple(max(lam.part(i), mu.part(i)) for i in range(n)))


def rect_decomposition(lam: Partition) -> RectangleDecomposition:
    blocks: list[tuple[int, int]] = []
    for p in lam.parts:
        if blocks and blocks[-1][0] == p:
            blocks[-1] = (p, blocks[-1][1] + 1)
        else:
            blocks.append((p, 1))
    return RectangleDecomposition(tuple(blocks))


def dual_in_box(lam: Partition, box: BoxFrame) -> Partition:
    if not box.fits(lam):
        raise DomainError(f"{lam} does not fit in the {box} box")
    return Partition(tuple(box.k - lam.part(i) for i in reversed(range(box.m))))


def xi(lam: Partition) -> int:
    """Size of the longest hook in ``lam``: the hook of the corner cell (1, 1)."""
    if not lam:
        raise DomainError("the empty partition contains no hook")
    decomposition = rect_decomposition(lam)
    return decomposition.widths[0] + sum(decomposition.heights) - 1


def subdiagram_counts(lam: Partition) -> list[int]:
    """Number of subdiagrams of ``lam`` of each size ``0..|lam|``.

    Row-by-row dynamic program: the generating polynomial for rows
    ``i, i+1, ...`` depends only on ``i`` and the bound imposed by row ``i-1``.
    """
    parts = lam.parts

    @lru_cache(maxsize=None)
    def rows_from(i: int, bound: int) -> tuple[int, ...]:
        if i == len(parts) or bound == 0:
            return (1,)
        top = min(bound, parts[i])
        total = [0] * (1 + sum(min(top, p) for p in parts[i:]))
        for c in range(top + 1):
            for size, count in enumerate(rows_from(i + 1, c)):
                total[c + size] += count
        return tuple(total)

    return list(rows_from(0, parts[0] if parts else 0))
