"""Partitions of a number with prescribed sides.

A partition of h of sides (l1, l2) is a weakly decreasing tuple of exactly
l2 naturals, each at most l1, summing to h. The bidegree (a, b) of the
bigraded ring always corresponds to sides (a + 1, b + 1).
"""
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterator, List, Sequence, Tuple

from core.errors import PartitionError

Sides = Tuple[int, int]

_TEXT_FORM = re.compile(r"^\s*\(([\d,\s]*)\)\s*@\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")


@dataclass(frozen=True)
class SidedPartition:
    """A weakly decreasing tuple with declared sides (l1, l2)."""

    sides: Sides
    entries: Tuple[int, ...]

    def __post_init__(self):
        sides = tuple(int(s) for s in self.sides)
        entries = tuple(int(p) for p in self.entries)
        object.__setattr__(self, "sides", sides)
        object.__setattr__(self, "entries", entries)

        if len(sides) != 2 or min(sides) < 0:
            raise PartitionError(f"sides must be a pair of naturals, got {self.sides}")
        l1, l2 = sides
        if len(entries) != l2:
            raise PartitionError(f"sides {sides} require {l2} entries, got {len(entries)}")
        if any(p < 0 for p in entries):
            raise PartitionError(f"entries must be natural numbers: {entries}")
        if entries and entries[0] > l1:
            raise PartitionError(f"entry {entries[0]} exceeds side {l1}")
        for left, right in zip(entries, entries[1:]):
            if left < right:
                raise PartitionError(f"entries are not weakly decreasing: {entries}")

    @classmethod
    def make(cls, sides: Sides, entries: Sequence[int]) -> "SidedPartition":
        """Validate and build a partition."""
        return cls(tuple(sides), tuple(entries))

    @classmethod
    def zero(cls, sides: Sides) -> "SidedPartition":
        return cls(tuple(sides), (0,) * sides[1])

    @classmethod
    def full(cls, sides: Sides) -> "SidedPartition":
        """The unique partition filling the whole l1 x l2 box."""
        return cls(tuple(sides), (sides[0],) * sides[1])

    @classmethod
    def parse(cls, text: str) -> "SidedPartition":
        """Read the ``(3,3,1,1)@(3,4)`` text form."""
        match = _TEXT_FORM.match(text)
        if not match:
            raise PartitionError(f"cannot parse partition {text!r}")
        body = match.group(1).strip()
        entries = tuple(int(p) for p in body.split(",") if p.strip()) if body else ()
        return cls((int(match.group(2)), int(match.group(3))), entries)

    @property
    def weight(self) -> int:
        return sum(self.entries)

    def size(self) -> Tuple[int, int]:
        """Return (lambda1, lambda2): entries equal to l1, and the last entry."""
        l1, l2 = self.sides
        if l2 == 0:
            raise PartitionError("a partition with no entries has no size")
        return sum(1 for p in self.entries if p == l1), self.entries[-1]

    def _check_same_sides(self, other: "SidedPartition") -> None:
        if self.sides != other.sides:
            raise PartitionError(f"sides differ: {self.sides} vs {other.sides}")

    def meet(self, other: "SidedPartition") -> "SidedPartition":
        """Componentwise minimum."""
        self._check_same_sides(other)
        return SidedPartition(self.sides, tuple(map(min, self.entries, other.entries)))

    def leq(self, other: "SidedPartition") -> bool:
        """True iff every entry is at most the corresponding entry of other."""
        self._check_same_sides(other)
        return all(p <= q for p, q in zip(self.entries, other.entries))

    def __le__(self, other: "SidedPartition") -> bool:
        return self.leq(other)

    def lift_row(self) -> "SidedPartition":
        """Sides (l1 + 1, l2); every entry equal to l1 grows by one."""
        l1, l2 = self.sides
        lifted = tuple(p + 1 if p == l1 else p for p in self.entries)
        return SidedPartition((l1 + 1, l2), lifted)

    def lift_col(self) -> "SidedPartition":
        """Sides (l1, l2 + 1); the last entry is repeated."""
        l1, l2 = self.sides
        if l2 == 0:
            raise PartitionError("cannot lift a partition with no entries along columns")
        return SidedPartition((l1, l2 + 1), self.entries + (self.entries[-1],))

    def diagram(self) -> str:
        """Ferrers diagram: row i is the x1 exponent, column j the y1 exponent."""
        l1, l2 = self.sides
        width = len(str(max(l2 - 1, 0)))
        header = "  | " + " ".join(str(j).rjust(width) for j in range(l2))
        lines = [header, "-" * len(header)]
        for i in range(l1):
            marks = ["*" if i < p else "." for p in self.entries]
            lines.append(f"{i} | " + " ".join(m.rjust(width) for m in marks))
        return "\n".join(lines)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.entries))})@({self.sides[0]},{self.sides[1]})"


@lru_cache(maxsize=4096)
def _descending_tuples(h: int, length: int, ceiling: int) -> Tuple[Tuple[int, ...], ...]:
    if length == 0:
        return ((),) if h == 0 else ()
    if h > ceiling * length:
        return ()
    found = []
    for first in range(min(ceiling, h), -1, -1):
        rest = h - first
        if rest > first * (length - 1):
            break
        for tail in _descending_tuples(rest, length - 1, first):
            found.append((first,) + tail)
    return tuple(found)


def enumerate_partitions(h: int, sides: Sides) -> List[SidedPartition]:
    """All partitions of h of the given sides, in descending lexicographic order."""
    l1, l2 = sides
    if h < 0:
        return []
    return [SidedPartition((l1, l2), t) for t in _descending_tuples(h, l2, l1)]


def enumerate_sizes(h: int, sides: Sides) -> FrozenSet[Tuple[int, int]]:
    return frozenset(alpha.size() for alpha in enumerate_partitions(h, sides))


def _maximal_pairs(pairs) -> FrozenSet[Tuple[int, int]]:
    pairs = set(pairs)
    return frozenset(
        p for p in pairs
        if not any(q != p and q[0] >= p[0] and q[1] >= p[1] for q in pairs)
    )


def maximal_sizes(h: int, sides: Sides) -> FrozenSet[Tuple[int, int]]:
    """Maximal elements of the size set under the componentwise order."""
    return _maximal_pairs(enumerate_sizes(h, sides))


def _bounded(h: int, caps: Tuple[int, ...], ceiling: int) -> Iterator[Tuple[int, ...]]:
    if not caps:
        if h == 0:
            yield ()
        return
    room = 0
    previous = ceiling
    for cap in caps:
        previous = min(previous, cap)
        room += previous
    if h > room:
        return
    for first in range(min(caps[0], ceiling, h), -1, -1):
        rest = h - first
        if rest > first * (len(caps) - 1):
            break
        for tail in _bounded(rest, caps[1:], first):
            yield (first,) + tail


def enumerate_bounded(h: int, cap: SidedPartition) -> List[SidedPartition]:
    """Partitions of h with the sides of cap lying below cap, descending lex."""
    if h < 0 or h > cap.weight:
        return []
    return [SidedPartition(cap.sides, t) for t in _bounded(h, cap.entries, cap.sides[0])]


def maximal_bounded(h: int, cap: SidedPartition) -> List[SidedPartition]:
    """Maximal elements of enumerate_bounded(h, cap), kept in canonical order."""
    candidates = enumerate_bounded(h, cap)
    return [
        alpha for alpha in candidates
        if not any(other != alpha and alpha.leq(other) for other in candidates)
    ]
