"""Families of sided partitions certifying the Ferrers property of a table."""
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from core.errors import WitnessError
from core.monomials import BiDegree
from core.partitions import SidedPartition

Cell = Tuple[int, int]


@dataclass(frozen=True)
class FerrersWitness:
    """alpha_ij for every cell of a rectangle; alpha_ij has sides (i+1, j+1)."""

    bounds: BiDegree
    alpha: Tuple[Tuple[SidedPartition, ...], ...]

    def __post_init__(self):
        alpha = tuple(tuple(row) for row in self.alpha)
        object.__setattr__(self, "alpha", alpha)
        if len(alpha) != self.bounds.a + 1 or any(len(row) != self.bounds.b + 1 for row in alpha):
            raise WitnessError(f"witness grid does not cover bounds {self.bounds}")
        for i, row in enumerate(alpha):
            for j, part in enumerate(row):
                if part.sides != (i + 1, j + 1):
                    raise WitnessError(
                        f"alpha at ({i},{j}) has sides {part.sides}, expected ({i + 1},{j + 1})"
                    )

    @classmethod
    def from_cells(cls, bounds: BiDegree, cells: Dict[Cell, SidedPartition]) -> "FerrersWitness":
        try:
            grid = [[cells[(i, j)] for j in range(bounds.b + 1)] for i in range(bounds.a + 1)]
        except KeyError as exc:
            raise WitnessError(f"no partition assigned to cell {exc.args[0]}") from exc
        return cls(bounds, grid)

    @classmethod
    def from_entries(cls, grid: Sequence[Sequence[Sequence[int]]]) -> "FerrersWitness":
        """Build from nested entry lists, inferring sides from the position."""
        rows = [
            [SidedPartition((i + 1, j + 1), tuple(entries)) for j, entries in enumerate(row)]
            for i, row in enumerate(grid)
        ]
        if not rows or not rows[0]:
            raise WitnessError("empty witness grid")
        return cls(BiDegree(len(rows) - 1, len(rows[0]) - 1), rows)

    def __getitem__(self, cell: Cell) -> SidedPartition:
        i, j = cell
        return self.alpha[i][j]

    def entries(self) -> List[List[List[int]]]:
        return [[list(part.entries) for part in row] for row in self.alpha]


@dataclass(frozen=True)
class DeadEnd:
    """A cell of the search whose cap admitted no partition of the required weight."""

    cell: Cell
    cap: SidedPartition
    row_parent: Optional[SidedPartition] = None
    col_parent: Optional[SidedPartition] = None


@dataclass(frozen=True)
class FailureCertificate:
    """Why a table is not a Ferrers function on its rectangle.

    ``dead_ends`` lists, for the frontier cell, each distinct pair of parent
    partitions under which the cell had no candidate, in discovery order.
    """

    cell: Cell
    reason: str
    cap: Optional[SidedPartition] = None
    dead_ends: Tuple[DeadEnd, ...] = field(default_factory=tuple)

    def cap_for(
        self,
        row_parent: Optional[SidedPartition] = None,
        col_parent: Optional[SidedPartition] = None,
    ) -> Optional[SidedPartition]:
        """The cap recorded for the branch with the given parents, if it was explored."""
        for dead in self.dead_ends:
            if (row_parent is None or dead.row_parent == row_parent) and (
                col_parent is None or dead.col_parent == col_parent
            ):
                return dead.cap
        return None


@dataclass(frozen=True)
class FerrersDecision:
    """Outcome of the Ferrers decision procedure."""

    is_ferrers: bool
    witness: Optional[FerrersWitness] = None
    certificate: Optional[FailureCertificate] = None
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.is_ferrers


def unique_dead_ends(dead_ends: Iterable[DeadEnd]) -> Tuple[DeadEnd, ...]:
    seen = set()
    kept = []
    for dead in dead_ends:
        if dead not in seen:
            seen.add(dead)
            kept.append(dead)
    return tuple(kept)
