"""Decision procedure for Ferrers functions on a finite rectangle.

Cells are visited by increasing i + j, ties by increasing i. At each cell the
cap is the meet of the row lift of alpha_{i-1,j} and the column lift of
alpha_{i,j-1}; candidates are partitions of H(i,j) below the cap, tried in
descending lexicographic order. The first complete assignment is the witness.
"""
import logging
from typing import Callable, Dict, Hashable, Iterator, List, Optional, Tuple

from core.config import get_settings
from core.monomials import BiDegree
from core.partitions import SidedPartition, enumerate_bounded, maximal_bounded
from core.search_memory import SearchMemoryService
from core.tables import HilbertTable
from core.witness import (
    Cell,
    DeadEnd,
    FailureCertificate,
    FerrersDecision,
    FerrersWitness,
    unique_dead_ends,
)
from engines.growth_filters import quick_filters
from engines.reports import CheckReport

logger = logging.getLogger(__name__)

CandidateFn = Callable[[int, SidedPartition], List[SidedPartition]]


def cell_cap(
    cell: Cell, assignment: Dict[Cell, SidedPartition]
) -> Tuple[SidedPartition, Optional[SidedPartition], Optional[SidedPartition]]:
    """Cap in force at a cell, with the row and column parents it came from."""
    i, j = cell
    row_parent = assignment.get((i - 1, j)) if i > 0 else None
    col_parent = assignment.get((i, j - 1)) if j > 0 else None
    cap = SidedPartition.full((i + 1, j + 1))
    if row_parent is not None:
        cap = cap.meet(row_parent.lift_row())
    if col_parent is not None:
        cap = cap.meet(col_parent.lift_col())
    return cap, row_parent, col_parent


class FerrersEngine:
    """Backtracking search for a family of partitions certifying a table."""

    def __init__(
        self,
        memory_service: Optional[SearchMemoryService] = None,
        exhaustive_candidates: bool = False,
        run_filters: bool = True,
    ):
        """Initialize the engine.

        Args:
            memory_service: Bookkeeping for memoization and dead ends
            exhaustive_candidates: Try every bounded partition instead of only
                the maximal ones
            run_filters: Reject early on quick_filters violations
        """
        if memory_service is None:
            memory_service = SearchMemoryService(memoize=get_settings().memoize)
        self.memory = memory_service
        self.candidates: CandidateFn = enumerate_bounded if exhaustive_candidates else maximal_bounded
        self.run_filters = run_filters

    def decide(self, table: HilbertTable) -> FerrersDecision:
        """Decide whether the table is a Ferrers function on its rectangle.

        Args:
            table: The table to classify

        Returns:
            A decision holding a witness, or a failure certificate
        """
        if table[0, 0] != 1:
            return FerrersDecision(
                False,
                certificate=FailureCertificate((0, 0), f"H(0,0) must be 1, got {table[0, 0]}"),
            )
        if self.run_filters:
            report = quick_filters(table)
            if not report.passed:
                logger.debug("quick filters rejected the table: %s", report.reason)
                return FerrersDecision(
                    False, certificate=FailureCertificate(report.cell, report.reason)
                )

        order = list(table.cells())
        live = self._live_cells(order, table.bounds)
        session_id = self.memory.create_session("ferrers")
        assignment: Dict[Cell, SidedPartition] = {}
        # One frame per assigned cell: (position, memo state, untried candidates)
        stack: List[Tuple[int, Hashable, Iterator[SidedPartition]]] = []

        def enter(position: int) -> None:
            """Open a frame at position, or record why it failed at once."""
            cell = order[position]
            state = (position, tuple(assignment[c] for c in live[position]))
            if self.memory.has_failed(session_id, state):
                return
            self.memory.record_node(session_id, position)

            cap, row_parent, col_parent = cell_cap(cell, assignment)
            candidates = self.candidates(table[cell], cap)
            if not candidates:
                self.memory.add_dead_end(
                    session_id, position, DeadEnd(cell, cap, row_parent, col_parent)
                )
                self.memory.remember_failure(session_id, state)
                return
            stack.append((position, state, iter(candidates)))

        def advance() -> Optional[int]:
            """Assign the next untried candidate; the position to enter next, or None."""
            while stack:
                position, state, remaining = stack[-1]
                alpha = next(remaining, None)
                if alpha is not None:
                    assignment[order[position]] = alpha
                    return position + 1
                stack.pop()
                del assignment[order[position]]
                self.memory.remember_failure(session_id, state)
            return None

        def search() -> bool:
            position: Optional[int] = 0
            while position is not None:
                if position == len(order):
                    return True
                enter(position)
                position = advance()
            return False

        try:
            found = search()
            frontier = self.memory.get_frontier(session_id)
            dead_ends = self.memory.get_dead_ends(session_id, frontier)
            nodes, memo_hits = self.memory.get_session_stats(session_id)
        finally:
            self.memory.close_session(session_id)
        logger.debug("search finished: found=%s nodes=%d memo_hits=%d", found, nodes, memo_hits)

        if found:
            witness = FerrersWitness.from_cells(table.bounds, assignment)
            return FerrersDecision(True, witness=witness, nodes=nodes)

        cell = order[frontier]
        dead_ends = unique_dead_ends(dead_ends)
        first_cap = dead_ends[0].cap if dead_ends else None
        reason = (
            f"no partition of H{cell}={table[cell]} with sides "
            f"({cell[0] + 1},{cell[1] + 1}) fits under the cap on any branch"
        )
        certificate = FailureCertificate(cell, reason, first_cap, dead_ends)
        return FerrersDecision(False, certificate=certificate, nodes=nodes)

    @staticmethod
    def _live_cells(order: List[Cell], bounds: BiDegree) -> List[List[Cell]]:
        """For each position, the visited cells some unvisited cell still depends on."""
        position = {cell: k for k, cell in enumerate(order)}
        last_use = {}
        for (i, j) in order:
            children = [(i + 1, j), (i, j + 1)]
            uses = [position[c] for c in children if c in position]
            last_use[(i, j)] = max(uses, default=-1)
        return [
            [c for c in order[:k] if last_use[c] >= k]
            for k in range(len(order))
        ]


def is_ferrers(table: HilbertTable, exhaustive_candidates: bool = False) -> FerrersDecision:
    """Decide the Ferrers property with a fresh engine."""
    return FerrersEngine(exhaustive_candidates=exhaustive_candidates).decide(table)


def verify_witness(table: HilbertTable, witness: FerrersWitness) -> CheckReport:
    """Check weights and both lift constraints cell by cell."""
    name = "witness"
    if witness.bounds != table.bounds:
        return CheckReport.fail(name, None, f"witness bounds {witness.bounds} differ "
                                            f"from table bounds {table.bounds}")
    if table[0, 0] != 1:
        return CheckReport.fail(name, (0, 0), "H(0,0) must be 1")
    for i, j in table.cells():
        alpha = witness[i, j]
        if alpha.weight != table[i, j]:
            return CheckReport.fail(name, (i, j),
                                    f"weight of {alpha} is {alpha.weight}, H={table[i, j]}")
        if i > 0 and not alpha.leq(witness[i - 1, j].lift_row()):
            return CheckReport.fail(name, (i, j), f"{alpha} is not below the row lift "
                                                  f"{witness[i - 1, j].lift_row()}")
        if j > 0 and not alpha.leq(witness[i, j - 1].lift_col()):
            return CheckReport.fail(name, (i, j), f"{alpha} is not below the column lift "
                                                  f"{witness[i, j - 1].lift_col()}")
    return CheckReport.ok(name)


def witness_growth_bound(table: HilbertTable, witness: FerrersWitness, at: BiDegree) -> Optional[int]:
    """min{H(i-1,j) + lambda1(alpha_{i-1,j}), H(i,j-1) + lambda2(alpha_{i,j-1})}."""
    bounds = []
    if at.a > 0:
        bounds.append(table[at.a - 1, at.b] + witness[at.a - 1, at.b].size()[0])
    if at.b > 0:
        bounds.append(table[at.a, at.b - 1] + witness[at.a, at.b - 1].size()[1])
    return min(bounds) if bounds else None
