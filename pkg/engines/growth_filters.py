"""Necessary conditions on a table: cheap per-cell filters, the two-sided
growth bound and Macaulay's bound on the anti-diagonal sums."""
import logging
from math import comb
from typing import FrozenSet, List, Tuple

from core.monomials import BiDegree
from core.partitions import enumerate_sizes, maximal_sizes
from core.tables import HilbertTable
from engines.reports import CheckReport

logger = logging.getLogger(__name__)

# k[x1, x2, y1, y2]
NUM_VARIABLES = 4


def quick_filters(table: HilbertTable) -> CheckReport:
    """H(0,0) = 1, box bound, zeros stay zero, growth pairs bounded by sizes.

    Returns:
        A report naming the first violated condition and its cell
    """
    name = "quick_filters"
    if table[0, 0] != 1:
        return CheckReport.fail(name, (0, 0), f"H(0,0) must be 1, got {table[0, 0]}")

    for i, j in table.cells():
        if table[i, j] > (i + 1) * (j + 1):
            return CheckReport.fail(
                name, (i, j),
                f"H({i},{j})={table[i, j]} exceeds dim R_({i},{j})={(i + 1) * (j + 1)}",
            )

    A, B = table.bounds
    for i, j in table.cells():
        if table[i, j] != 0:
            continue
        for u, v in ((i + 1, j), (i, j + 1)):
            if u <= A and v <= B and table[u, v] != 0:
                return CheckReport.fail(
                    name, (u, v), f"H({i},{j})=0 but H({u},{v})={table[u, v]}"
                )

    for i, j in table.cells():
        has_row, has_col = i + 1 <= A, j + 1 <= B
        if not (has_row or has_col):
            continue
        h = table[i, j]
        g1 = table[i + 1, j] - h if has_row else None
        g2 = table[i, j + 1] - h if has_col else None
        sizes = enumerate_sizes(h, (i + 1, j + 1))
        fits = any(
            (g1 is None or g1 <= l1) and (g2 is None or g2 <= l2) for l1, l2 in sizes
        )
        if not fits:
            return CheckReport.fail(
                name, (i, j),
                f"growth ({g1},{g2}) from H({i},{j})={h} is not below any size in "
                f"Lambda({h})^({i + 1},{j + 1})={sorted(sizes)}",
                growth=[g1, g2], sizes=sorted(map(list, sizes)),
            )
    return CheckReport.ok(name)


def growth_bounds(table: HilbertTable, at: BiDegree) -> Tuple[int, int]:
    """Upper bounds for H(a+1,b) and H(a,b+1) from the value at (a,b)."""
    h = table[at.a, at.b]
    return h + h // (at.a + 1), h + h // (at.b + 1)


def growth_bound_ok(table: HilbertTable) -> CheckReport:
    """The two-sided growth bound at every cell with a neighbour in the rectangle."""
    name = "growth_bound"
    A, B = table.bounds
    for i, j in table.cells():
        row_bound, col_bound = growth_bounds(table, BiDegree(i, j))
        if i + 1 <= A and table[i + 1, j] > row_bound:
            return CheckReport.fail(
                name, (i + 1, j), f"H({i + 1},{j})={table[i + 1, j]} > {row_bound}"
            )
        if j + 1 <= B and table[i, j + 1] > col_bound:
            return CheckReport.fail(
                name, (i, j + 1), f"H({i},{j + 1})={table[i, j + 1]} > {col_bound}"
            )
    return CheckReport.ok(name)


def binomial_representation(h: int, t: int) -> List[Tuple[int, int]]:
    """Greedy t-th Macaulay representation h = C(k_t,t) + C(k_{t-1},t-1) + ...

    Returns:
        The (k_i, i) pairs, top term first
    """
    if t < 1:
        raise ValueError("the binomial representation needs t >= 1")
    terms = []
    remaining = h
    for i in range(t, 0, -1):
        if remaining == 0:
            break
        k = i
        while comb(k + 1, i) <= remaining:
            k += 1
        terms.append((k, i))
        remaining -= comb(k, i)
    return terms


def macaulay_upper(h: int, t: int) -> int:
    """h^<t>: raise every top and bottom of the representation by one."""
    return sum(comb(k + 1, i + 1) for k, i in binomial_representation(h, t))


def diagonal_sums(table: HilbertTable) -> List[int]:
    """s_t over the anti-diagonals lying completely inside the rectangle."""
    A, B = table.bounds
    return [sum(table[i, t - i] for i in range(t + 1)) for t in range(min(A, B) + 1)]


def diagonal_osequence_ok(table: HilbertTable) -> CheckReport:
    """Macaulay's O-sequence condition on the anti-diagonal sums."""
    name = "diagonal_osequence"
    s = diagonal_sums(table)
    if s[0] != 1:
        if any(s):
            return CheckReport.fail(name, (0,), f"s_0={s[0]} but later sums are non-zero",
                                    sequence=s)
        return CheckReport.ok(name, sequence=s)
    if len(s) > 1 and s[1] > NUM_VARIABLES:
        return CheckReport.fail(name, (1,), f"s_1={s[1]} exceeds {NUM_VARIABLES}", sequence=s)
    for t in range(1, len(s) - 1):
        bound = macaulay_upper(s[t], t)
        if s[t + 1] > bound:
            logger.debug("O-sequence violated: s_%d=%d > %d", t + 1, s[t + 1], bound)
            return CheckReport.fail(
                name, (t + 1,), f"s_{t + 1}={s[t + 1]} > s_{t}^<{t}>={bound}",
                sequence=s, bound=bound,
            )
    return CheckReport.ok(name, sequence=s)


def maximal_growths(value: int, at: BiDegree) -> FrozenSet[Tuple[int, int]]:
    """Largest reachable (H(a+1,b), H(a,b+1)) from H(a,b) = value."""
    return frozenset((value + l1, value + l2) for l1, l2 in maximal_sizes(value, at.sides))


def has_maximal_growth(table: HilbertTable, at: BiDegree) -> bool:
    """Whether the table attains one of the maximal growths at a cell."""
    A, B = table.bounds
    if at.a + 1 > A or at.b + 1 > B:
        raise ValueError(f"cell {at} has no neighbours on both sides in bounds {table.bounds}")
    observed = (table[at.a + 1, at.b], table[at.a, at.b + 1])
    return observed in maximal_growths(table[at.a, at.b], at)
