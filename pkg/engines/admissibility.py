"""Admissible functions: second-difference conditions and the partitions they induce."""
from core.errors import NotAdmissibleError
from core.partitions import SidedPartition
from core.tables import DeltaTable, HilbertTable
from core.witness import FerrersWitness
from engines.ferrers_engine import verify_witness
from engines.reports import CheckReport


def delta(table: HilbertTable) -> DeltaTable:
    return DeltaTable.of(table)


def is_admissible(table: HilbertTable, check_tail: bool = True) -> CheckReport:
    """Check the admissibility conditions inside the rectangle.

    Args:
        table: The table to test
        check_tail: Also require c <= 0 on the last row and column, standing in
            for "c_ij = 0 for i, j >> 0"; skipped when either side is 0

    Returns:
        A report naming the first violated condition
    """
    name = "admissible"
    c = delta(table)
    A, B = table.bounds
    cells = list(table.cells())

    for i, j in cells:
        if c[i, j] > 1:
            return CheckReport.fail(name, (i, j), f"c({i},{j})={c[i, j]} > 1")

    for i, j in cells:
        if c[i, j] > 0:
            continue
        for u, v in ((i + 1, j), (i, j + 1)):
            if u <= A and v <= B and c[u, v] > 0:
                return CheckReport.fail(
                    name, (u, v), f"c({i},{j})={c[i, j]} <= 0 but c({u},{v})={c[u, v]} > 0"
                )

    rows = c.row_partial_sums()
    cols = c.column_partial_sums()
    for i, j in cells:
        if rows[i, j] < 0:
            return CheckReport.fail(name, (i, j), f"row partial sum {rows[i, j]} < 0")
        if i > 0 and rows[i, j] > rows[i - 1, j]:
            return CheckReport.fail(
                name, (i, j), f"row partial sum {rows[i, j]} exceeds {rows[i - 1, j]} of row {i - 1}"
            )
        if cols[i, j] < 0:
            return CheckReport.fail(name, (i, j), f"column partial sum {cols[i, j]} < 0")
        if j > 0 and cols[i, j] > cols[i, j - 1]:
            return CheckReport.fail(
                name, (i, j),
                f"column partial sum {cols[i, j]} exceeds {cols[i, j - 1]} of column {j - 1}",
            )

    if check_tail and A >= 1 and B >= 1:
        outer = [(A, j) for j in range(B + 1)] + [(i, B) for i in range(A)]
        for i, j in outer:
            if c[i, j] > 0:
                return CheckReport.fail(
                    name, (i, j),
                    f"c({i},{j})={c[i, j]} > 0 on the outer row/column: enlarge the window",
                )
    return CheckReport.ok(name)


def admissible_to_witness(table: HilbertTable) -> FerrersWitness:
    """alpha_ab has entries p_(r+1) = sum of c_ir over i <= a.

    Raises:
        NotAdmissibleError: when the in-rectangle conditions fail
    """
    report = is_admissible(table, check_tail=False)
    if not report.passed:
        raise NotAdmissibleError(f"not admissible at {report.cell}: {report.reason}")

    cols = delta(table).column_partial_sums()
    A, B = table.bounds
    grid = [
        [SidedPartition((a + 1, b + 1), tuple(int(p) for p in cols[a, : b + 1])) for b in range(B + 1)]
        for a in range(A + 1)
    ]
    witness = FerrersWitness(table.bounds, grid)
    check = verify_witness(table, witness)
    if not check.passed:
        raise NotAdmissibleError(f"constructed family fails at {check.cell}: {check.reason}")
    return witness
