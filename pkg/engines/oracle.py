"""Brute-force realizability oracle for tiny rectangles.

Works directly on monomials: a bidegree slice of an ideal is an int bitmask
over the monomials of R_(a,b), closure is checked by multiplying by the
variables, and no partition arithmetic is involved.
"""
import itertools
import logging
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from core.config import get_settings
from core.errors import OracleLimitError
from core.monomials import BiDegree, BiMonomial, monomials_of
from core.tables import HilbertTable

logger = logging.getLogger(__name__)

Mask = int


class _Slice:
    """Indexing of the monomials of one bidegree."""

    def __init__(self, at: BiDegree):
        self.at = at
        self.monomials = monomials_of(at)
        self.index = {m: k for k, m in enumerate(self.monomials)}

    def members(self, mask: Mask) -> List[BiMonomial]:
        return [m for k, m in enumerate(self.monomials) if mask >> k & 1]

    def mask_of(self, monomials) -> Mask:
        mask = 0
        for m in monomials:
            mask |= 1 << self.index[m]
        return mask


def _up_set_masks(at: BiDegree) -> List[Mask]:
    """All bilex subsets of R_(a,b) as bitmasks.

    Monomials are decided largest first; a monomial may join only if both
    of its immediate raises (x2 -> x1 and y2 -> y1) already joined.
    """
    piece = _Slice(at)
    raises = []
    for m in piece.monomials:
        ups = []
        if m.i2 > 0:
            ups.append(piece.index[BiMonomial(m.i1 + 1, m.i2 - 1, m.j1, m.j2)])
        if m.j2 > 0:
            ups.append(piece.index[BiMonomial(m.i1, m.i2, m.j1 + 1, m.j2 - 1)])
        raises.append(ups)

    found: List[Mask] = []

    def extend(k: int, mask: Mask) -> None:
        if k == len(piece.monomials):
            found.append(mask)
            return
        extend(k + 1, mask)
        if all(mask >> u & 1 for u in raises[k]):
            extend(k + 1, mask | 1 << k)

    extend(0, 0)
    return found


class BruteForceOracle:
    """Exhaustive search over bidegree-wise bilex families closed under the variables."""

    def __init__(self, max_cells: int = None, max_bound: int = None, max_value: int = None):
        """Initialize the oracle.

        Args:
            max_cells: Largest (a+1)(b+1) accepted by enumerate_bilex_sets
            max_bound: Largest A and B of a rectangle
            max_value: Largest table value
        """
        settings = get_settings()
        self.max_cells = settings.oracle_max_cells if max_cells is None else max_cells
        self.max_bound = settings.oracle_max_bound if max_bound is None else max_bound
        self.max_value = settings.oracle_max_value if max_value is None else max_value
        self._slices: Dict[BiDegree, _Slice] = {}
        self._up_sets: Dict[BiDegree, List[Mask]] = {}
        self._images: Dict[Tuple[BiDegree, str], List[Mask]] = {}

    def enumerate_bilex_sets(self, at: BiDegree) -> List[FrozenSet[BiMonomial]]:
        """Every bilex subset of R_(a,b).

        Raises:
            OracleLimitError: when (a+1)(b+1) exceeds the cell limit
        """
        piece = self._slice(at)
        return [frozenset(piece.members(mask)) for mask in self._masks(at)]

    def brute_force_realizable(self, table: HilbertTable) -> bool:
        """Whether some monomial ideal has exactly this Hilbert table on the rectangle."""
        self._check_table(table)
        return next(self._families(table.bounds, table), None) is not None

    def enumerate_realizable_tables(self, bounds: BiDegree) -> Set[HilbertTable]:
        """Hilbert tables of all monomial ideals on the rectangle, deduplicated.

        The unit ideal contributes the all-zero table.
        """
        self._check_bounds(bounds)
        tables = set()
        for family in self._families(bounds, None):
            rows = [[0] * (bounds.b + 1) for _ in range(bounds.a + 1)]
            for at, mask in family.items():
                rows[at.a][at.b] = at.dimension - bin(mask).count("1")
            tables.add(HilbertTable.from_rows(rows))
        logger.info("census on %s: %d tables", bounds, len(tables))
        return tables

    def _check_bounds(self, bounds: BiDegree) -> None:
        if bounds.a > self.max_bound or bounds.b > self.max_bound:
            raise OracleLimitError(f"bounds {bounds} exceed the oracle limit {self.max_bound}")

    def _check_table(self, table: HilbertTable) -> None:
        self._check_bounds(table.bounds)
        largest = int(table.values.max())
        if largest > self.max_value:
            raise OracleLimitError(f"table value {largest} exceeds the oracle limit {self.max_value}")

    def _slice(self, at: BiDegree) -> _Slice:
        if at.dimension > self.max_cells:
            raise OracleLimitError(
                f"R_{at} has {at.dimension} monomials, more than the limit {self.max_cells}"
            )
        if at not in self._slices:
            self._slices[at] = _Slice(at)
        return self._slices[at]

    def _masks(self, at: BiDegree) -> List[Mask]:
        self._slice(at)
        if at not in self._up_sets:
            self._up_sets[at] = _up_set_masks(at)
        return self._up_sets[at]

    def _image(self, at: BiDegree, variable: str) -> List[Mask]:
        """Bit of variable * m in the target slice, for each monomial m of R_at."""
        key = (at, variable)
        if key not in self._images:
            source = self._slice(at)
            target_at = BiDegree(at.a + 1, at.b) if variable[0] == "x" else BiDegree(at.a, at.b + 1)
            target = self._slice(target_at)
            self._images[key] = [1 << target.index[m.times(variable)] for m in source.monomials]
        return self._images[key]

    def _forced(self, at: BiDegree, mask: Mask, variables) -> Mask:
        forced = 0
        for variable in variables:
            image = self._image(at, variable)
            for k, bit in enumerate(image):
                if mask >> k & 1:
                    forced |= bit
        return forced

    def _families(self, bounds: BiDegree, table: Optional[HilbertTable]):
        """Yield every closed family {bidegree: mask}, matching table when given."""
        order = [
            BiDegree(i, t - i)
            for t in range(bounds.a + bounds.b + 1)
            for i in range(max(0, t - bounds.b), min(bounds.a, t) + 1)
        ]
        chosen: Dict[BiDegree, Mask] = {}

        def walk(k: int):
            if k == len(order):
                yield dict(chosen)
                return
            at = order[k]
            required = 0
            if at.a > 0:
                required |= self._forced(BiDegree(at.a - 1, at.b), chosen[BiDegree(at.a - 1, at.b)],
                                         ("x1", "x2"))
            if at.b > 0:
                required |= self._forced(BiDegree(at.a, at.b - 1), chosen[BiDegree(at.a, at.b - 1)],
                                         ("y1", "y2"))
            wanted = None if table is None else at.dimension - table[at.a, at.b]
            for mask in self._masks(at):
                if mask & required != required:
                    continue
                if wanted is not None and bin(mask).count("1") != wanted:
                    continue
                chosen[at] = mask
                yield from walk(k + 1)
            chosen.pop(at, None)

        return walk(0)


def enumerate_bilex_sets(at: BiDegree) -> List[FrozenSet[BiMonomial]]:
    return BruteForceOracle().enumerate_bilex_sets(at)


def brute_force_realizable(table: HilbertTable) -> bool:
    return BruteForceOracle().brute_force_realizable(table)


def enumerate_realizable_tables(bounds: BiDegree) -> Set[HilbertTable]:
    return BruteForceOracle().enumerate_realizable_tables(bounds)


def candidate_tables(bounds: BiDegree):
    """Every table with H(0,0) = 1 and 0 <= H(i,j) <= (i+1)(j+1)."""
    cells = [(i, j) for i in range(bounds.a + 1) for j in range(bounds.b + 1) if (i, j) != (0, 0)]
    ranges = [range((i + 1) * (j + 1) + 1) for i, j in cells]
    for values in itertools.product(*ranges):
        rows = [[0] * (bounds.b + 1) for _ in range(bounds.a + 1)]
        rows[0][0] = 1
        for (i, j), v in zip(cells, values):
            rows[i][j] = v
        yield HilbertTable.from_rows(rows)
