"""Finite rectangles of Hilbert function values and their second differences."""
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from core.errors import HilbertError
from core.monomials import BiDegree


# Largest accepted table value; second differences of larger entries could wrap in int64.
MAX_TABLE_VALUE = 2 ** 60


def _frozen(values) -> np.ndarray:
    try:
        array = np.array(values, dtype=np.int64)
    except OverflowError as exc:
        raise HilbertError("table value exceeds int64") from exc
    if array.ndim != 2 or array.shape[0] == 0 or array.shape[1] == 0:
        raise HilbertError(f"a table needs a non-empty rectangular grid, got shape {array.shape}")
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class HilbertTable:
    """H(i, j) for 0 <= i <= A, 0 <= j <= B; i labels rows, j labels columns."""

    values: np.ndarray

    def __post_init__(self):
        array = _frozen(self.values)
        if (array < 0).any():
            raise HilbertError("Hilbert function values must be natural numbers")
        if (array > MAX_TABLE_VALUE).any():
            raise HilbertError(f"table values above {MAX_TABLE_VALUE} are not supported")
        object.__setattr__(self, "values", array)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "HilbertTable":
        widths = {len(row) for row in rows}
        if len(widths) > 1:
            raise HilbertError(f"rows have different lengths: {sorted(widths)}")
        return cls(_frozen(rows))

    @classmethod
    def from_function(cls, bounds: BiDegree, fn) -> "HilbertTable":
        return cls.from_rows(
            [[fn(i, j) for j in range(bounds.b + 1)] for i in range(bounds.a + 1)]
        )

    @property
    def bounds(self) -> BiDegree:
        rows, cols = self.values.shape
        return BiDegree(rows - 1, cols - 1)

    def __getitem__(self, cell: Tuple[int, int]) -> int:
        i, j = cell
        return int(self.values[i, j])

    def get(self, i: int, j: int, default: int = 0) -> int:
        """H(i, j), or default at negative indices and outside the rectangle."""
        rows, cols = self.values.shape
        if 0 <= i < rows and 0 <= j < cols:
            return int(self.values[i, j])
        return default

    def cells(self) -> Iterator[Tuple[int, int]]:
        """Cells ordered by increasing i + j, ties by increasing i."""
        A, B = self.bounds
        for t in range(A + B + 1):
            for i in range(max(0, t - B), min(A, t) + 1):
                yield i, t - i

    def rows(self) -> List[List[int]]:
        return self.values.tolist()

    def restrict(self, bounds: BiDegree) -> "HilbertTable":
        """The top-left corner up to bounds."""
        return HilbertTable(self.values[: bounds.a + 1, : bounds.b + 1])

    def key(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(row) for row in self.values.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, HilbertTable):
            return NotImplemented
        return self.values.shape == other.values.shape and bool(
            np.array_equal(self.values, other.values)
        )

    def __hash__(self) -> int:
        return hash(self.key())

    def __str__(self) -> str:
        width = max(len(str(int(v))) for v in self.values.flat)
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in self.rows())


@dataclass(frozen=True, eq=False)
class DeltaTable:
    """c_ij = H(i,j) + H(i-1,j-1) - H(i-1,j) - H(i,j-1), zero-extended."""

    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(self.values))

    @classmethod
    def of(cls, table: HilbertTable) -> "DeltaTable":
        padded = np.pad(table.values, ((1, 0), (1, 0)))
        c = padded[1:, 1:] + padded[:-1, :-1] - padded[:-1, 1:] - padded[1:, :-1]
        return cls(c)

    @property
    def bounds(self) -> BiDegree:
        rows, cols = self.values.shape
        return BiDegree(rows - 1, cols - 1)

    def __getitem__(self, cell: Tuple[int, int]) -> int:
        i, j = cell
        return int(self.values[i, j])

    def row_partial_sums(self) -> np.ndarray:
        """Entry (i, j) is the sum of c_it over t <= j."""
        return np.cumsum(self.values, axis=1)

    def column_partial_sums(self) -> np.ndarray:
        """Entry (i, j) is the sum of c_tj over t <= i."""
        return np.cumsum(self.values, axis=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DeltaTable):
            return NotImplemented
        return self.values.shape == other.values.shape and bool(
            np.array_equal(self.values, other.values)
        )

    def __hash__(self) -> int:
        return hash(tuple(map(tuple, self.values.tolist())))

    def __str__(self) -> str:
        width = max(len(str(int(v))) for v in self.values.flat)
        return "\n".join(
            " ".join(str(v).rjust(width) for v in row) for row in self.values.tolist()
        )
