"""Exception hierarchy shared by the library and the CLI."""
from typing import Optional


class HilbertError(ValueError):
    """Base class for every error raised by this package."""


class ConfigurationError(HilbertError):
    """An environment setting could not be interpreted."""


class PartitionError(HilbertError):
    """A sided partition is malformed or two partitions are incompatible."""


class MonomialError(HilbertError):
    """A monomial or a set of monomials violates a precondition."""


class NonBilexError(MonomialError):
    """The complement of an ideal in some bidegree is not a bilex set."""

    def __init__(self, message: str, at=None):
        super().__init__(message)
        self.at = at


class ClosureError(MonomialError):
    """A bidegree-wise family is not closed under multiplication by a variable."""

    def __init__(self, monomial, variable: str):
        super().__init__(
            f"{monomial} is in the family but {variable}*{monomial} is not"
        )
        self.monomial = monomial
        self.variable = variable


class WitnessError(HilbertError):
    """A family of partitions does not certify the table it is paired with."""


class NotAdmissibleError(HilbertError):
    """The admissible construction was asked for a non-admissible table."""


class OracleLimitError(HilbertError):
    """The brute-force oracle was asked for more than its configured limits."""


class TableFormatError(HilbertError):
    """A text file could not be parsed.

    Args:
        message: What went wrong
        line: 1-based line number, when known
        column: 1-based column number, when known
    """

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        location = ""
        if line is not None:
            location = f"line {line}"
            if column is not None:
                location += f", column {column}"
            location += ": "
        super().__init__(location + message)
        self.line = line
        self.column = column
