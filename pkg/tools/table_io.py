"""Plain-text Hilbert tables: one row per line, whitespace-separated naturals."""
from pathlib import Path
from typing import Union

from core.errors import HilbertError, TableFormatError
from core.tables import HilbertTable


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def parse_table(text: str) -> HilbertTable:
    """Parse a table; row index is i, column index is j.

    Raises:
        TableFormatError: with the line and column of the first problem
    """
    rows = []
    first_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        row = []
        column = 0
        for token in body.split():
            column = body.index(token, column) + 1
            if not (token.isascii() and token.isdigit()):
                raise TableFormatError(f"expected a natural number, got {token!r}", lineno, column)
            row.append(int(token))
            column += len(token) - 1
        if rows and len(row) != len(rows[0]):
            raise TableFormatError(
                f"row has {len(row)} entries, line {first_line} has {len(rows[0])}", lineno
            )
        if not rows:
            first_line = lineno
        rows.append(row)
    if not rows:
        raise TableFormatError("no table rows found")
    try:
        return HilbertTable.from_rows(rows)
    except HilbertError as exc:
        raise TableFormatError(str(exc)) from exc


def read_source(path: Union[str, Path]) -> str:
    """File contents as UTF-8 text."""
    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise TableFormatError(f"{path} is not UTF-8 text: {exc.reason}") from exc


def read_table(path: Union[str, Path]) -> HilbertTable:
    return parse_table(read_source(path))


def format_table(table: HilbertTable) -> str:
    return str(table) + "\n"
