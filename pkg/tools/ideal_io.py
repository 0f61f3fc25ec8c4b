"""Ideal files: one monomial per line, ``#`` starts a comment."""
from pathlib import Path
from typing import Union

from core.errors import MonomialError, TableFormatError
from core.monomials import BiMonomial, MonomialBiIdeal
from tools.table_io import read_source


def parse_ideal(text: str) -> MonomialBiIdeal:
    """Read generators in ``x1^a x2^b y1^c y2^d`` or ``a b c d`` form.

    Raises:
        TableFormatError: naming the line of an unreadable monomial
    """
    generators = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        try:
            generators.add(BiMonomial.parse(body))
        except MonomialError as exc:
            column = len(body) - len(body.lstrip()) + 1
            raise TableFormatError(str(exc), lineno, column) from exc
    return MonomialBiIdeal(frozenset(generators))


def read_ideal(path: Union[str, Path]) -> MonomialBiIdeal:
    return parse_ideal(read_source(path))


def format_ideal(ideal: MonomialBiIdeal) -> str:
    ordered = sorted(ideal.generators, key=BiMonomial.order_key, reverse=True)
    return "".join(f"{m}\n" for m in ordered)
