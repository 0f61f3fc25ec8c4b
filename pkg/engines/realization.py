"""Build a monomial ideal whose Hilbert function is a given Ferrers function."""
import logging

from core.errors import WitnessError
from core.monomials import BiDegree, MonomialBiIdeal, minimal_generators, monomial_set_of, monomials_of
from core.tables import HilbertTable
from core.witness import FerrersWitness
from engines.ferrers_engine import verify_witness

logger = logging.getLogger(__name__)


def realize_ideal(table: HilbertTable, witness: FerrersWitness) -> MonomialBiIdeal:
    """In each bidegree keep the monomials outside M(alpha_ab) and reduce.

    Args:
        table: A Ferrers function on a rectangle
        witness: A family of partitions certifying it

    Returns:
        The ideal generated by the minimal monomials of the family

    Raises:
        WitnessError: if the witness does not certify the table
        ClosureError: if the family is not closed under the variables
    """
    report = verify_witness(table, witness)
    if not report.passed:
        raise WitnessError(f"invalid witness at {report.cell}: {report.reason}")

    family = {}
    for i, j in table.cells():
        at = BiDegree(i, j)
        family[at] = frozenset(monomials_of(at)) - monomial_set_of(witness[i, j])

    ideal = MonomialBiIdeal(minimal_generators(family, bounds=table.bounds))
    logger.info("realized ideal with %d minimal generators", len(ideal.generators))

    if ideal.hilbert_table(table.bounds) != table:
        raise WitnessError("realized ideal does not reproduce the table")
    return ideal
