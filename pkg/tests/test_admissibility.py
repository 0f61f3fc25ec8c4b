"""Tests for admissible functions and the partitions read off their second differences."""
import pytest

from core.errors import NotAdmissibleError
from core.monomials import BiDegree
from core.partitions import SidedPartition
from engines.admissibility import admissible_to_witness, delta, is_admissible
from engines.ferrers_engine import is_ferrers, verify_witness
from engines.oracle import candidate_tables

from reference_tables import ADMISSIBLE, ADMISSIBLE_ALPHA, MERGED, box_table, constant_one


class TestDelta:
    def test_second_differences(self):
        c = delta(ADMISSIBLE)
        assert c[0, 0] == 1
        assert c[1, 1] == 1
        assert c[2, 2] == 0
        assert c[2, 3] == -1
        assert c[4, 2] == -2
        assert c[5, 5] == 0

    def test_polynomial_ring_has_unit_differences(self):
        assert delta(box_table(2, 2)).values.tolist() == [[1, 1, 1]] * 3

    def test_partial_sums_recover_the_table(self):
        c = delta(ADMISSIBLE)
        assert (c.row_partial_sums().cumsum(axis=0) == ADMISSIBLE.values).all()


class TestIsAdmissible:
    def test_admissible_table(self):
        assert is_admissible(ADMISSIBLE).passed

    def test_constant_one(self):
        assert is_admissible(constant_one(2, 2)).passed

    def test_merged_table(self):
        report = is_admissible(MERGED)
        assert not report.passed
        assert report.cell == (1, 4)

    def test_tail_condition(self):
        report = is_admissible(box_table(2, 2))
        assert not report.passed
        assert "outer" in report.reason
        assert is_admissible(box_table(2, 2), check_tail=False).passed

    def test_tail_skipped_on_a_line(self):
        assert is_admissible(box_table(0, 3)).passed


class TestAdmissibleWitness:
    def test_printed_family(self):
        witness = admissible_to_witness(ADMISSIBLE)
        for i, row in enumerate(ADMISSIBLE_ALPHA):
            for j, entries in enumerate(row):
                assert witness[i, j].entries == entries
        assert witness[5, 2] == SidedPartition((6, 3), (5, 5, 0))

    def test_constant_one(self):
        witness = admissible_to_witness(constant_one(2, 3))
        assert witness[2, 3] == SidedPartition((3, 4), (1, 0, 0, 0))

    def test_polynomial_ring(self):
        witness = admissible_to_witness(box_table(2, 2))
        assert witness[2, 2] == SidedPartition.full((3, 3))

    def test_not_admissible(self):
        with pytest.raises(NotAdmissibleError):
            admissible_to_witness(MERGED)

    def test_admissible_implies_ferrers(self):
        witness = admissible_to_witness(ADMISSIBLE)
        assert verify_witness(ADMISSIBLE, witness).passed
        assert is_ferrers(ADMISSIBLE).is_ferrers


class TestAdmissibleTablesAreFerrers:
    @staticmethod
    def _sweep(bounds: BiDegree) -> int:
        admitted = 0
        for table in candidate_tables(bounds):
            if not is_admissible(table).passed:
                continue
            admitted += 1
            witness = admissible_to_witness(table)
            assert verify_witness(table, witness).passed, str(table)
            assert is_ferrers(table).is_ferrers, str(table)
        return admitted

    def test_unit_square(self):
        assert self._sweep(BiDegree(1, 1)) > 0

    @pytest.mark.slow
    def test_every_admissible_3x3_table(self):
        assert self._sweep(BiDegree(2, 2)) == 34
