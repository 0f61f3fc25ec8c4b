"""Tests for the table, ideal and witness file formats."""
import json

import pytest

from core.errors import TableFormatError
from tools.ideal_io import format_ideal, parse_ideal
from tools.table_io import format_table, parse_table, read_table
from tools.witness_io import certificate_to_dict, read_witness, witness_from_dict, witness_to_dict
from engines.ferrers_engine import is_ferrers

from reference_tables import ADMISSIBLE, MAXIMAL_GROWTH_CLASH, SINGLE_DEGREE_IDEAL, monomial


class TestTableFiles:
    def test_comments_and_blank_lines(self):
        table = parse_table("# corner of a table\n1 2  # row 0\n\n2 4\n")
        assert table.rows() == [[1, 2], [2, 4]]

    def test_bad_token_position(self):
        with pytest.raises(TableFormatError) as excinfo:
            parse_table("1 2\n3 x\n")
        assert (excinfo.value.line, excinfo.value.column) == (2, 3)

    def test_negative_value(self):
        with pytest.raises(TableFormatError):
            parse_table("1 -2\n")

    def test_ragged_rows(self):
        with pytest.raises(TableFormatError) as excinfo:
            parse_table("1 2\n3\n")
        assert excinfo.value.line == 2

    def test_empty_file(self):
        with pytest.raises(TableFormatError):
            parse_table("# nothing here\n")

    def test_non_ascii_digit(self):
        with pytest.raises(TableFormatError) as excinfo:
            parse_table("1 ²\n")
        assert (excinfo.value.line, excinfo.value.column) == (1, 3)

    @pytest.mark.parametrize("value", ["99999999999999999999", str(2 ** 61)])
    def test_values_beyond_int64_range(self, value):
        with pytest.raises(TableFormatError, match="table value"):
            parse_table(f"1 {value}\n")

    def test_written_table_reads_back(self, tmp_path):
        path = tmp_path / "table.txt"
        path.write_text(format_table(ADMISSIBLE))
        assert read_table(path) == ADMISSIBLE


class TestIdealFiles:
    def test_parse(self):
        ideal = parse_ideal("x1 y1\n# comment\n0 2 1 0\n\n")
        assert ideal.generators == {monomial("x1 y1"), monomial("x2^2 y1")}

    def test_bad_factor(self):
        with pytest.raises(TableFormatError) as excinfo:
            parse_ideal("x1 y1\n  x1 z3\n")
        assert (excinfo.value.line, excinfo.value.column) == (2, 3)

    @pytest.mark.parametrize("line", ["1 0 0 ²", "x1^² y1", "x1^٣"])
    def test_non_ascii_exponents(self, line):
        with pytest.raises(TableFormatError) as excinfo:
            parse_ideal(line + "\n")
        assert excinfo.value.line == 1

    def test_format_orders_generators(self):
        assert format_ideal(SINGLE_DEGREE_IDEAL).splitlines() == [
            "x1^2 y1^3",
            "x1^2 y1^2 y2",
            "x1 x2 y1^3",
            "x1 x2 y1^2 y2",
        ]


class TestWitnessDocuments:
    def test_dict_form(self):
        witness = is_ferrers(ADMISSIBLE).witness
        data = witness_to_dict(witness)
        assert data["bounds"] == [5, 5]
        assert data["alpha"][2][2] == [3, 3, 2]
        assert witness_from_dict(json.loads(json.dumps(data))) == witness

    def test_accepts_check_document(self):
        witness = is_ferrers(ADMISSIBLE).witness
        document = {"verdict": "YES", "witness": witness_to_dict(witness)}
        assert witness_from_dict(document) == witness

    def test_rejects_other_documents(self):
        with pytest.raises(TableFormatError):
            witness_from_dict({"verdict": "NO"})

    def test_rejects_mismatched_bounds(self):
        with pytest.raises(TableFormatError):
            witness_from_dict({"bounds": [1, 1], "alpha": [[[1]]]})

    def test_bad_json(self, tmp_path):
        path = tmp_path / "witness.json"
        path.write_text("{not json")
        with pytest.raises(TableFormatError):
            read_witness(path)

    def test_certificate(self):
        data = certificate_to_dict(is_ferrers(MAXIMAL_GROWTH_CLASH).certificate)
        assert data["cell"] == [3, 3]
        assert {"cap": [4, 2, 1, 1], "row_parent": [3, 3, 1, 1], "col_parent": [4, 2, 2]} in data["dead_ends"]
