"""Unit tests for input documents."""

from fractions import Fraction

import pytest

from tropos.errors import DimensionError, DocumentError, MalformedVector, ParseError
from tropos.modules.matrix_io import (
    factors_from_document,
    is_series_document,
    load_document,
    matrix_from_document,
    matrix_to_document,
    parse_network_document,
    plucker_from_document,
    series_matrix_from_document,
)
from tropos.modules.networks import weight_matrix_trop
from tropos.modules.series_field import parse_series
from tropos.modules.trop_core import NEG_INF, TropMatrix
from tropos.types import JacobiKind


class TestLoading:
    """Tests for reading YAML and JSON files."""

    def test_yaml(self, tmp_path):
        """YAML documents load as plain data."""
        path = tmp_path / "m.yaml"
        path.write_text("entries:\n  - [0, 1]\n  - ['-inf', '1/2']\n")
        assert load_document(path) == {"entries": [[0, 1], ["-inf", "1/2"]]}

    def test_json(self, tmp_path):
        """JSON is read by the same loader."""
        path = tmp_path / "m.json"
        path.write_text('{"entries": [[1]]}')
        assert load_document(path) == {"entries": [[1]]}

    def test_missing_file(self, tmp_path):
        """Unreadable files raise DocumentError."""
        with pytest.raises(DocumentError):
            load_document(tmp_path / "absent.yaml")

    def test_invalid_yaml(self, tmp_path):
        """Syntax errors raise DocumentError."""
        path = tmp_path / "bad.yaml"
        path.write_text("entries: [[1, 2]\n")
        with pytest.raises(DocumentError):
            load_document(path)


class TestMatrixDocuments:
    """Tests for matrix documents."""

    def test_full_document(self):
        """Declared shape, mixed scalar spellings."""
        A = matrix_from_document(
            {"rows": 2, "cols": 2, "entries": [[0, "-inf"], [0.5, "3/2"]]}
        )
        assert A[0, 1] is NEG_INF
        assert A[1, 0] == Fraction(1, 2)

    def test_bare_rows(self):
        """A list of rows is accepted."""
        assert matrix_from_document([[2, 1], [1, 2]]) == TropMatrix.from_rows([[2, 1], [1, 2]])

    def test_declared_shape_mismatch(self):
        """rows and cols must match the entries."""
        with pytest.raises(DocumentError):
            matrix_from_document({"rows": 3, "entries": [[1, 2]]})

    def test_schema_violation(self):
        """Missing entries or non-scalar entries are rejected."""
        with pytest.raises(DocumentError):
            matrix_from_document({"rows": 1})
        with pytest.raises(DocumentError):
            matrix_from_document({"entries": [[[1]]]})
        with pytest.raises(DocumentError):
            matrix_from_document({"field": "complex", "entries": [[1]]})

    def test_ragged_rows(self):
        """Ragged rows pass the schema but not the matrix constructor."""
        with pytest.raises(DimensionError):
            matrix_from_document([[1, 2], [3]])

    def test_bad_scalar(self):
        """Unparseable entries raise ParseError."""
        with pytest.raises(ParseError):
            matrix_from_document([["one"]])

    def test_series_document(self):
        """Series entries are literals."""
        doc = {"field": "series", "entries": [["t^2", "t"], [1, "1 - t^-1"]]}
        assert is_series_document(doc)
        assert not is_series_document([[1]])
        M = series_matrix_from_document(doc)
        assert M[1, 1] == parse_series("1 - t^-1")

    def test_output_document(self):
        """Output matrices carry their shape."""
        doc = matrix_to_document(TropMatrix.from_rows([[0, "-inf"]]))
        assert doc == {"rows": 1, "cols": 2, "entries": [["0", "-inf"]]}


class TestOtherDocuments:
    """Tests for factor, Plucker and network documents."""

    def test_factors(self):
        """Factor indices are 1-based in documents."""
        doc = {
            "n": 2,
            "factors": [{"kind": "Lower", "i": 1, "a": "-1"}, {"kind": "Diag", "i": 2, "a": 2}],
        }
        n, factors = factors_from_document(doc)
        assert n == 2
        assert factors[0].kind is JacobiKind.LOWER and factors[0].i == 0
        assert factors[1].i == 1 and factors[1].a == 2

    def test_factor_kind_checked(self):
        """Unknown kinds are schema errors."""
        with pytest.raises(DocumentError):
            factors_from_document({"n": 2, "factors": [{"kind": "Side", "i": 1, "a": 0}]})

    def test_plucker(self):
        """Coordinates are keyed by 1-based subsets."""
        p = plucker_from_document({"k": 1, "n": 2, "coords": {"1": 0, "2": "-inf"}})
        assert p.values == (Fraction(0), NEG_INF)

    def test_plucker_missing_coordinate(self):
        """Every subset needs a coordinate."""
        with pytest.raises(MalformedVector):
            plucker_from_document({"k": 1, "n": 2, "coords": {"1": 0}})

    def test_plucker_bad_key(self):
        """Keys are comma-separated integers."""
        with pytest.raises(DocumentError):
            plucker_from_document({"k": 1, "n": 2, "coords": {"a": 0, "2": 0}})

    def test_network(self):
        """Networks are validated before construction."""
        doc = {
            "nodes": [{"id": 1}, {"id": 2}],
            "edges": [{"from": 1, "to": 2, "weight": "5/2"}],
            "sources": [1],
            "targets": [2],
        }
        G = parse_network_document(doc)
        assert weight_matrix_trop(G) == TropMatrix.from_rows([["5/2"]])
        with pytest.raises(DocumentError):
            parse_network_document({"nodes": []})
