"""Input documents.

Documents are YAML or JSON (JSON is valid YAML) and are checked against a
JSON Schema before conversion. Scalars may be numbers, ``"p/q"`` strings,
exact decimals or ``"-inf"``; series entries use the literal syntax of
``parse_series``. Every index in a document is 1-based.
"""

import logging
from pathlib import Path
from typing import Any

import jsonschema
import yaml

from tropos.errors import DocumentError
from tropos.types import FactorRecord

from .factorization import JacobiFactor
from .grassmannian import PluckerVector, parse_subset
from .networks import PlanarNetwork, network_from_document
from .series_field import SeriesMatrix
from .trop_core import TropMatrix

logger = logging.getLogger("tropos.matrix_io")


# ============================================================================
# Schemas
# ============================================================================

_SCALAR = {"type": ["number", "string"]}

_ROWS = {
    "type": "array",
    "minItems": 1,
    "items": {"type": "array", "minItems": 1, "items": _SCALAR},
}

MATRIX_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["entries"],
    "properties": {
        "field": {"enum": ["trop", "series"]},
        "rows": {"type": "integer", "minimum": 1},
        "cols": {"type": "integer", "minimum": 1},
        "entries": _ROWS,
    },
}

FACTORS_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["n", "factors"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "factors": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind", "i", "a"],
                "properties": {
                    "kind": {"enum": ["Lower", "Upper", "Diag"]},
                    "i": {"type": "integer", "minimum": 1},
                    "a": _SCALAR,
                },
            },
        },
    },
}

PLUCKER_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["k", "n", "coords"],
    "properties": {
        "k": {"type": "integer", "minimum": 0},
        "n": {"type": "integer", "minimum": 1},
        "coords": {
            "type": "object",
            "propertyNames": {"pattern": r"^\d+(,\d+)*$"},
            "additionalProperties": _SCALAR,
        },
    },
}

NETWORK_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["nodes", "edges", "sources", "targets"],
    "properties": {
        "field": {"enum": ["trop", "series"]},
        "nodes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id"],
                "properties": {
                    "id": {"type": ["string", "integer"]},
                    "col": {"type": "number"},
                    "row": {"type": "number"},
                },
            },
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["from", "to"],
                "properties": {
                    "from": {"type": ["string", "integer"]},
                    "to": {"type": ["string", "integer"]},
                    "weight": _SCALAR,
                },
            },
        },
        "sources": {"type": "array", "items": {"type": ["string", "integer"]}},
        "targets": {"type": "array", "items": {"type": ["string", "integer"]}},
    },
}


# ============================================================================
# Loading and validation
# ============================================================================


def load_document(path: str | Path) -> Any:
    """Read a YAML or JSON file.

    Raises:
        DocumentError: If the file cannot be read or parsed.
    """
    try:
        with open(path) as f:
            doc = yaml.safe_load(f)
    except OSError as e:
        raise DocumentError(f"Cannot read {path}: {e}") from e
    except yaml.YAMLError as e:
        raise DocumentError(f"Cannot parse {path}: {e}") from e
    logger.debug(f"Loaded document {path}")
    return doc


def validate_document(doc: Any, schema: dict[str, Any], what: str) -> None:
    """Raise ``DocumentError`` with the first schema violation."""
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as e:
        location = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise DocumentError(f"Invalid {what} document at {location}: {e.message}") from e


def _matrix_entries(doc: Any, what: str) -> list[list[Any]]:
    # A bare list of rows is accepted as shorthand for {"entries": rows}
    if isinstance(doc, list):
        doc = {"entries": doc}
    validate_document(doc, MATRIX_SCHEMA, what)
    entries: list[list[Any]] = doc["entries"]
    declared = (doc.get("rows", len(entries)), doc.get("cols", len(entries[0])))
    if declared != (len(entries), len(entries[0])):
        raise DocumentError(
            f"Declared shape {declared[0]}x{declared[1]} does not match the entries"
        )
    return entries


# ============================================================================
# Conversion
# ============================================================================


def matrix_from_document(doc: Any) -> TropMatrix:
    """``{"rows": n, "cols": m, "entries": [[...], ...]}`` or a bare list of rows.

    ``rows`` and ``cols`` are optional; when present they must match. ``field`` is
    ``"trop"`` (the default) or ``"series"``; see ``is_series_document``.

    Raises:
        DocumentError: If the document does not match the schema.
        DimensionError: If the rows are ragged.
        ParseError: If an entry is not a tropical scalar.
    """
    return TropMatrix.from_rows(_matrix_entries(doc, "matrix"))


def series_matrix_from_document(doc: Any) -> SeriesMatrix:
    """Matrix document whose entries are series literals (``"field": "series"``)."""
    return SeriesMatrix.from_rows(_matrix_entries(doc, "series matrix"))


def matrix_to_document(A: TropMatrix | SeriesMatrix) -> dict[str, Any]:
    return {"rows": A.rows, "cols": A.cols, "entries": A.to_lists()}


def factors_from_document(doc: Any) -> tuple[int, list[JacobiFactor]]:
    """``{"n": n, "factors": [{"kind", "i", "a"}, ...]}`` with 1-based ``i``."""
    validate_document(doc, FACTORS_SCHEMA, "factors")
    factors = [
        JacobiFactor.from_record(FactorRecord(kind=f["kind"], i=f["i"], a=str(f["a"])))
        for f in doc["factors"]
    ]
    return doc["n"], factors


def plucker_from_document(doc: Any) -> PluckerVector:
    """``{"k": k, "n": n, "coords": {"1,2": value, ...}}``.

    Raises:
        DocumentError: If the document does not match the schema.
        MalformedVector: If coordinates are missing or malformed.
    """
    validate_document(doc, PLUCKER_SCHEMA, "Plucker vector")
    coords = {parse_subset(key): value for key, value in doc["coords"].items()}
    return PluckerVector.from_mapping(doc["k"], doc["n"], coords)


def parse_network_document(doc: Any, series: bool = False) -> PlanarNetwork:
    validate_document(doc, NETWORK_SCHEMA, "network")
    return network_from_document(doc, series)


def is_series_document(doc: Any) -> bool:
    return isinstance(doc, dict) and doc.get("field") == "series"
