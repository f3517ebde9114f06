"""JSON complex documents: strict parsing, loading with validation, and
canonical serialization.

A document is a single JSON object with keys exactly ambient_dim, vertices,
maximal_simplices.  Coordinates must be integers within the JSON-safe range
(|v| <= 2^53 - 1) so documents stay portable across tools.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .complexes import SimplicialComplex, close_under_faces, validate
from .errors import InputError, ParseError, ValidationError

DOCUMENT_KEYS = ("ambient_dim", "vertices", "maximal_simplices")
MAX_SAFE_INT = 2 ** 53 - 1
MAX_AMBIENT_DIM = 6


def _is_int(value: object) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass(frozen=True)
class ComplexDocument:
    """Parsed document: vertex order and maximal index sets as given."""

    ambient_dim: int
    vertices: tuple[tuple[int, ...], ...]
    maximal_simplices: tuple[tuple[int, ...], ...]

    def as_dict(self) -> dict:
        for v in self.vertices:
            for c in v:
                if abs(c) > MAX_SAFE_INT:
                    raise ParseError(
                        f"coordinate {c} exceeds the JSON-safe integer range")
        return {"ambient_dim": self.ambient_dim,
                "vertices": [list(v) for v in self.vertices],
                "maximal_simplices": [list(f) for f in self.maximal_simplices]}


def parse_document(source) -> ComplexDocument:
    """Parse a JSON string/bytes or an already-decoded dict into a document,
    enforcing the schema strictly."""
    if isinstance(source, (str, bytes)):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    elif isinstance(source, dict):
        data = source
    else:
        raise ParseError(f"document must be JSON text or a dict, got {type(source).__name__}")
    if not isinstance(data, dict):
        raise ParseError("document must be a JSON object")
    missing = [k for k in DOCUMENT_KEYS if k not in data]
    extra = [k for k in data if k not in DOCUMENT_KEYS]
    if missing or extra:
        raise ParseError(
            f"document keys must be exactly {list(DOCUMENT_KEYS)}; "
            f"missing {missing}, unexpected {extra}")

    dim = data["ambient_dim"]
    if not _is_int(dim) or not 1 <= dim <= MAX_AMBIENT_DIM:
        raise ParseError(f"ambient_dim must be an integer in [1, {MAX_AMBIENT_DIM}], got {dim!r}")

    raw_vertices = data["vertices"]
    if not isinstance(raw_vertices, list):
        raise ParseError("vertices must be a list of coordinate lists")
    vertices = []
    for i, v in enumerate(raw_vertices):
        if not isinstance(v, list) or len(v) != dim:
            raise ParseError(f"vertex {i} must be a list of {dim} coordinates, got {v!r}")
        for c in v:
            if not _is_int(c):
                raise ParseError(f"vertex {i} has a non-integer coordinate {c!r}")
            if abs(c) > MAX_SAFE_INT:
                raise ParseError(
                    f"vertex {i} coordinate {c} exceeds the JSON-safe integer range")
        vertices.append(tuple(v))

    raw_faces = data["maximal_simplices"]
    if not isinstance(raw_faces, list):
        raise ParseError("maximal_simplices must be a list of index lists")
    faces = []
    for j, f in enumerate(raw_faces):
        if not isinstance(f, list) or not f:
            raise ParseError(f"maximal simplex {j} must be a nonempty list of indices")
        for i in f:
            if not _is_int(i) or not 0 <= i < len(vertices):
                raise ParseError(f"maximal simplex {j} has a bad vertex index {i!r}")
        if len(set(f)) != len(f):
            raise ParseError(f"maximal simplex {j} repeats a vertex index")
        faces.append(tuple(f))

    return ComplexDocument(ambient_dim=dim, vertices=tuple(vertices),
                           maximal_simplices=tuple(faces))


def load_complex(source) -> SimplicialComplex:
    """Parse, build the face closure, and validate; raises ParseError or
    ValidationError (with the failing condition named)."""
    doc = source if isinstance(source, ComplexDocument) else parse_document(source)
    complex_ = close_under_faces(doc.maximal_simplices, doc.vertices,
                                 ambient_dim=doc.ambient_dim)
    report = validate(complex_)
    if not report.passed:
        raise ValidationError(report.describe())
    return complex_


def read_document(path) -> ComplexDocument:
    """Read and parse a document file."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_document(text)


def complex_to_document(c: SimplicialComplex) -> ComplexDocument:
    """Serialize: vertex order preserved, maximal faces canonicalized as
    sorted index lists in lexicographic order."""
    return ComplexDocument(ambient_dim=c.ambient_dim,
                           vertices=tuple(c.vertices),
                           maximal_simplices=c.maximal_faces)


def document_to_json(doc: ComplexDocument) -> str:
    """Deterministic JSON text for a document."""
    return json.dumps(doc.as_dict(), indent=2, sort_keys=True) + "\n"
