"""Problem-file parsing and file-or-fixture resolution."""

from __future__ import annotations

import json
import os

from .complexes import MultiplicityAssignment, SimplicialComplex
from .errors import CmLabError, InvalidCharacteristic, ParseError, UnknownFixture
from .fixtures import fixture_names, get_fixture
from .homology import FieldSpec

__all__ = ["parse_problem_file", "resolve_source"]

_FIELDS = {"n", "facets", "alpha", "char"}


def _require_int(value, label: str, minimum: int | None = None) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"{label}: expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise ParseError(f"{label}: must be >= {minimum}, got {value}")
    return value


def parse_problem_file(
    text: str,
) -> tuple[SimplicialComplex, MultiplicityAssignment | None, int]:
    """Parse problem JSON into a complex, optional exponents, and char.

    The returned assignment is None when the file has no alpha field so
    callers can distinguish a stated all-ones table from an absent one.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level: expected a JSON object")
    for key in doc:
        if key not in _FIELDS:
            raise ParseError(f"unknown field {key!r}")
    if "n" not in doc:
        raise ParseError("missing field 'n'")
    if "facets" not in doc:
        raise ParseError("missing field 'facets'")
    n = _require_int(doc["n"], "n", 1)
    raw_facets = doc["facets"]
    if not isinstance(raw_facets, list) or not raw_facets:
        raise ParseError("facets: expected a non-empty list")
    facets = []
    for k, item in enumerate(raw_facets):
        if not isinstance(item, list):
            raise ParseError(f"facets[{k}]: expected a list of vertices")
        facets.append([_require_int(v, f"facets[{k}]") for v in item])
    try:
        cx = SimplicialComplex.from_facets(n, facets)
    except CmLabError as exc:
        raise ParseError(f"facets: {exc}") from None

    mult = None
    if "alpha" in doc:
        raw_alpha = doc["alpha"]
        if not isinstance(raw_alpha, list):
            raise ParseError("alpha: expected a list of records")
        overrides: dict[tuple[int, int], int] = {}
        for k, record in enumerate(raw_alpha):
            if not isinstance(record, dict):
                raise ParseError(f"alpha[{k}]: expected an object")
            for key in record:
                if key not in {"facet", "vertex", "value"}:
                    raise ParseError(f"alpha[{k}]: unknown field {key!r}")
            for key in ("facet", "vertex", "value"):
                if key not in record:
                    raise ParseError(f"alpha[{k}]: missing field {key!r}")
            j = _require_int(record["facet"], f"alpha[{k}].facet", 1)
            i = _require_int(record["vertex"], f"alpha[{k}].vertex", 1)
            v = _require_int(record["value"], f"alpha[{k}].value", 1)
            if j > cx.m:
                raise ParseError(
                    f"alpha[{k}]: facet {j} out of range (the complex has {cx.m})"
                )
            if i > cx.n:
                raise ParseError(
                    f"alpha[{k}]: vertex {i} out of range (the complex has {cx.n})"
                )
            if i in cx.facets[j - 1]:
                raise ParseError(f"alpha[{k}]: vertex {i} lies inside facet {j}")
            if (j, i) in overrides:
                raise ParseError(f"alpha[{k}]: duplicate pair (facet {j}, vertex {i})")
            overrides[(j, i)] = v
        mult = MultiplicityAssignment.from_overrides(cx, overrides)

    char = 0
    if "char" in doc:
        char = _require_int(doc["char"], "char", 0)
        try:
            FieldSpec(char)
        except InvalidCharacteristic as exc:
            raise ParseError(f"char: {exc}") from None
    return cx, mult, char


def resolve_source(
    source: str,
) -> tuple[SimplicialComplex, MultiplicityAssignment | None, int, str]:
    """Load a problem from a file path, falling back to the fixture catalog."""
    if os.path.exists(source):
        with open(source, "r", encoding="utf-8") as handle:
            cx, mult, char = parse_problem_file(handle.read())
        return cx, mult, char, source
    if source in fixture_names():
        fx = get_fixture(source)
        mult = fx.assignment() if fx.has_alpha else None
        return fx.complex, mult, fx.char, source
    raise UnknownFixture(
        f"{source!r} is neither a readable file nor a built-in fixture"
        f" (available: {', '.join(fixture_names())})"
    )
