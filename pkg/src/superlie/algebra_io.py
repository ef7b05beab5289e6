"""JSON file format for Lie superalgebras.

    {"name": "H(1,0)",
     "even": ["x1", "x2", "z"], "odd": [],
     "brackets": [{"left": "x1", "right": "x2",
                   "value": [{"basis": "z", "coeff": "1"}]}],
     "kernel": ["me1"]}          # optional, written for stem covers

Coefficients are exact rationals written as ``"p/q"`` strings (integers are
also accepted on input).  Emission lists brackets in canonical ``i <= j``
order so that parse followed by emit is the identity on emitted files.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .exactlin import as_rational
from .superalg import AlgebraFormatError, LieSuperAlgebra, SkewSymmetryError, ValidationReport, validate


class AlgebraParseError(ValueError):
    """Malformed input: bad JSON, wrong shape, unknown or duplicate names."""


class AlgebraValidationError(ValueError):
    """Well-formed input describing something that is not a Lie superalgebra."""

    def __init__(self, message: str, report: ValidationReport | None = None):
        super().__init__(message)
        self.report = report


def _coeff(raw) -> Fraction:
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise AlgebraParseError(f"coefficient {raw!r} must be an integer or a 'p/q' string")
    try:
        return as_rational(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise AlgebraParseError(f"bad coefficient {raw!r}") from exc


def _names(doc: dict, field: str) -> list[str]:
    value = doc.get(field, [])
    if not isinstance(value, list) or not all(isinstance(n, str) and n for n in value):
        raise AlgebraParseError(f"'{field}' must be a list of non-empty strings")
    return value


def algebra_from_dict(doc) -> LieSuperAlgebra:
    """Raises AlgebraParseError for format problems and SkewSymmetryError for
    brackets that violate skew-symmetry (a validation failure, not a parse one)."""
    if not isinstance(doc, dict):
        raise AlgebraParseError("top level must be a JSON object")
    even, odd = _names(doc, "even"), _names(doc, "odd")
    seen = set()
    for n in even + odd:
        if n in seen:
            raise AlgebraParseError(f"duplicate basis name {n!r}")
        seen.add(n)
    brackets: dict[tuple[str, str], dict[str, Fraction]] = {}
    entries = doc.get("brackets", [])
    if not isinstance(entries, list):
        raise AlgebraParseError("'brackets' must be a list")
    for b in entries:
        if not isinstance(b, dict) or not {"left", "right", "value"} <= b.keys():
            raise AlgebraParseError("each bracket needs 'left', 'right' and 'value'")
        left, right = b["left"], b["right"]
        for n in (left, right):
            if n not in seen:
                raise AlgebraParseError(f"unknown basis name {n!r} in bracket")
        if (left, right) in brackets:
            raise AlgebraParseError(f"bracket [{left},{right}] given twice")
        if not isinstance(b["value"], list):
            raise AlgebraParseError(f"value of [{left},{right}] must be a list of terms")
        value: dict[str, Fraction] = {}
        for term in b["value"]:
            if not isinstance(term, dict) or "basis" not in term or "coeff" not in term:
                raise AlgebraParseError(f"terms of [{left},{right}] need 'basis' and 'coeff'")
            if term["basis"] not in seen:
                raise AlgebraParseError(f"unknown basis name {term['basis']!r} in [{left},{right}]")
            value[term["basis"]] = value.get(term["basis"], Fraction(0)) + _coeff(term["coeff"])
        brackets[(left, right)] = value
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise AlgebraParseError("'name' must be a string")
    try:
        return LieSuperAlgebra(even, odd, brackets, name=name)
    except SkewSymmetryError:
        raise
    except AlgebraFormatError as exc:
        raise AlgebraParseError(str(exc)) from exc


def parse_algebra(text: str, check: bool = True) -> LieSuperAlgebra:
    """Parse and (unless ``check`` is false) validate an algebra file."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraParseError(f"invalid JSON: {exc}") from exc
    try:
        L = algebra_from_dict(doc)
    except SkewSymmetryError as exc:
        raise AlgebraValidationError(f"skew violation: {exc}") from exc
    if check:
        report = validate(L)
        if not report.ok:
            listing = "\n".join(str(v) for v in report.violations[:10])
            raise AlgebraValidationError(f"{len(report.violations)} violation(s)\n{listing}", report)
    return L


def kernel_names(text: str) -> list[str]:
    """The optional ``kernel`` annotation of a file (empty when absent)."""
    doc = json.loads(text)
    return list(doc.get("kernel", [])) if isinstance(doc, dict) else []


def _fmt(c: Fraction) -> str:
    return str(c)  # Fraction prints as "p/q", or "p" when integral


def algebra_to_dict(L: LieSuperAlgebra, kernel: Sequence[str] | None = None) -> dict:
    names = L.names
    brackets = []
    for (i, j), vec in L.structure.items():
        brackets.append({
            "left": names[i],
            "right": names[j],
            "value": [{"basis": names[k], "coeff": _fmt(c)} for k, c in enumerate(vec) if c],
        })
    doc = {"name": L.name, "even": L.even_names, "odd": L.odd_names, "brackets": brackets}
    if kernel is not None:
        doc["kernel"] = list(kernel)
    return doc


def emit_algebra(L: LieSuperAlgebra, kernel: Sequence[str] | None = None) -> str:
    return json.dumps(algebra_to_dict(L, kernel), indent=2) + "\n"
