"""JSON algebra documents.

Layout::

    {"name": "sl2", "description": "...",
     "group": {"free_rank": 1, "torsion": []},
     "basis": [{"name": "e", "degree": [1], "parity": 0}, ...],
     "brackets": [{"left": 0, "right": 2, "result": [[1, "1"]]}, ...]}

Pairs use ``left <= right``; unlisted pairs bracket to zero. Degrees are
additive integer coordinates, coefficients are ``"p"`` or ``"p/q"`` strings
(plain JSON integers are accepted too).
"""
from __future__ import annotations

import json
from fractions import Fraction

from . import linalg
from .algebra import GradedSuperalgebra
from .errors import GroupError, ParseError, StructureError
from .groups import GroupSpec

__all__ = ["parse", "serialize", "to_document", "from_document", "load"]


def _int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"expected an integer, got {x!r}", where)
    return x


def _scalar(x, where) -> Fraction:
    if isinstance(x, bool):
        raise ParseError(f"malformed scalar {x!r}", where)
    if isinstance(x, int):
        return Fraction(x)
    if not isinstance(x, str):
        raise ParseError(f"malformed scalar {x!r}", where)
    try:
        return linalg.parse_scalar(x)
    except ValueError as exc:
        raise ParseError(str(exc), where) from None


def from_document(doc: dict) -> GradedSuperalgebra:
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    g = doc.get("group")
    if not isinstance(g, dict):
        raise ParseError("missing or malformed group", "group")
    try:
        group = GroupSpec(
            _int(g.get("free_rank", 0), "group.free_rank"),
            tuple(_int(m, f"group.torsion[{i}]") for i, m in enumerate(g.get("torsion", []))),
        )
    except GroupError as exc:
        raise ParseError(str(exc), "group") from None

    basis_in = doc.get("basis", [])
    if not isinstance(basis_in, list):
        raise ParseError("basis must be a list", "basis")
    basis = []
    for i, b in enumerate(basis_in):
        where = f"basis[{i}]"
        if not isinstance(b, dict):
            raise ParseError("basis entry must be an object", where)
        name = b.get("name")
        if not isinstance(name, str) or not name:
            raise ParseError("basis entry needs a non-empty name", where + ".name")
        degree = b.get("degree", [])
        if not isinstance(degree, list):
            raise ParseError("degree must be a list of integers", where + ".degree")
        degree = [_int(c, f"{where}.degree[{k}]") for k, c in enumerate(degree)]
        if len(degree) != group.ncoords:
            raise ParseError(
                f"degree has {len(degree)} coordinates, group needs {group.ncoords}", where + ".degree")
        parity = b.get("parity", 0)
        if parity not in (0, 1) or isinstance(parity, bool):
            raise ParseError(f"parity must be 0 or 1, got {parity!r}", where + ".parity")
        basis.append((name, degree, parity))
    n = len(basis)

    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    brackets = doc.get("brackets", [])
    if not isinstance(brackets, list):
        raise ParseError("brackets must be a list", "brackets")
    for e, entry in enumerate(brackets):
        where = f"brackets[{e}]"
        if not isinstance(entry, dict):
            raise ParseError("bracket entry must be an object", where)
        i = _int(entry.get("left"), where + ".left")
        j = _int(entry.get("right"), where + ".right")
        for idx, fld in ((i, "left"), (j, "right")):
            if not 0 <= idx < n:
                raise ParseError(f"unknown basis index {idx}", f"{where}.{fld}")
        result = entry.get("result", [])
        if not isinstance(result, list):
            raise ParseError("result must be a list of [index, coefficient] pairs", where + ".result")
        coeffs: dict[int, Fraction] = {}
        for r, term in enumerate(result):
            tw = f"{where}.result[{r}]"
            if not isinstance(term, list) or len(term) != 2:
                raise ParseError("result term must be [index, coefficient]", tw)
            k = _int(term[0], tw + "[0]")
            if not 0 <= k < n:
                raise ParseError(f"unknown basis index {k}", tw + "[0]")
            coeffs[k] = coeffs.get(k, Fraction(0)) + _scalar(term[1], tw + "[1]")
        coeffs = {k: c for k, c in sorted(coeffs.items()) if c != 0}
        if (i, j) in table:
            if table[(i, j)] != coeffs:
                raise ParseError(f"pair ({i}, {j}) listed twice with different values", where)
            continue
        table[(i, j)] = coeffs

    try:
        return GradedSuperalgebra(
            group, basis, table, name=doc.get("name"), description=doc.get("description"))
    except StructureError as exc:
        raise ParseError(str(exc)) from None


def parse(text: str) -> GradedSuperalgebra:
    """Parse a document into a (not yet validated) algebra."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    return from_document(doc)


def to_document(alg: GradedSuperalgebra) -> dict:
    doc: dict = {}
    if alg.name is not None:
        doc["name"] = alg.name
    if alg.description is not None:
        doc["description"] = alg.description
    doc["group"] = alg.group.to_dict()
    doc["basis"] = [
        {"name": b.name, "degree": list(b.degree.coords), "parity": b.parity} for b in alg.basis
    ]
    entries = list(alg.table.items()) + list(alg.redundant.items())
    doc["brackets"] = [
        {"left": i, "right": j, "result": [[k, linalg.format_scalar(c)] for k, c in coeffs.items()]}
        for (i, j), coeffs in entries
    ]
    return doc


def serialize(alg: GradedSuperalgebra) -> str:
    """Deterministic document text; ``parse(serialize(a))`` equals ``a``."""
    return json.dumps(to_document(alg), indent=2) + "\n"


def load(path) -> GradedSuperalgebra:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())
