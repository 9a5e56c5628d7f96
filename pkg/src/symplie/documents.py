"""JSON interchange for algebras, extension pairs, and towers.

An algebra document looks like

    {
      "dim": 4,
      "basis": ["x1", "x2", "x3", "x4"],
      "brackets": [{"u": "x1", "v": "x2", "value": {"x3": "1"}}],
      "omega": [{"u": "x1", "v": "x4", "value": "1"},
                {"u": "x2", "v": "x3", "value": "1"}],
      "meta": {"name": "r_h3_dim4"}
    }

All coefficients are exact rational strings.  Serialization is
canonical: bracket and omega entries are sorted by basis index with
u before v, zero entries are dropped, and the writer always produces
two-space indented JSON with a trailing newline, so documents written
by this module round-trip byte for byte.
"""

from __future__ import annotations

import json
from typing import Mapping, Sequence

from .errors import SymplieError
from .extension import AdmissiblePair
from .lie import LieAlgebra
from .linalg import Matrix
from .rationals import RationalSyntaxError, parse_rational, qstr
from .symplectic import (SkewForm, SymplecticLieAlgebra, validate_symplectic)


class DocumentError(SymplieError, ValueError):
    """A document is malformed; the message names the offending field."""


def _fail(path: str, message: str):
    raise DocumentError(f"{path}: {message}")


def _require_dict(obj, path: str, allowed: set, required: set) -> dict:
    if not isinstance(obj, dict):
        _fail(path, f"expected an object, got {type(obj).__name__}")
    missing = required - set(obj)
    if missing:
        _fail(path, f"missing field(s) {sorted(missing)}")
    extra = set(obj) - allowed
    if extra:
        _fail(path, f"unknown field(s) {sorted(extra)}")
    return obj


def _parse_coeff(text, path: str):
    if not isinstance(text, str):
        _fail(path, f"expected a rational string, got {type(text).__name__}")
    try:
        return parse_rational(text)
    except RationalSyntaxError as exc:
        _fail(path, str(exc))


# ---------------------------------------------------------------------------
# algebra documents

def algebra_to_document(s: SymplecticLieAlgebra,
                        meta: Mapping | None = None) -> dict:
    names = s.basis_names
    n = s.dim
    brackets = []
    for i in range(n):
        for j in range(i + 1, n):
            vec = s.algebra.table[i][j]
            value = {names[k]: qstr(c) for k, c in enumerate(vec) if c}
            if value:
                brackets.append({"u": names[i], "v": names[j], "value": value})
    omega = []
    for i in range(n):
        for j in range(i + 1, n):
            c = s.form.matrix.entry(i, j)
            if c:
                omega.append({"u": names[i], "v": names[j], "value": qstr(c)})
    doc = {"dim": n, "basis": list(names), "brackets": brackets, "omega": omega}
    if meta:
        doc["meta"] = dict(meta)
    return doc


def document_to_parts(doc) -> tuple:
    """(LieAlgebra, SkewForm, meta) with structural checks only.

    The symplectic axioms themselves are not checked here, so callers
    can report every violation instead of failing on the first.
    """
    doc = _require_dict(doc, "document",
                        {"dim", "basis", "brackets", "omega", "meta"},
                        {"dim", "basis", "brackets", "omega"})
    dim = doc["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        _fail("dim", "expected a nonnegative integer")
    basis = doc["basis"]
    if (not isinstance(basis, list)
            or any(not isinstance(b, str) or not b for b in basis)):
        _fail("basis", "expected a list of nonempty strings")
    if len(basis) != dim:
        _fail("basis", f"has {len(basis)} names but dim is {dim}")
    if len(set(basis)) != dim:
        _fail("basis", "names must be unique")
    index = {name: k for k, name in enumerate(basis)}

    def edge(item, path):
        _require_dict(item, path, {"u", "v", "value"}, {"u", "v", "value"})
        for field in ("u", "v"):
            if item[field] not in index:
                _fail(f"{path}.{field}", f"unknown basis name {item[field]!r}")
        i, j = index[item["u"]], index[item["v"]]
        if i >= j:
            _fail(path, "u must come before v in the basis")
        return i, j

    if not isinstance(doc["brackets"], list):
        _fail("brackets", "expected a list")
    sparse = {}
    for pos, item in enumerate(doc["brackets"]):
        path = f"brackets[{pos}]"
        i, j = edge(item, path)
        if (i, j) in sparse:
            _fail(path, f"duplicate bracket for ({item['u']}, {item['v']})")
        value = item["value"]
        if not isinstance(value, dict):
            _fail(f"{path}.value", "expected an object of coefficients")
        coeffs = {}
        for name, text in value.items():
            if name not in index:
                _fail(f"{path}.value.{name}", "unknown basis name")
            c = _parse_coeff(text, f"{path}.value.{name}")
            if c:
                coeffs[index[name]] = c
        sparse[(i, j)] = coeffs

    if not isinstance(doc["omega"], list):
        _fail("omega", "expected a list")
    entries = [list(row) for row in Matrix.zeros(dim, dim).entries]
    seen = set()
    for pos, item in enumerate(doc["omega"]):
        path = f"omega[{pos}]"
        i, j = edge(item, path)
        if (i, j) in seen:
            _fail(path, f"duplicate omega entry for ({item['u']}, {item['v']})")
        seen.add((i, j))
        c = _parse_coeff(item["value"], f"{path}.value")
        entries[i][j] = c
        entries[j][i] = -c
    form = SkewForm(Matrix.from_rows(entries))

    meta = doc.get("meta", {})
    if not isinstance(meta, dict):
        _fail("meta", "expected an object")
    return LieAlgebra.from_sparse(tuple(basis), sparse), form, dict(meta)


def document_to_algebra(doc) -> tuple:
    """(SymplecticLieAlgebra, meta); raises if the axioms fail."""
    algebra, form, meta = document_to_parts(doc)
    return validate_symplectic(algebra, form), meta


# ---------------------------------------------------------------------------
# pair and tower documents

def pair_to_document(pair: AdmissiblePair) -> dict:
    return {
        "base_dim": pair.base_dim,
        "xi": [[qstr(x) for x in row] for row in pair.xi.entries],
        "b0": [qstr(x) for x in pair.b0],
    }


def document_to_pair(doc) -> AdmissiblePair:
    doc = _require_dict(doc, "pair", {"base_dim", "xi", "b0"},
                        {"base_dim", "xi", "b0"})
    n = doc["base_dim"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        _fail("base_dim", "expected a nonnegative integer")
    xi = doc["xi"]
    if not isinstance(xi, list) or len(xi) != n:
        _fail("xi", f"expected {n} rows")
    rows = []
    for r, row in enumerate(xi):
        if not isinstance(row, list) or len(row) != n:
            _fail(f"xi[{r}]", f"expected {n} entries")
        rows.append([_parse_coeff(x, f"xi[{r}][{c}]")
                     for c, x in enumerate(row)])
    b0 = doc["b0"]
    if not isinstance(b0, list) or len(b0) != n:
        _fail("b0", f"expected {n} entries")
    vec = [_parse_coeff(x, f"b0[{k}]") for k, x in enumerate(b0)]
    return AdmissiblePair(Matrix.from_rows(rows) if n else Matrix.zeros(0, 0),
                          tuple(vec))


def tower_to_document(pairs: Sequence[AdmissiblePair]) -> dict:
    """Tower document; steps are listed innermost first."""
    return {"steps": [pair_to_document(p) for p in pairs]}


def document_to_tower(doc) -> list:
    doc = _require_dict(doc, "tower", {"steps"}, {"steps"})
    if not isinstance(doc["steps"], list):
        _fail("steps", "expected a list")
    pairs = []
    for k, step in enumerate(doc["steps"]):
        try:
            pairs.append(document_to_pair(step))
        except DocumentError as exc:
            raise DocumentError(f"steps[{k}].{exc}") from None
    expected = 0
    for k, pair in enumerate(pairs):
        if pair.base_dim != expected:
            _fail(f"steps[{k}]",
                  f"base_dim {pair.base_dim} but the tower is at dimension {expected}")
        expected += 2
    return pairs


# ---------------------------------------------------------------------------
# text form

def dumps_document(doc: Mapping) -> str:
    return json.dumps(doc, indent=2) + "\n"


def parse_document(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
