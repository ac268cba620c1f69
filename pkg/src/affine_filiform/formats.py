"""JSON documents for algebras, connections, representations and forms.

All indices in documents are 1-based. Scalars are strings ``"p/q"`` (or
``"p"``). Writers are canonical: ``dumps(read(dumps(x)))`` is byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .connections import AffineConnection, SymplecticForm, check_symplectic, make_connection
from .errors import ParseError
from .exact_linalg import Matrix, MultiPoly, as_scalar, format_scalar
from .lie_core import LieAlgebra, from_brackets
from .representations import Representation, make_representation


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid document: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("document must be an object")
    return doc


def _coeff_map(vec) -> dict[str, str]:
    return {str(k + 1): format_scalar(x) for k, x in enumerate(vec) if x}


def _read_coeffs(raw, dim: int) -> list[Fraction]:
    if not isinstance(raw, dict):
        raise ParseError("coeffs must be an object {k: 'p/q'}")
    vec = [Fraction(0)] * dim
    for k, v in raw.items():
        try:
            idx = int(k)
        except ValueError as exc:
            raise ParseError(f"bad basis index {k!r}") from exc
        if not 1 <= idx <= dim:
            raise ParseError(f"basis index {idx} out of range 1..{dim}")
        vec[idx - 1] = as_scalar(v)
    return vec


def _require(doc: dict, key: str):
    if key not in doc:
        raise ParseError(f"missing field {key!r}")
    return doc[key]


def _read_dim(doc: dict, key: str = "dim") -> int:
    dim = _require(doc, key)
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError(f"{key} must be a positive integer")
    return dim


# -- algebras


def algebra_to_doc(g: LieAlgebra) -> dict[str, Any]:
    return {
        "dim": g.dim,
        "basis": list(g.basis_names),
        "brackets": [
            {"i": i + 1, "j": j + 1, "coeffs": _coeff_map(v)} for (i, j), v in sorted(g.brackets().items())
        ],
    }


def algebra_from_doc(doc: dict) -> LieAlgebra:
    dim = _read_dim(doc)
    names = doc.get("basis") or ()
    brackets = {}
    for entry in doc.get("brackets", []):
        i, j = int(_require(entry, "i")), int(_require(entry, "j"))
        if i >= j:
            raise ParseError(f"brackets must be listed with i < j, got ({i}, {j})")
        if not (1 <= i and j <= dim):
            raise ParseError(f"bracket ({i}, {j}) out of range")
        if (i - 1, j - 1) in brackets:
            raise ParseError(f"bracket ({i}, {j}) listed twice")
        brackets[(i - 1, j - 1)] = _read_coeffs(_require(entry, "coeffs"), dim)
    return from_brackets(dim, brackets, names)


# -- connections


def connection_to_doc(c: AffineConnection, embed_algebra: bool = True) -> dict[str, Any]:
    n = c.algebra.dim
    doc: dict[str, Any] = {
        "dim": n,
        "gamma": [
            {"i": i + 1, "j": j + 1, "coeffs": _coeff_map(c.gamma[i][j])}
            for i in range(n)
            for j in range(n)
            if any(c.gamma[i][j])
        ],
    }
    if embed_algebra:
        doc["algebra"] = algebra_to_doc(c.algebra)
    return doc


def _resolve_algebra(doc: dict, algebra: LieAlgebra | None) -> LieAlgebra:
    if algebra is not None:
        return algebra
    if "algebra" not in doc:
        raise ParseError("no algebra given and none embedded in the document")
    return algebra_from_doc(doc["algebra"])


def connection_from_doc(doc: dict, algebra: LieAlgebra | None = None) -> AffineConnection:
    g = _resolve_algebra(doc, algebra)
    dim = _read_dim(doc)
    if dim != g.dim:
        raise ParseError(f"connection dim {dim} does not match algebra dim {g.dim}")
    gamma = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    seen = set()
    for entry in doc.get("gamma", []):
        i, j = int(_require(entry, "i")), int(_require(entry, "j"))
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise ParseError(f"gamma entry ({i}, {j}) out of range")
        if (i, j) in seen:
            raise ParseError(f"gamma entry ({i}, {j}) listed twice")
        seen.add((i, j))
        gamma[i - 1][j - 1] = _read_coeffs(_require(entry, "coeffs"), dim)
    return make_connection(g, gamma)


# -- representations


def _matrix_rows(m: Matrix) -> list[list[str]]:
    return m.to_strings()


def _read_matrix(raw, size: int | None = None) -> Matrix:
    if not isinstance(raw, list) or not all(isinstance(r, list) for r in raw):
        raise ParseError("matrix must be a list of rows")
    m = Matrix([[as_scalar(x) for x in r] for r in raw])
    if size is not None and m.shape != (size, size):
        raise ParseError(f"expected a {size}x{size} matrix, got {m.shape}")
    return m


def representation_to_doc(rho: Representation, embed_algebra: bool = True) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "module_dim": rho.module_dim,
        "matrices": [_matrix_rows(m) for m in rho.matrices],
    }
    if embed_algebra:
        doc["algebra"] = algebra_to_doc(rho.algebra)
    return doc


def representation_from_doc(doc: dict, algebra: LieAlgebra | None = None) -> Representation:
    g = _resolve_algebra(doc, algebra)
    m = _read_dim(doc, "module_dim")
    raw = _require(doc, "matrices")
    if not isinstance(raw, list) or len(raw) != g.dim:
        raise ParseError(f"need one matrix per basis element ({g.dim})")
    return make_representation(g, [_read_matrix(r, m) for r in raw])


# -- symplectic forms


def symplectic_to_doc(sf: SymplecticForm, embed_algebra: bool = True) -> dict[str, Any]:
    doc: dict[str, Any] = {"dim": sf.algebra.dim, "theta": _matrix_rows(sf.theta)}
    if embed_algebra:
        doc["algebra"] = algebra_to_doc(sf.algebra)
    return doc


def symplectic_from_doc(doc: dict, algebra: LieAlgebra | None = None) -> SymplecticForm:
    g = _resolve_algebra(doc, algebra)
    dim = _read_dim(doc)
    if dim != g.dim:
        raise ParseError(f"form dim {dim} does not match algebra dim {g.dim}")
    return check_symplectic(g, _read_matrix(_require(doc, "theta"), dim))


# -- polynomials


def poly_to_doc(p) -> dict[str, Any]:
    if isinstance(p, MultiPoly):
        return {"variables": list(p.variables), "monomials": p.to_monomials()}
    return {"variables": [], "monomials": [[format_scalar(p), []]] if p else []}


def poly_from_doc(doc: dict) -> MultiPoly:
    return MultiPoly.from_monomials(_require(doc, "variables"), _require(doc, "monomials"))
