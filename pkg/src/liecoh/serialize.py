"""JSON interchange: algebras, modules, cocycles and verdicts.

Rationals are written as reduced ``"p/q"`` strings (``"p"`` for integers)
and objects are dumped with sorted keys, so equal inputs give byte-equal
output.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations
from pathlib import Path

from .cohomology import Cochain, CochainSpace
from .errors import InvalidInput
from .exactlin import Matrix, format_rational, parse_rational
from .liealg import LieAlgebra
from .rep import Representation
from .theorems import IdentityReport, Verdict


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _q(x) -> str:
    return format_rational(Fraction(x))


def _vec(v) -> list[str]:
    return [_q(a) for a in v]


def _parse_q(x):
    try:
        return parse_rational(x)
    except ValueError as e:
        raise InvalidInput(str(e)) from None


def _need(d, key, kind):
    if not isinstance(d, dict) or key not in d:
        raise InvalidInput(f"missing field {key!r}")
    val = d[key]
    if kind is int and (isinstance(val, bool) or not isinstance(val, int)):
        raise InvalidInput(f"field {key!r} must be an integer")
    if kind is not int and not isinstance(val, kind):
        raise InvalidInput(f"field {key!r} has the wrong type")
    return val


# -- algebras --------------------------------------------------------------

def algebra_to_json(L: LieAlgebra) -> dict:
    brackets = []
    for i, j in combinations(range(L.dim), 2):
        terms = [{"c": _q(c), "k": k} for k, c in enumerate(L.bracket_basis(i, j)) if c]
        if terms:
            brackets.append({"i": i, "j": j, "terms": terms})
    return {"basis": list(L.basis_names), "brackets": brackets, "dim": L.dim, "name": L.name}


def algebra_from_json(d) -> LieAlgebra:
    dim = _need(d, "dim", int)
    if dim < 0:
        raise InvalidInput("dim must be nonnegative")
    name = d.get("name", "")
    if not isinstance(name, str):
        raise InvalidInput("name must be a string")
    basis = d.get("basis") or [f"e{i}" for i in range(dim)]
    if not isinstance(basis, list) or len(basis) != dim or not all(isinstance(b, str) for b in basis):
        raise InvalidInput("basis must list one label per dimension")
    table = {}
    for entry in _need(d, "brackets", list):
        i, j = _need(entry, "i", int), _need(entry, "j", int)
        if not 0 <= i < j < dim:
            raise InvalidInput(f"bracket pair ({i}, {j}) must satisfy 0 <= i < j < dim")
        if (i, j) in table:
            raise InvalidInput(f"bracket pair ({i}, {j}) listed twice")
        terms = {}
        for t in _need(entry, "terms", list):
            k = _need(t, "k", int)
            if not 0 <= k < dim:
                raise InvalidInput(f"term index {k} out of range")
            if k in terms:
                raise InvalidInput(f"term index {k} repeated in pair ({i}, {j})")
            terms[k] = _parse_q(_need(t, "c", (str, int)))
        table[(i, j)] = terms
    return LieAlgebra.from_brackets(dim, table, name, basis)


# -- modules ---------------------------------------------------------------

def _matrix_to_json(m: Matrix) -> list:
    return [_vec(m.row(i)) for i in range(m.rows)]


def module_to_json(V: Representation) -> dict:
    return {"action": [_matrix_to_json(m) for m in V.action], "dim": V.dim}


def module_from_json(d, L: LieAlgebra) -> Representation:
    dim = _need(d, "dim", int)
    if dim < 0:
        raise InvalidInput("module dim must be nonnegative")
    action = _need(d, "action", list)
    if len(action) != L.dim:
        raise InvalidInput("need one action matrix per algebra basis element")
    mats = []
    for m in action:
        if not isinstance(m, list) or len(m) != dim:
            raise InvalidInput("action matrix has the wrong number of rows")
        rows = []
        for r in m:
            if not isinstance(r, list) or len(r) != dim:
                raise InvalidInput("action matrix row has the wrong length")
            rows.append([_parse_q(x) for x in r])
        mats.append(Matrix.from_rows(rows, dim))
    return Representation(L, dim, tuple(mats))


# -- cocycles --------------------------------------------------------------

def cocycle_to_json(w: Cochain) -> dict:
    idx = w.space.index
    return {"degree": w.degree, "tuples": [list(t) for t in idx],
            "values": [_vec(w.value(t)) for t in idx]}


def cocycle_from_json(d, L: LieAlgebra, V: Representation) -> Cochain:
    n = _need(d, "degree", int)
    space = CochainSpace(L, V, n)
    tuples = [tuple(t) for t in _need(d, "tuples", list)]
    values = _need(d, "values", list)
    if tuples != list(space.index) or len(values) != len(tuples):
        raise InvalidInput("cocycle tuples must list every sorted tuple in order")
    coords = []
    for v in values:
        if not isinstance(v, list) or len(v) != V.dim:
            raise InvalidInput("cocycle value has the wrong length")
        coords.extend(_parse_q(x) for x in v)
    return Cochain(space, tuple(coords))


# -- verdicts and reports --------------------------------------------------

def verdict_to_json(v: Verdict) -> dict:
    dec = None
    if v.decomposition is not None:
        dec = {k: [_vec(x) for x in vs] for k, vs in v.decomposition.items()}
    wit = None
    if v.witness is not None:
        w = v.witness
        wit = {"cocycle": cocycle_to_json(w.cocycle), "h2_dim": w.h2_dim,
               "module": module_to_json(w.module), "provenance": w.provenance}
    return {"case": v.case, "decomposition": dec, "witness": wit}


def report_to_json(r: IdentityReport) -> dict:
    return {"holds": r.holds, "lhs": r.lhs, "name": r.name, "params": r.params,
            "rhs": r.rhs, "terms": r.terms}


def vectors_to_json(vs) -> list:
    return [_vec(v) for v in vs]


def read_json(path) -> object:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise InvalidInput(f"cannot read {path}: {e}") from None


def load_algebra(path) -> LieAlgebra:
    return algebra_from_json(read_json(path))


def load_module(path, L: LieAlgebra) -> Representation:
    return module_from_json(read_json(path), L)
