import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from conftest import alg
from liecoh import catalog
from liecoh.errors import InvalidInput
from liecoh.liealg import LieAlgebra
from liecoh.rep import Representation, adjoint
from liecoh.exactlin import Matrix
from liecoh.serialize import (
    algebra_from_json, algebra_to_json, cocycle_from_json, cocycle_to_json, dumps,
    module_from_json, module_to_json, verdict_to_json,
)
from liecoh.theorems import classify


@pytest.mark.parametrize("name", catalog.names())
def test_algebra_round_trip(name):
    L = alg(name)
    d = algebra_to_json(L)
    back = algebra_from_json(json.loads(dumps(d)))
    assert back == L and back.name == L.name and back.basis_names == L.basis_names
    assert dumps(algebra_to_json(back)) == dumps(d)


def test_module_round_trip():
    for name in ("sl2", "sl2_plus_sl2", "aff1"):
        e = catalog.get(name)
        for V in list(e.modules.values()) + [adjoint(e.algebra)]:
            assert module_from_json(json.loads(dumps(module_to_json(V))), e.algebra) == V


def test_cocycle_round_trip():
    L = alg("heisenberg3")
    w = classify(L).witness
    d = cocycle_to_json(w.cocycle)
    assert d["tuples"] == [[0, 1], [0, 2], [1, 2]]
    assert cocycle_from_json(d, L, w.module) == w.cocycle


def test_rationals_canonical():
    L = LieAlgebra.from_brackets(2, {(0, 1): {1: F(6, 4)}})
    d = algebra_to_json(L)
    assert d["brackets"][0]["terms"] == [{"c": "3/2", "k": 1}]
    V = Representation(L, 1, (Matrix.from_rows([[F(3, 2)]]), Matrix.zeros(1, 1)))
    assert module_to_json(V)["action"][0] == [["3/2"]]


@pytest.mark.parametrize("bad", [
    {"brackets": []},
    {"dim": "2", "brackets": []},
    {"dim": 2},
    {"dim": 2, "brackets": [{"i": 1, "j": 0, "terms": []}]},
    {"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [{"k": 2, "c": "1"}]}]},
    {"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [{"k": 1, "c": "1/0"}]}]},
    {"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [{"k": 1, "c": 0.5}]}]},
    {"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": []}, {"i": 0, "j": 1, "terms": []}]},
    {"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [{"k": 1, "c": "1"}, {"k": 1, "c": "2"}]}]},
    {"dim": 2, "basis": ["x"], "brackets": []},
    {"dim": -1, "brackets": []},
    [],
])
def test_algebra_rejects(bad):
    with pytest.raises(InvalidInput):
        algebra_from_json(bad)


@pytest.mark.parametrize("bad", [
    {"dim": 1, "action": [[["1"]]]},
    {"dim": 1, "action": [[["1"]], [["1", "0"]]]},
    {"dim": 2, "action": [[["1"]], [["1"]]]},
    {"dim": 1, "action": [[["x"]], [["0"]]]},
])
def test_module_rejects(bad):
    with pytest.raises(InvalidInput):
        module_from_json(bad, alg("aff1"))


def test_cocycle_rejects_partial_tuples():
    L = alg("heisenberg3")
    w = classify(L).witness
    d = cocycle_to_json(w.cocycle)
    d["tuples"] = d["tuples"][:2]
    d["values"] = d["values"][:2]
    with pytest.raises(InvalidInput):
        cocycle_from_json(d, L, w.module)


def test_verdict_json_shape():
    d = verdict_to_json(classify(alg("aff1")))
    assert d["case"] == "witness" and d["decomposition"] is None
    assert set(d["witness"]) == {"cocycle", "h2_dim", "module", "provenance"}
    d = verdict_to_json(classify(alg("sl2_plus_line")))
    assert d["witness"] is None and set(d["decomposition"]) == {"line", "semisimple"}


def test_dumps_sorted():
    assert dumps({"b": 1, "a": 2}) == '{\n  "a": 2,\n  "b": 1\n}\n'


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                       st.dictionaries(st.integers(0, 3),
                                       st.fractions(min_value=-5, max_value=5,
                                                    max_denominator=7),
                                       max_size=3),
                       max_size=4))
def test_arbitrary_tables_round_trip(table):
    table = {k: v for k, v in table.items() if k[0] != k[1]}
    L = LieAlgebra.from_brackets(4, table)
    assert algebra_from_json(json.loads(dumps(algebra_to_json(L)))) == L
