import json
from importlib import resources

import pytest

from liecoh import catalog
from liecoh.cohomology import cohomology
from liecoh.errors import InvalidInput
from liecoh.liealg import LieAlgebra, validate
from liecoh.rep import adjoint, trivial, validate_rep

REQUIRED = {"abelian1", "abelian2", "abelian3", "abelian4", "aff1", "heisenberg3", "n4", "sl2",
            "so3", "sl2_plus_line", "sl2_plus_sl2", "sl2_semidirect_natural", "solvable3"}


def test_minimum_entries():
    assert REQUIRED <= set(catalog.list_names())
    assert catalog.list_names() == sorted(catalog.list_names())


def test_unknown_name():
    with pytest.raises(InvalidInput):
        catalog.get("e8")


def test_examples():
    a2 = catalog.get("abelian2")
    assert a2.algebra == LieAlgebra.abelian(2) and a2.value("verdict") == "witness"
    assert catalog.get("sl2").value("verdict") == "semisimple"
    assert catalog.get("heisenberg3").value("h_trivial")[2] == 2


@pytest.mark.parametrize("name", catalog.names())
def test_entry_validates(name):
    e = catalog.get(name)
    assert validate(e.algebra) is None
    for V in e.modules.values():
        assert validate_rep(V) is None


@pytest.mark.parametrize("name", catalog.names())
def test_every_value_tagged(name):
    raw = json.loads((resources.files("liecoh.catalog_data") / f"{name}.expected.json")
                     .read_text(encoding="utf-8"))
    assert {"h_trivial", "h_adjoint", "flags", "verdict"} <= set(raw)
    for key, entry in raw.items():
        assert set(entry) == {"value", "provenance"}
        assert entry["provenance"].split(":")[0] in {"DERIVED", "THEORY"}


@pytest.mark.parametrize("name", catalog.names())
def test_cohomology_reproduces_oracle(name):
    e = catalog.get(name)
    L = e.algebra
    assert [cohomology(L, trivial(L), n).dim_H for n in range(L.dim + 1)] == e.value("h_trivial")
    assert [cohomology(L, adjoint(L), n).dim_H for n in range(L.dim + 1)] == e.value("h_adjoint")
    if e.modules:
        for mname, dims in e.value("h_modules").items():
            V = e.modules[mname]
            assert [cohomology(L, V, n).dim_H for n in range(L.dim + 1)] == dims


def test_algebra_names_match_files():
    for name in catalog.names():
        assert catalog.get(name).algebra.name == name
