"""Named example algebras with independently computed expected values."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .errors import InvalidInput
from .liealg import LieAlgebra, validate
from .rep import Representation
from .serialize import algebra_from_json, module_from_json

_PKG = "liecoh.catalog_data"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: LieAlgebra
    expected: dict = field(default_factory=dict, compare=False)
    modules: dict = field(default_factory=dict, compare=False)

    def value(self, key: str):
        """Expected value without its provenance tag."""
        return self.expected[key]["value"]


def _files():
    return resources.files(_PKG)


def names() -> list[str]:
    out = []
    for f in _files().iterdir():
        n = f.name
        if n.endswith(".json") and ".module." not in n and not n.endswith(".expected.json"):
            out.append(n[:-5])
    return sorted(out)


def raw_algebra(name: str) -> dict:
    if name not in names():
        raise InvalidInput(f"unknown catalog entry {name!r}")
    return json.loads((_files() / f"{name}.json").read_text(encoding="utf-8"))


@lru_cache(maxsize=None)
def get(name: str) -> CatalogEntry:
    L = algebra_from_json(raw_algebra(name))
    bad = validate(L)
    if bad is not None:
        raise InvalidInput(f"catalog entry {name} is invalid: {bad}")
    exp_file = _files() / f"{name}.expected.json"
    expected = json.loads(exp_file.read_text(encoding="utf-8")) if exp_file.is_file() else {}
    modules: dict[str, Representation] = {}
    prefix = f"{name}.module."
    for f in sorted(_files().iterdir(), key=lambda f: f.name):
        if f.name.startswith(prefix):
            modules[f.name[len(prefix):-5]] = module_from_json(
                json.loads(f.read_text(encoding="utf-8")), L)
    return CatalogEntry(name, L, expected, modules)


def list_names() -> list[str]:
    return names()
