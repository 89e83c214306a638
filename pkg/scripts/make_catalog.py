#!/usr/bin/env python3
"""Write the catalog algebra and module JSON files from hand-entered tables.

Run from the repository root:  python3 scripts/make_catalog.py
"""

import json
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "liecoh" / "catalog_data"

SL2 = {(0, 1): {0: -2}, (0, 2): {1: 1}, (1, 2): {2: -2}}  # basis e, h, f


def shifted(table, off):
    return {(i + off, j + off): {k + off: c for k, c in t.items()} for (i, j), t in table.items()}


def algebra(name, basis, table):
    brackets = []
    for (i, j) in sorted(table):
        assert i < j
        terms = [{"c": str(c), "k": k} for k, c in sorted(table[(i, j)].items()) if c]
        if terms:
            brackets.append({"i": i, "j": j, "terms": terms})
    return {"basis": basis, "brackets": brackets, "dim": len(basis), "name": name}


ENTRIES = {}
for n in range(1, 5):
    ENTRIES[f"abelian{n}"] = ([f"e{i}" for i in range(n)], {})
ENTRIES["aff1"] = (["x", "y"], {(0, 1): {1: 1}})
ENTRIES["heisenberg3"] = (["x", "y", "z"], {(0, 1): {2: 1}})
ENTRIES["n4"] = (["e1", "e2", "e3", "e4"], {(0, 1): {2: 1}, (0, 2): {3: 1}})
ENTRIES["sl2"] = (["e", "h", "f"], SL2)
ENTRIES["so3"] = (["e1", "e2", "e3"], {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}})
ENTRIES["sl2_plus_line"] = (["e", "h", "f", "t"], SL2)
ENTRIES["sl2_plus_abelian2"] = (["e", "h", "f", "t1", "t2"], SL2)
ENTRIES["sl2_plus_sl2"] = (["e1", "h1", "f1", "e2", "h2", "f2"], {**SL2, **shifted(SL2, 3)})
ENTRIES["sl2_semidirect_natural"] = (
    ["e", "h", "f", "v1", "v2"],
    {**SL2, (0, 4): {3: 1}, (1, 3): {3: 1}, (1, 4): {4: -1}, (2, 3): {4: 1}},
)
# derived algebra span{y, z}; ad x acts on it by a Jordan block
ENTRIES["solvable3"] = (["x", "y", "z"], {(0, 1): {1: 1}, (0, 2): {1: 1, 2: 1}})

NAT_E = [[0, 1], [0, 0]]
NAT_H = [[1, 0], [0, -1]]
NAT_F = [[0, 0], [1, 0]]
Z2 = [[0, 0], [0, 0]]

MODULES = {
    ("sl2", "natural"): [NAT_E, NAT_H, NAT_F],
    ("sl2_plus_sl2", "natural_left"): [NAT_E, NAT_H, NAT_F, Z2, Z2, Z2],
    ("sl2_plus_sl2", "natural_right"): [Z2, Z2, Z2, NAT_E, NAT_H, NAT_F],
    ("aff1", "chi1"): [[[1]], [[0]]],
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, (basis, table) in ENTRIES.items():
        path = OUT / f"{name}.json"
        path.write_text(json.dumps(algebra(name, basis, table), sort_keys=True, indent=2) + "\n")
    for (alg, mod), mats in MODULES.items():
        d = {"action": [[[str(x) for x in row] for row in m] for m in mats], "dim": len(mats[0])}
        path = OUT / f"{alg}.module.{mod}.json"
        path.write_text(json.dumps(d, sort_keys=True, indent=2) + "\n")


if __name__ == "__main__":
    main()
