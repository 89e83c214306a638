import json
import subprocess
import sys

import pytest

from conftest import alg
from liecoh import catalog
from liecoh.cli import main
from liecoh.liealg import validate
from liecoh.serialize import (
    algebra_from_json, algebra_to_json, dumps, module_from_json, module_to_json,
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name in ("aff1", "abelian2", "sl2", "heisenberg3", "sl2_semidirect_natural"):
        p = tmp_path / f"{name}.json"
        p.write_text(dumps(algebra_to_json(alg(name))))
        paths[name] = str(p)
    d = algebra_to_json(alg("sl2"))
    for b in d["brackets"]:
        if (b["i"], b["j"]) == (0, 1):
            b["terms"] = [{"c": "-1", "k": 0}]
    p = tmp_path / "bad_sl2.json"
    p.write_text(dumps(d))
    paths["bad"] = str(p)
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    paths["broken"] = str(p)
    p = tmp_path / "natural.json"
    p.write_text(dumps(module_to_json(catalog.get("sl2").modules["natural"])))
    paths["natural"] = str(p)
    return paths


def test_classify_aff1(capsys, files):
    code, out, _ = run(capsys, "classify", files["aff1"], "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["case"] == "witness" and d["witness"]["provenance"] == "codim1-nonsplit"


def test_classify_text(capsys, files):
    code, out, _ = run(capsys, "classify", files["sl2"])
    assert code == 0 and out.startswith("case: semisimple")


def test_validate(capsys, files):
    assert run(capsys, "validate", files["sl2"])[0] == 0
    code, out, _ = run(capsys, "validate", files["bad"])
    assert code == 1 and "jacobi" in out
    assert validate(algebra_from_json(json.load(open(files["bad"])))) is not None


def test_invalid_inputs_exit_1(capsys, files, tmp_path):
    assert run(capsys, "classify", files["broken"])[0] == 1
    assert run(capsys, "classify", str(tmp_path / "missing.json"))[0] == 1
    assert run(capsys, "classify", files["bad"])[0] == 1
    assert run(capsys, "cohomology", "-n", "5", files["aff1"])[0] == 1
    assert run(capsys, "cohomology", "-n", "-1", files["aff1"])[0] == 1
    assert run(capsys, "cohomology", files["aff1"])[0] == 1
    assert run(capsys, "catalog", "show", "nope")[0] == 1
    assert run(capsys, "frobnicate")[0] == 1


def test_cohomology_examples(capsys, files):
    code, out, _ = run(capsys, "cohomology", "-n", "2", files["abelian2"])
    assert code == 0 and "dim H^2 = 1" in out
    code, out, _ = run(capsys, "cohomology", "-n", "1", files["sl2"], files["natural"],
                       "--format", "json")
    assert code == 0 and json.loads(out)["dim_H"] == 0
    code, out, _ = run(capsys, "cohomology", "-n", "2", "catalog:heisenberg3", "adjoint",
                       "--format", "json")
    assert json.loads(out)["dim_H"] == 5


def test_invariants(capsys, files):
    code, out, _ = run(capsys, "invariants", files["sl2"], "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["killing_det"] == "-128" and d["flags"]["semisimple"]
    code, out, _ = run(capsys, "invariants", files["sl2_semidirect_natural"], "--format", "json")
    d = json.loads(out)
    assert len(d["levi"]) == 3 and len(d["radical"]) == 2


def test_verify_commands(capsys, files):
    code, out, _ = run(capsys, "verify", "dixmier", files["aff1"], "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["holds"] and [r["params"]["n"] for r in d["reports"]] == [1, 2, 3]
    code, out, _ = run(capsys, "verify", "dixmier", files["aff1"], "--ideal", "[[0, 1]]",
                       "--x", "[1, 0]", "-n", "1", "--module", "adjoint")
    assert code == 0 and "ok" in out
    code, out, _ = run(capsys, "verify", "hs", files["sl2_semidirect_natural"],
                       "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["reports"][0]["terms"] == {"E2[0,2]": 1, "E2[1,1]": 0, "E2[2,0]": 0}
    code, out, _ = run(capsys, "verify", "kunneth", files["sl2"], files["abelian2"])
    assert code == 0 and out.count("ok") == 4
    code, out, _ = run(capsys, "verify", "whitehead", files["sl2"], "--extra", files["natural"],
                       "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["holds"] and any(m["name"] == files["natural"] for m in d["modules"])
    code, out, _ = run(capsys, "verify", "nilpotent-h2", files["heisenberg3"], "--format", "json")
    assert code == 0 and json.loads(out)["h_dims"] == [1, 2, 2, 1]
    code, out, _ = run(capsys, "verify", "h1-probe", files["aff1"])
    assert code == 0 and "dim H^1 = 1" in out


def test_verify_precondition_errors(capsys, files):
    assert run(capsys, "verify", "whitehead", files["aff1"])[0] == 1
    assert run(capsys, "verify", "nilpotent-h2", files["aff1"])[0] == 1
    assert run(capsys, "verify", "dixmier", files["sl2"])[0] == 1
    assert run(capsys, "verify", "dixmier", files["aff1"], "--ideal", "[[0, 1]]")[0] == 1
    assert run(capsys, "verify", "dixmier", files["aff1"], "--ideal", "[[1, 0]]",
               "--x", "[0, 1]")[0] == 1
    assert run(capsys, "verify", "whitehead", files["sl2"], "--max-module-dim", "0")[0] == 1


def test_catalog_list_and_show(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and out.split() == catalog.names()
    code, out, _ = run(capsys, "catalog", "show", "aff1", "--expected")
    assert json.loads(out)["verdict"]["value"] == "witness"


@pytest.mark.parametrize("name", catalog.names())
def test_catalog_show_reparses(capsys, name, tmp_path):
    code, out, _ = run(capsys, "catalog", "show", name)
    assert code == 0
    L = algebra_from_json(json.loads(out))
    assert L == alg(name) and validate(L) is None
    assert dumps(algebra_to_json(L)) == out
    p = tmp_path / "a.json"
    p.write_text(out)
    assert run(capsys, "validate", str(p))[0] == 0
    for m, V in catalog.get(name).modules.items():
        code, out, _ = run(capsys, "catalog", "show", name, "--module", m)
        assert module_from_json(json.loads(out), L) == V


def test_deterministic_json(capsys, files):
    outs = [run(capsys, "classify", files["heisenberg3"], "--format", "json")[1]
            for _ in range(2)]
    assert outs[0] == outs[1]


def test_module_entry_point(files):
    r = subprocess.run([sys.executable, "-m", "liecoh", "cohomology", "-n", "2", files["abelian2"]],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "dim H^2 = 1" in r.stdout
