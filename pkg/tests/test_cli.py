import io
import json

import pytest

from hecke_quiver.cli import main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_validate_bundled():
    assert run("validate", "examples/a2_cell.json")[0] == 0


def test_validate_tampered(tmp_path):
    code, text = run("examples", "a2_cell")
    obj = json.loads(text)
    obj["wgraph_edges"][0]["mu"] = "2"
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(obj))
    code, out = run("validate", str(f), "--format", "json")
    rep = json.loads(out)
    assert code == 1 and not rep["pass"]
    assert any(w.get("pair") == ["r1", "r2"] for w in rep["witnesses"])


def test_schema_error(tmp_path):
    f = tmp_path / "g.json"
    f.write_text(json.dumps({"coxeter": {"generators": ["r"], "matrix": [[1]]},
                             "vertices": [{"id": "x"}], "edges": [{"target": "x", "source": "q"}]}))
    assert run("validate", str(f))[0] == 2
    f.write_text("{not json")
    assert run("validate", str(f))[0] == 2
    assert run("validate", "missing.json")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("generators", "b3_cell", "--bogus")[0] == 2


def test_generators_json_lines():
    code, out = run("generators", "b3_cell", "--format", "json")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(recs) == 6
    assert all(set(r) >= {"r", "s", "x", "i", "body"} for r in recs)


def test_generators_modes():
    raw = run("generators", "b3_cell", "--raw")[1].splitlines()
    split = run("generators", "b3_cell", "--split")[1].splitlines()
    assert len(raw) == 13 and len(split) == 17


def test_via_universal_agrees():
    for name in ("b3_cell", "asymptotic_b3", "one_vertex", "a2_cell", "psi_example"):
        code, out = run("generators", name, "--via-universal")
        assert code == 0, name


def test_universal_verify():
    code, out = run("universal", "--m", "4", "--verify")
    assert code == 0 and out.strip().endswith("MATCH")
    code, out = run("universal", "--m", "3", "--verify", "--format", "json")
    assert json.loads(out)["verdict"] == "MATCH"
    assert run("universal", "--m", "1")[0] == 2
    assert run("universal", "b3_cell", "--pair", "r2,r3", "--verify")[0] == 0


def test_dual_command():
    code, out = run("dual", "b3_cell", "--format", "json", "--cases", "30")
    rep = json.loads(out)
    assert code == 0 and rep["pass"]
    assert {"id": "y^d", "labels": ["r1", "r3"]} in rep["dual"]["vertices"]
    code, out = run("dual", "psi_example", "--format", "json", "--cases", "10")
    assert code == 0 and json.loads(out)["notes"]


def test_check_dgraph_command():
    assert run("check-dgraph", "b3_cell", "--cases", "20")[0] == 0
    assert run("check-dgraph", "psi_example")[0] == 2


def test_examples_listing():
    code, out = run("examples")
    assert "b3_cell" in out.split()
    assert run("examples", "nope")[0] == 2


def test_deterministic_output(monkeypatch):
    a = run("dual", "b3_cell", "--seed", "7", "--cases", "20", "--format", "json")[1]
    b = run("dual", "b3_cell", "--seed", "7", "--cases", "20", "--format", "json")[1]
    assert a == b
    one = run("generators", "b3_cell", "--raw", "--threads", "1")[1]
    monkeypatch.setenv("HQ_THREADS", "2")
    two = run("generators", "b3_cell", "--raw", "--threads", "1")[1]
    assert one == two
