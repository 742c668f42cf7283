import csv
import io
import json
import subprocess
import sys

import jsonschema
import pytest

from dessinfilt.cli import run

import schemas


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def ok(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return out


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
        return str(p)
    return write


@pytest.fixture(autouse=True)
def no_env_cache(monkeypatch):
    monkeypatch.delenv("DESSIN_CACHE_DIR", raising=False)


ONE = {"edges": 1, "sigma0": [0], "sigma1": [0]}
CYCLE3 = {"edges": 3, "sigma0": [1, 2, 0], "sigma1": [1, 2, 0]}


def test_enumerate():
    obj = json.loads(ok("enumerate", "--edges", "2"))
    assert obj["count"] == 4 and len(obj["keys"]) == 4
    assert json.loads(ok("enumerate", "--edges", "3", "--connected"))["count"] == 7
    assert ok("enumerate", "--edges", "1", "--format", "text").strip() == "1:0/0"


def test_enumerate_uses_cache(tmp_path, monkeypatch):
    ok("enumerate", "--edges", "3", "--cache-dir", str(tmp_path / "c"))
    assert (tmp_path / "c" / "dessins_n3_all.jsonl").exists()
    monkeypatch.setenv("DESSIN_CACHE_DIR", str(tmp_path / "env"))
    ok("enumerate", "--edges", "2", "--cache-dir", str(tmp_path / "c"))
    assert (tmp_path / "env" / "dessins_n2_all.jsonl").exists()


def test_canon_and_invariants(files):
    f = files("c.json", CYCLE3)
    obj = json.loads(ok("canon", f))
    jsonschema.validate(obj["dessin"], schemas.DESSIN)
    inv = json.loads(ok("invariants", f))
    assert inv["genus"] == 1 and inv["monodromy_order"] == 3 and inv["connected"]
    assert inv["passport"]["face_degrees"] == [3]
    rows = list(csv.reader(io.StringIO(ok("invariants", f, "--format", "csv"))))
    assert len(rows) == 2 and "genus" in rows[0]


def test_invariants_disconnected(files):
    inv = json.loads(ok("invariants", files("d.json", {"edges": 2, "sigma0": [0, 1], "sigma1": [0, 1]})))
    assert inv["genus"] is None and len(inv["components"]) == 2


def test_delete(files):
    obj = json.loads(ok("delete", files("c.json", {"edges": 3, "sigma0": [1, 2, 0], "sigma1": [0, 1, 2]}),
                        "--edges", "1"))
    assert obj["dessin"] == {"edges": 2, "sigma0": [1, 0], "sigma1": [0, 1]}
    assert obj["survivor_map"] == {"0": 0, "2": 1}


def test_expand(files):
    obj = json.loads(ok("expand", files("d.json", {"edges": 2, "sigma0": [1, 0], "sigma1": [1, 0]}),
                        "--optional", "0,1"))
    jsonschema.validate(obj, schemas.VECTOR)
    assert {t["key"]: t["coeff"] for t in obj["terms"]} == {"0:/": "1/1", "1:0/0": "-2/1", "2:1,0/1,0": "1/1"}
    assert ok("expand", files("e.json", ONE), "--optional", "0", "--format", "text").split() == ["-1/1", "[0:/]", "1/1", "[1:0/0]"]


def test_product_identity(files):
    f = files("one.json", ONE)
    obj = json.loads(ok("product", f, f))
    assert obj["dessin"] == ONE and obj["key"] == "1:0/0"


def test_product_bound(files):
    big = {"edges": 9, "sigma0": list(range(9)), "sigma1": list(range(9))}
    f = files("big.json", big)
    assert call("product", f, f)[0] == 2


def test_filtration_level0_full_rank():
    for kind in ("dessin", "belyi"):
        obj = json.loads(ok("filtration", "--window", "3", "--level", "0", "--kind", kind))
        assert obj["rank"] == obj["dim"] == 17
    obj = json.loads(ok("filtration", "--window", "3", "--level", "0", "--no-empty"))
    assert obj["rank"] == obj["dim"] == 16


def test_compare_level1():
    obj = json.loads(ok("compare", "--window", "3", "--level", "1"))
    jsonschema.validate(obj, schemas.REPORT)
    assert obj["rank_dessin"] == obj["rank_belyi_inner"] == 16
    assert obj["belyi_in_dessin"] and obj["dessin_in_belyi_inner"]
    rows = list(csv.reader(io.StringIO(ok("compare", "--window", "2", "--level", "1", "--format", "csv"))))
    assert "witnesses" not in rows[0] and "witness_count" in rows[0]


def test_quotients():
    obj = json.loads(ok("quotients", "--window", "3", "--max-level", "2"))
    assert [r["quotient_dimension"] for r in obj["levels"]][:1] == [1]
    assert all(r["spanning_claim"] for r in obj["levels"])


def test_export_dot(files):
    out = ok("export-dot", files("one.json", ONE))
    assert out.startswith("graph dessin {") and "b0 -- w0" in out
    assert "dot" in json.loads(ok("export-dot", files("one.json", ONE), "--format", "json"))


def test_check():
    obj = json.loads(ok("check", "--seed", "3", "--scale", "0.05"))
    assert set(obj["violations"].values()) == {0}


@pytest.mark.parametrize("argv", [
    ("compare", "--window", "3", "--level", "2"),
    ("quotients", "--window", "3", "--max-level", "1", "--format", "csv"),
    ("enumerate", "--edges", "4"),
    ("check", "--seed", "7", "--scale", "0.02"),
])
def test_deterministic_output(argv):
    assert ok(*argv) == ok(*argv)


def test_usage_errors():
    assert call()[0] == 1
    assert call("frobnicate")[0] == 1
    assert call("compare", "--window", "3")[0] == 1
    assert call("compare", "--window", "3", "--level", "0")[0] == 1
    assert call("delete", "x.json", "--edges", "a,b")[0] == 1


def test_bound_and_validation_errors(files, tmp_path):
    assert call("filtration", "--window", "7", "--level", "1")[0] == 2
    assert call("compare", "--window", "3", "--level", "5")[0] == 2
    assert call("enumerate", "--edges", "9")[0] == 2
    assert call("canon", files("bad.json", "{oops"))[0] == 2
    assert call("canon", files("np.json", {"edges": 2, "sigma0": [0, 0], "sigma1": [0, 1]}))[0] == 2
    assert call("canon", str(tmp_path / "missing.json"))[0] == 2
    assert call("delete", files("one.json", ONE), "--edges", "3")[0] == 2


def test_corrupt_cache_is_reported(tmp_path):
    ok("enumerate", "--edges", "2", "--cache-dir", str(tmp_path))
    p = tmp_path / "dessins_n2_all.jsonl"
    lines = p.read_text().splitlines()
    lines[2] = "garbage"
    p.write_text("\n".join(lines) + "\n")
    code, _, err = call("enumerate", "--edges", "2", "--cache-dir", str(tmp_path))
    assert code == 2 and "dessins_n2_all.jsonl:3" in err


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "dessinfilt", "enumerate", "--edges", "2", "--format", "text"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and len(r.stdout.split()) == 4


def test_threads_do_not_change_output():
    argv = ("compare", "--window", "3", "--level", "2")
    assert ok(*argv, "--threads", "2") == ok(*argv)
