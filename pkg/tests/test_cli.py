import json
import subprocess
import sys

import jsonschema
import pytest

from twisted_steenrod import theorems
from twisted_steenrod.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_adem(capsys):
    code, out, _ = run(capsys, "adem", "Sq2 Sq2")
    assert code == 0 and out.strip() == "Sq3 Sq1"


def test_adem_json(capsys):
    code, out, _ = run(capsys, "adem", "Sq2 Sq3", "--format", "json")
    assert json.loads(out) == {"input": "Sq2 Sq3", "result": "Sq5 + Sq4 Sq1"}


def test_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "adem", "Sq2 | i1")
    assert code == 2 and "position" in err


def test_usage_error_exit_2(capsys):
    assert run(capsys, "verify", "bogus")[0] == 2
    assert run(capsys, "series", "A", "--max-degree", "-3")[0] == 2
    assert run(capsys)[0] == 2


def test_mul(capsys):
    assert run(capsys, "mul", "1 | Sq1", "i1 | 1")[1].strip() == "i1^2 | 1 + i1 | Sq1"
    assert run(capsys, "mul", "Sq1", "i1")[1].strip() == "i1^2 | 1 + i1 | Sq1"
    assert run(capsys, "mul", "i1", "Sq1 i2")[1].strip() == "i1 (Sq1 i2)"
    assert run(capsys, "mul", "w1", "i1")[0] == 2


def test_coprod(capsys):
    code, out, _ = run(capsys, "coprod", "Sq2")
    assert code == 0 and out.strip() == "1 (x) Sq2 + Sq1 (x) Sq1 + Sq2 (x) 1"
    code, out, _ = run(capsys, "coprod", "i2")
    assert "(i1 | 1) (x) (i1 | 1)" in out


def test_phi_psi(capsys):
    assert run(capsys, "phi", "Sq1")[1].strip() == "i1 | 1 + 1 | Sq1"
    assert run(capsys, "psi", "1 | Sq2")[1].strip() == "i2 | 1 + i1 | Sq1 + 1 | Sq2"
    # psi fixes H*(K), so it sends i1 + Sq1 back to Sq1
    assert run(capsys, "psi", "i1 | 1 + 1 | Sq1")[1].strip() == "1 | Sq1"
    assert run(capsys, "phi", "Sq4")[0] == 2


def test_series(capsys):
    code, out, _ = run(capsys, "series", "twisted-A", "--max-degree", "10")
    assert out.split() == "1 2 4 8 13 21 33 49 71 102 142".split()
    code, out, _ = run(capsys, "series", "A1", "--max-degree", "7", "--format", "json")
    assert json.loads(out)["dims"] == [1, 1, 1, 2, 1, 1, 1, 0]


def test_basis(capsys):
    code, out, _ = run(capsys, "basis", "A1", "5")
    assert out.strip() == "Sq5 + Sq4 Sq1"
    code, out, _ = run(capsys, "basis", "BO", "2", "--vars", "4")
    assert out.split("\n")[:2] == ["w2", "w1^2"] or set(out.split()) >= {"w2", "w1^2"}


def test_realize(tmp_path, capsys):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"algebra": "A1", "generators": [{"name": "g", "degree": 0}],
                                "relations": [[{"coef": "Sq3", "gen": "g"}]]}))
    code, out, _ = run(capsys, "realize", str(path), "--max-degree", "6", "--format", "json", "--actions")
    data = json.loads(out)
    assert code == 0 and data["dims"] == [1, 1, 1, 1, 1, 0, 0]
    assert set(data["actions"]) == {"Sq1", "Sq2"}


def test_realize_bad_files(tmp_path, capsys):
    assert run(capsys, "realize", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"algebra": "A1", "generators": [{"name": "g", "degree": 0}],
                               "relations": [[{"coef": "Sq1", "gen": "h"}]]}))
    assert run(capsys, "realize", str(bad))[0] == 2


def test_verify_appendix_text(capsys):
    code, out, _ = run(capsys, "verify", "appendix")
    assert code == 0
    assert "1 | Sq3 Sq1" in out and "PASS" in out


@pytest.mark.parametrize("name", ["appendix", "k2o", "sq3kappa", "thom"])
def test_verify_json_schema(capsys, name):
    code, out, _ = run(capsys, "verify", name, "--max-degree", "8", "--format", "json")
    assert code == 0
    jsonschema.validate(json.loads(out), theorems.REPORT_SCHEMA)


def test_verify_failure_exit_1(capsys, monkeypatch):
    failing = theorems.CheckReport("k2o", 1, [theorems.LedgerEntry(0, 1, 2)])
    monkeypatch.setitem(theorems.CHECKS, "k2o", lambda n, v: failing)
    code, out, _ = run(capsys, "verify", "k2o")
    assert code == 1 and "FAIL" in out


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "all", "--max-degree", "16", "--format", "json")
    reports = json.loads(out)
    assert code == 0
    assert [r["check"] for r in reports] == sorted(r["check"] for r in reports)
    for r in reports:
        jsonschema.validate(r, theorems.REPORT_SCHEMA)
        assert r["status"] == "pass"


def test_census_and_conjecture(capsys):
    code, out, _ = run(capsys, "census", "--max-degree", "12")
    assert code == 0 and "JokerQuot" in out
    assert run(capsys, "census", "--max-degree", "40")[0] == 2
    code, out, _ = run(capsys, "conjecture", "--max-degree", "6", "--format", "json")
    assert code == 0 and json.loads(out)["status"] == "info"


def test_schema_command(capsys):
    code, out, _ = run(capsys, "schema")
    assert code == 0 and json.loads(out) == theorems.REPORT_SCHEMA


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "twisted_steenrod", "adem", "Sq1 Sq2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "Sq3"
