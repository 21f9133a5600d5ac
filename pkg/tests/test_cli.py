import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from gradloci.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_INPUT, EXIT_OK, main
from gradloci.ideals import Budget, Ideal, ideals_equal, set_default_budget
from gradloci.polyring import RingSpec

DESC = Path(__file__).resolve().parent.parent / "descriptors"


@pytest.fixture(autouse=True)
def _reset_budget():
    yield
    set_default_budget(Budget())


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_OK, err
    body = json.loads(out)
    body.pop("timings", None)
    return body


@pytest.mark.parametrize(
    "name, mode",
    [
        ("ex6_7", "sing0"),
        ("ex6_7", "singv"),
        ("ex6_10", "sings"),
        ("ex4_6", "invariants"),
        ("ex3_2", "curve"),
        ("ex5_linmatrix", "lin-matrix"),
        ("ex6_8", "point"),
    ],
)
def test_analyze_is_deterministic(capsys, name, mode):
    a = run_json(capsys, "analyze", DESC / f"{name}.json", "--mode", mode)
    b = run_json(capsys, "analyze", DESC / f"{name}.json", "--mode", mode)
    assert a == b
    assert a["inputs_digest"]


def test_sing0_generators_roundtrip(capsys):
    body = run_json(capsys, "analyze", DESC / "ex6_7.json", "--mode", "sing0")
    gens = body["results"]["ideal"]
    base = RingSpec(("a",), ())
    assert ideals_equal(Ideal(base, gens), Ideal(base, ["a^2"]))


def test_singv_cells(capsys):
    body = run_json(capsys, "analyze", DESC / "ex6_10.json", "--mode", "singv", "--verbose")
    res = body["results"]
    assert "groebner_system" in res and "strata" in res
    assert sorted(res["strata"]) == ["0", "1", "2"]


def test_bbs_summary(capsys):
    body = run_json(capsys, "bbs", DESC / "bbs_1xyzz2.json")
    res = body["results"]
    assert (res["mu"], res["nu"], res["num_c"], res["num_generators"]) == (5, 8, 40, 60)
    assert res["lin_dimension"] == 19


def test_fixture_exit_codes(capsys):
    code, out, _ = run(capsys, "fixtures", "ex6_10")
    assert code == EXIT_OK and out.startswith("PASS ex6_10")
    code, out, _ = run(capsys, "fixtures", "ex6_7")
    assert code == EXIT_FAIL and "NO " in out


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "fixtures", "nope")[0] == EXIT_INPUT
    assert run(capsys, "analyze", tmp_path / "missing.json", "--mode", "sing0")[0] == EXIT_INPUT
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"params": ["a"], "vars": ["x"], "generators": ["a*x +"]}))
    code, _, err = run(capsys, "analyze", bad, "--mode", "sing0")
    assert code == EXIT_INPUT and "input error" in err
    inhom = tmp_path / "inhom.json"
    inhom.write_text(json.dumps({"params": ["a"], "vars": ["x", "y"], "weights": [1, 2], "generators": ["x + y"], "dimension": 1}))
    assert run(capsys, "analyze", inhom, "--mode", "sing0")[0] == EXIT_INPUT
    assert run(capsys, "bbs", '[[0, 0, 0], [2, 0, 0]]')[0] == EXIT_INPUT


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "--budget", "1", "analyze", DESC / "ex6_7.json", "--mode", "singv")
    assert code == EXIT_BUDGET and "budget" in err


def test_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("GRADLOCI_BUDGET", "1")
    assert run(capsys, "analyze", DESC / "ex6_7.json", "--mode", "singv")[0] == EXIT_BUDGET


@pytest.mark.skipif(shutil.which("gradloci") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(
        ["gradloci", "analyze", str(DESC / "ex6_9.json"), "--mode", "sing0"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["results"]["ideal"] == ["a"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gradloci.cli", "fixtures", "ex5_lin0"], capture_output=True, text=True, timeout=120
    )
    assert proc.returncode == 0 and "PASS" in proc.stdout
