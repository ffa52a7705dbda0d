import json
import subprocess
import sys

import numpy as np
import pytest

from coact import cli, kernels


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_table(capsys):
    code, out, _ = run(capsys, "build", "brandt(Z2, I=2)")
    assert code == 0 and out.startswith("elements: ")
    assert len(out.split("\n")[0].split()) == 11


def test_build_validate_only(capsys, tmp_path):
    p = tmp_path / "u2.txt"
    p.write_text("elements: 1 e\nidentity: 1\n1 e\ne e\n")
    code, out, _ = run(capsys, "build", str(p), "--validate-only")
    assert code == 0 and json.loads(out) == {"size": 2, "valid": True}


def test_build_computable(capsys):
    code, out, _ = run(capsys, "build", "bicyclic", "--radius", "1")
    assert code == 0 and json.loads(out)["ball_size"] == 3


def test_build_error_has_position(capsys):
    code, _, err = run(capsys, "build", "elements: 1 e\nidentity: 1\n1 e\ne\n")
    assert code == 2
    e = json.loads(err)
    assert e["error"] == "spec" and e["line"] == 4


def test_green(capsys):
    code, out, _ = run(capsys, "green", "U2")
    d = json.loads(out)
    assert code == 0 and d["R"] == [["1"], ["e"]] and d["regular"] and d["inverse"]


def test_cong(capsys):
    code, out, _ = run(capsys, "cong", "brandt(trivial, I=2)", "1!=0!", "--witness", "(1,1,2)", "0!")
    d = json.loads(out)
    assert code == 0 and d["num_classes"] == 1
    assert d["witnesses"][0]["related"]


def test_cong_unresolved(capsys):
    code, _, err = run(capsys, "cong", "U2", "1=x")
    assert code == 2 and "x" in json.loads(err)["message"]


def test_check_verified(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, out, _ = run(capsys, "check", "brandt_free_transfer_check", "M=Z2", "I=2",
                       'A=[[1,"g",2,"1"]]', "--json", str(out_file))
    d = json.loads(out)
    assert code == 0 and d["verified"] is True
    assert json.loads(out_file.read_text()) == d
    assert "wall_time_s" not in d


def test_check_timing(capsys):
    code, out, _ = run(capsys, "check", "brandt_zero_closure_check", "G=Z2", "I=2", "--timing")
    assert code == 0 and json.loads(out)["wall_time_s"] >= 0


def test_check_free_square(capsys):
    code, out, _ = run(capsys, "check", "free_product_check", "n_max=3", "radius=10")
    d = json.loads(out)
    assert code == 0 and d["verified"] and d["bound_relative"]


def test_check_unknown(capsys):
    code, _, err = run(capsys, "check", "nope")
    d = json.loads(err)
    assert code == 2 and "brandt_normalize" in d["available"]


def test_check_not_verified_exit_1(capsys):
    code, out, _ = run(capsys, "check", "tilde_conditions_check", "S=N3", 'M=["0"]', 'E=["1","0"]')
    assert code == 1 and json.loads(out)["verified"] is False


def test_check_list(capsys):
    code, out, _ = run(capsys, "check", "--list")
    assert code == 0 and "jclass_check" in json.loads(out)


def test_reports_byte_identical(capsys):
    a = run(capsys, "check", "rees_ideal_check", "G=Z2", "I=2", "seed=5")[1]
    b = run(capsys, "check", "rees_ideal_check", "G=Z2", "I=2", "seed=5")[1]
    assert a == b


def test_fuzz_seed1(capsys):
    code, out, _ = run(capsys, "fuzz", "--seed", "1", "--count", "50")
    assert code == 0 and json.loads(out)["ok"]


def test_fuzz_empty(capsys):
    code, out, _ = run(capsys, "fuzz", "--count", "0")
    d = json.loads(out)
    assert code == 0 and d["count"] == 0 and all(s["failures"] == 0 for s in d["suites"])


def test_fuzz_detects_injected_bug(capsys, monkeypatch):
    real = kernels.closure

    def buggy(action, mul, identity, pairs, gens):
        # forgets the last generating pair
        return real(action, mul, identity, np.ascontiguousarray(pairs[:-1]), gens)

    monkeypatch.setattr(kernels, "closure", buggy)
    code, out, _ = run(capsys, "fuzz", "--seed", "1", "--count", "30")
    d = json.loads(out)
    assert code == 1 and not d["ok"]
    oracle = next(s for s in d["suites"] if s["check"] == "oracle_equivalence")
    cex = oracle["counterexample"]
    # shrunk to a single pair that the buggy kernel drops
    assert len(cex["H"]) == 1 and cex["closure"] != cex["oracle"]


def test_console_script():
    res = subprocess.run([sys.executable, "-m", "coact.cli", "build", "U2", "--validate-only"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["valid"]


@pytest.mark.parametrize("argv", [["build", "{bad json"], ["green", "bicyclic"],
                                  ["check", "jclass_check", "S=U2"], ["check", "jclass_check", "x"]])
def test_errors_are_json(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "message" in json.loads(err)
