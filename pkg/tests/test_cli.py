import json
import subprocess
import sys

import pytest

from semiform import cli
from semiform.suites import SuiteResult


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out or err)


def test_gauss_golden(capsys):
    code, out, _ = run(capsys, "gauss", "--n", "2", "--k", "2", "--json")
    assert code == 0
    assert out == '{"status":"ok","command":"gauss","n":2,"k":2,"coeffs":[1,1,2,1,1]}\n'


def test_pcount_list(capsys):
    code, data = run_json(capsys, "pcount", "--k", "2", "--n", "2", "--m", "2", "--list")
    assert code == 0 and data["count"] == 2 and data["partitions"] == [[2, 0], [1, 1]]


def test_delta_table(capsys):
    _, data = run_json(capsys, "delta", "--k", "4", "--n", "4")
    assert data["delta"] == [1, 0, 1, 1, 2, 0, 2, 0, 1]


def test_basis_quartic(capsys):
    code, data = run_json(capsys, "basis", "--n", "4", "--k", "4", "--m", "6")
    assert code == 0 and data["dimension"] == 2 and len(data["basis"]) == 2


def test_basis_Q_space(capsys):
    _, data = run_json(capsys, "basis", "--n", "4", "--k", "4", "--m", "6", "--space", "Q")
    assert data["dimension"] == 7


def test_apply_from_file(capsys, tmp_path):
    src = tmp_path / "cube.json"
    src.write_text(json.dumps({"n": 3, "terms": [{"exponents": [3, 0, 0, 0], "coeff": "1/1"}]}), encoding="utf-8")
    code, data = run_json(capsys, "apply", "--op", "Delta", "--pow", "3", "--in", str(src))
    assert code == 0
    assert data["result"]["text"] == "18*a0^2*a3 + 324*a0*a1*a2 + 162*a1^3"
    assert data["result"]["json"]["terms"][0] == {"exponents": [2, 0, 0, 1], "coeff": "18/1"}


def test_shear_vertical(capsys):
    _, data = run_json(capsys, "shear", "--dir", "v", "--poly", "a3", "--n", "6")
    assert [c["text"] for c in data["coefficients"]] == ["a3", "3*a4", "3*a5", "a6"]


def test_verify_hilbert(capsys):
    code, data = run_json(capsys, "verify", "hilbert", "--n", "5", "--k", "4", "--lambda", "4,2,1,0", "--i", "3")
    assert code == 0 and data["status"] == "ok" and data["residual"]["text"] == "0"


@pytest.mark.parametrize("what", ["taylor", "semi"])
def test_verify_polynomial_checks(capsys, what):
    code, data = run_json(capsys, "verify", what, "--poly", "a0a2 - a1^2", "--n", "2")
    assert code == 0, data


def test_verify_census(capsys):
    _, data = run_json(capsys, "verify", "diagrams", "--n", "5", "--k", "4",
                       "--lambda", "4,2,1,0", "--i", "3", "--mode", "census")
    assert (data["pm_factor"], data["mp_factor"], data["difference_factor"]) == (33, 21, 12)


def test_sylvester_command(capsys):
    _, data = run_json(capsys, "sylvester", "--n", "4", "--k", "4", "--m", "6")
    assert (data["p"], data["delta"], data["rank"], data["nullity"]) == (7, 2, 5, 2)
    assert data["chain_dims"][0] == sum(data["kernel_dims"]) and data["telescopes"]


def test_suite_tsv(capsys):
    code, out, _ = run(capsys, "suite", "sylvester", "--max-n", "2", "--max-k", "2", "--tsv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].split("\t") == ["n", "k", "m", "p", "delta", "rank", "nullity", "surjective", "injective"]
    assert lines[-1].split("\t") == ["2", "2", "2", "2", "1", "1", "1", "true", "true"]


def test_suite_box_and_seed(capsys):
    code, data = run_json(capsys, "suite", "hilbert", "--box", "3x3", "--max-i", "4")
    assert code == 0 and data["checked"] == data["passed"] > 0
    _, a = run_json(capsys, "suite", "taylor", "--seed", "7", "--count", "5")
    _, b = run_json(capsys, "suite", "taylor", "--seed", "7", "--count", "5")
    assert a == b


def test_additivity(capsys):
    code, data = run_json(capsys, "additivity", "--n", "5", "--k1", "5", "--k2", "8", "--m", "10")
    assert code == 0 and data["case"] == "product" and [data["m1"], data["m2"]] == [8, 2]


def test_human_output_is_aligned(capsys):
    _, out, _ = run(capsys, "gauss", "--n", "1", "--k", "1")
    assert out.splitlines()[0] == "status   ok"


def test_exit_error_on_bad_partition(capsys):
    code, out, err = run(capsys, "verify", "hilbert", "--n", "2", "--k", "2", "--lambda", "3,1")
    assert code == 2 and out == "" and "index 0" in err


def test_exit_error_on_inadmissible_additivity(capsys):
    code, data = run_json(capsys, "additivity", "--n", "2", "--k1", "2", "--k2", "2", "--m", "2")
    assert code == 2 and data["status"] == "error"


def test_exit_unknown_command(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["bogus"])
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_exit_capacity(capsys, monkeypatch):
    monkeypatch.setenv("SEMIFORM_MAX_DIM", "5")
    code, data = run_json(capsys, "basis", "--n", "7", "--k", "6", "--m", "20")
    assert code == 3 and data["status"] == "capacity"


def test_exit_violation_reports_counterexample(capsys, monkeypatch):
    def broken(name, cfg):
        res = SuiteResult(name)
        res.record(True, {"n": 1})
        res.record(False, {"n": 2, "why": "forced"})
        return res
    monkeypatch.setattr(cli, "run_suite", broken)
    code, data = run_json(capsys, "suite", "taylor")
    assert code == 1 and data["status"] == "violation"
    assert data["first_failure"] == {"n": 2, "why": "forced"}


def test_timing_is_opt_in(capsys):
    _, plain = run_json(capsys, "gauss", "--n", "3", "--k", "3")
    _, timed = run_json(capsys, "gauss", "--n", "3", "--k", "3", "--timing")
    assert "timing_ms" not in plain and timed["timing_ms"] >= 0


def test_module_entry_point_and_stdin():
    poly = json.dumps({"n": 2, "terms": [{"exponents": [1, 0, 1], "coeff": "1"}, {"exponents": [0, 2, 0], "coeff": "-1"}]})
    proc = subprocess.run(
        [sys.executable, "-m", "semiform", "verify", "semi", "--in", "-", "--json"],
        input=poly, capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["semi_invariant"] == {"operator": True, "shear": True}


def test_byte_identical_runs(capsys):
    argv = ["basis", "--n", "5", "--k", "4", "--m", "8", "--json"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
