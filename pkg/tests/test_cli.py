import json

import pytest

import quasiflags.cli as cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_main_command(capsys):
    code, out, _ = run_cli(capsys, "verify-main", "--n", "2", "--max-degree", "4",
                           "--trials", "2", "--seed", "3")
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] == "pass"
    assert report["command"] == "verify-main"


def test_verify_toda_command(capsys):
    code, out, _ = run_cli(capsys, "verify-toda", "--n", "2", "--max-degree", "4",
                           "--trials", "2", "--seed", "3")
    assert code == 0
    assert json.loads(out)["verdict"] == "pass"


def test_properties_command(capsys):
    code, out, _ = run_cli(capsys, "properties", "--n", "3", "--max-degree", "3",
                           "--seed", "4")
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] == "pass"
    assert all(rec["passed"] for rec in report["records"])


def test_explicit_point_flags(capsys):
    code, out, _ = run_cli(capsys, "verify-main", "--n", "2", "--max-degree", "5",
                           "--seed", "1", "--a", "7/3,-7/3", "--m", "3/2")
    assert code == 0
    report = json.loads(out)
    assert report["parameters"]["explicit_point"]["m"] == "3/2"


def test_exit_code_nongeneric(capsys):
    code, out, err = run_cli(capsys, "verify-main", "--n", "2", "--max-degree", "4",
                             "--seed", "1", "--a", "1,-1", "--m", "1")
    assert code == 2
    assert out == ""
    assert "genericity" in err


def test_exit_code_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["verify-main", "--a", "1,2,3"])   # wrong length and sum
    assert excinfo.value.code == 3


def test_exit_code_identity_failure(capsys, monkeypatch):
    fake = {"command": "verify-main", "parameters": {}, "trials": [],
            "verdict": "fail"}
    monkeypatch.setattr(cli, "verify_main", lambda *a, **k: fake)
    code, out, err = run_cli(capsys, "verify-main", "--n", "2")
    assert code == 1
    assert json.loads(out)["verdict"] == "fail"


def test_inspect_fixed_points(capsys):
    code, out, _ = run_cli(capsys, "inspect", "fixed-points", "--n", "3",
                           "--gamma", "1,1")
    assert code == 0
    report = json.loads(out)
    assert report["count"] == 2
    assert report["tableaux"] == [[1, 0, 1], [1, 1, 0]]


def test_inspect_tangent_weights(capsys):
    code, out, _ = run_cli(capsys, "inspect", "tangent-weights", "--n", "2",
                           "--tableau", "1")
    assert code == 0
    report = json.loads(out)
    weights = {(tuple(w["a_coeffs"]), w["x_coeff"]) for w in report["weights"]}
    assert weights == {((0, 0), 1), ((-1, 1), 1)}


def test_inspect_character(capsys):
    code, out, _ = run_cli(capsys, "inspect", "character", "--n", "2",
                           "--tableau", "2", "--tableau2", "1")
    assert code == 0
    report = json.loads(out)
    assert report["total_multiplicity"] == 3


def test_inspect_series_cs(capsys):
    code, out, _ = run_cli(capsys, "inspect", "series", "--kind", "cs", "--n", "2",
                           "--max-degree", "2", "--a", "7/3,-7/3", "--m", "3/2")
    assert code == 0
    report = json.loads(out)
    gammas = [c["gamma"] for c in report["coefficients"]]
    assert gammas == ["0", "1", "2"]
    assert report["coefficients"][0]["value"] == "1"


def test_inspect_series_denominator(capsys):
    code, out, _ = run_cli(capsys, "inspect", "series", "--kind", "denominator",
                           "--n", "2", "--max-degree", "3", "--m", "2")
    assert code == 0
    report = json.loads(out)
    values = {c["gamma"]: c["value"] for c in report["coefficients"]}
    assert values == {"0": "1", "1": "3", "2": "6", "3": "10"}
