import json
import subprocess
import sys

import pytest
import sympy

from dahaskein import cli, suites


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_passing(capsys):
    code, out, err = run(capsys, "verify", "theta4", "--n", "2")
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == suites.SCHEMA
    assert rep["summary"]["failed"] == 0
    ids = [r["id"] for r in rep["checks"]]
    assert ids == sorted(ids)
    assert {"theta4/full-twist/x1", "theta4/full-twist/y1", "theta4/full-twist/s1"} <= set(ids)
    assert rep["convention"]["label"] == "q_exp=+1 shift=-1 y_power=+1 t_flip=no"
    assert "wall_time_s" not in out
    assert "running theta4" in err


def test_spec_examples(capsys):
    code, out, _ = run(capsys, "verify", "daha-relations", "--n", "2", "--box", "2")
    rep = json.loads(out)
    assert code == 0
    families = {r["id"].split("/")[1] for r in rep["checks"]}
    # braid, far-commute and T-X-Y-commute need three strands to have instances
    assert {"quadratic", "X-Y-abelian", "X-step", "Y-step", "X1-Y2", "Y1-twist"} <= families
    code, out, _ = run(capsys, "verify", "pw-comparison", "--n", "2", "--m-max", "2")
    assert code == 0
    assert sum(r["id"].startswith("pw-comparison/spherical/") for r in json.loads(out)["checks"]) == 8


def test_verify_failing(capsys, monkeypatch):
    def broken(cfg):
        return [suites.Check("hecke/broken", "a check that cannot pass", {}, lambda: suites.Result(False, "distinct", "X1"))]

    monkeypatch.setitem(suites.SUITES, "hecke", broken)
    code, out, err = run(capsys, "verify", "--suite", "hecke", "--format", "text")
    assert code == 1
    assert "FAIL  hecke/broken" in out and "witness: X1" in out
    assert "1 check(s) failed" in err


def test_crashing_check_fails(capsys, monkeypatch):
    def boom():
        raise ArithmeticError("nope")

    monkeypatch.setitem(suites.SUITES, "hecke", lambda cfg: [suites.Check("hecke/boom", "x", {}, boom)])
    code, out, _ = run(capsys, "verify", "hecke")
    assert code == 1
    assert json.loads(out)["checks"][0]["verdict"] == "error"


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "nonsense"],
        ["verify", "theta4", "--suite", "hecke"],
        ["verify", "theta4", "--n", "1"],
        ["verify", "theta4", "--box", "0"],
        ["verify", "theta4", "--prime", "1000003"],
        ["verify", "theta4", "--prime", "2147483649"],
        ["verify", "theta4", "--n", "two"],
        ["verify", "theta4", "--format", "xml"],
        ["element", "qtilde", "(0,0)"],
        ["element", "qtilde", "(1;2)"],
        ["element", "w", "(1,1)", "--mode", "axis"],
        ["element", "theta", "(1,0)", "--apply-to", "1"],
        ["element", "w", "(1,0)", "--apply-to", "Z3"],
        ["element", "q", "(1,0)", "--n", "1"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_prime_check_against_sympy():
    for p in list(range(0, 2000)) + [2 ** 31 - 1, 2 ** 61 - 1, 2 ** 31 + 1, 1000003 * 1000033, 3215031751]:
        assert cli.is_prime(p) == sympy.isprime(p), p


def test_env_overrides(capsys, monkeypatch):
    monkeypatch.setenv("DAHASKEIN_SUITE", "theta-series")
    monkeypatch.setenv("DAHASKEIN_M_MAX", "3")
    monkeypatch.setenv("DAHASKEIN_FORMAT", "json")
    code, out, _ = run(capsys, "verify")
    rep = json.loads(out)
    assert code == 0 and rep["suite"] == "theta-series" and rep["config"]["m_max"] == 3
    code, out, _ = run(capsys, "verify", "--m-max", "2")
    assert json.loads(out)["config"]["m_max"] == 2
    monkeypatch.setenv("DAHASKEIN_SEED", "abc")
    assert run(capsys, "verify")[0] == 2


def test_determinism_and_timings(capsys, tmp_path):
    a = run(capsys, "verify", "power-sum-central", "--seed", "5")[1]
    b = run(capsys, "verify", "power-sum-central", "--seed", "5")[1]
    assert a == b
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "power-sum-central", "--timings", "-o", str(path))
    assert code == 0
    assert all("wall_time_s" in r for r in json.loads(out)["checks"])
    assert path.read_text() == out


def test_element_outputs(capsys):
    code, out, _ = run(capsys, "element", "qtilde", "(0,2)", "--n", "2")
    assert code == 0 and out == "y1 y1 + s1 y1 s1 s1 y1 s1\n"
    code, out, _ = run(capsys, "element", "theta", "(1,0)", "--order", "2")
    first = out.splitlines()[0]
    assert first == "alpha_2 * u(2,0) + 1/2*alpha_1^2 * u(1,0) u(1,0)"
    code, out, _ = run(capsys, "element", "w", "(1,0)", "--n", "2", "--apply-to", "1")
    assert code == 0
    assert out == "(-s^2 + 1)/(s*c^2 - s) * X1 + (-s^2 + 1)/(s*c^2 - s) * X2\n"
    code, out, _ = run(capsys, "element", "q", "(0,1)", "--n", "2", "--format", "json")
    rec = json.loads(out)
    assert rec["kind"] == "q" and rec["x"] == [0, 1] and "s1 y1 s1" in rec["element"]


def test_console_script_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "dahaskein.cli", "verify", "hecke", "--format", "text"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.rstrip().endswith("(suite hecke, convention q_exp=+1 shift=-1 y_power=+1 t_flip=no)")
