"""Acceptance criteria, one test each.

Every test prints a single ``ACCEPTANCE <k> ... PASS|FAIL`` line (visible in
``pytest -v`` output and when run as a script) and then asserts the criterion,
including its runtime budget.  Equality is exact: operator identities are
certified on the monomial box R = 2, coefficient identities in Q(s, c).
"""

import os
import subprocess
import sys
import time

import pytest

from dahaskein.daha import daha_relations, oracle_equal
from dahaskein.suites import Config, build_suite, run_checks

RANK_SET = (2, 3)


def _line(k, title, ok, detail):
    text = f"ACCEPTANCE {k} {title}: {'PASS' if ok else 'FAIL'}  ({detail})"
    return text


@pytest.fixture
def say(capsys):
    def emit(k, title, ok, detail):
        with capsys.disabled():
            print("\n" + _line(k, title, ok, detail), flush=True)

    return emit


def run_suite(name, n, prefix=None, **kw):
    cfg = Config(n=n, box=2, **kw)
    checks = build_suite(name, cfg)
    if prefix is not None:
        checks = [c for c in checks if any(c.id.startswith(p) for p in prefix)]
    t0 = time.perf_counter()
    recs = run_checks(checks)
    dt = time.perf_counter() - t0
    failed = [r["id"] for r in recs if r["status"] != "pass"]
    return recs, failed, dt


def test_1_representation_gate(say):
    budget = {2: 60.0, 3: 600.0}
    nine = {"quadratic", "braid", "far-commute", "T-X-Y-commute", "X-Y-abelian",
            "X-step", "Y-step", "X1-Y2", "Y1-twist"}
    ok, parts, failed_all = True, [], []
    for n in RANK_SET:
        recs, failed, dt = run_suite("daha-relations", n)
        fams = {r["id"].split("/")[1] for r in recs} - {"gate"}
        if n == 3:
            # T_i T_j = T_j T_i for |i - j| > 1 first has instances at n = 4
            ok &= nine - {"far-commute"} <= fams
        ok &= not failed and dt < budget[n]
        failed_all += failed
        parts.append(f"n={n}: {len(recs)} checks, {dt:.1f}s / {budget[n]:.0f}s")
    far = [r for r in daha_relations(4) if r.family == "far-commute"]
    far_ok = bool(far) and all(oracle_equal(r.lhs, r.rhs, n=4).equal for r in far)
    ok &= far_ok
    parts.append(f"far-commute at n=4: {len(far)} instance(s) {'ok' if far_ok else 'FAILED'}")
    say(1, "representation gate", ok, "; ".join(parts) + (f"; failed {failed_all}" if failed_all else ""))
    assert ok, failed_all


def test_2_presentation_isomorphism(say):
    ok, parts, failed_all = True, [], []
    for n in RANK_SET:
        recs, failed, dt = run_suite("presentation-iso", n)
        need = {"presentation-iso/relation/skein-quadratic[s1]",
                "presentation-iso/relation/commutator",
                "presentation-iso/basecircle/P=c^2"}
        ok &= need <= {r["id"] for r in recs} and not failed
        failed_all += failed
        parts.append(f"n={n}: {len(recs)} checks, {dt:.1f}s")
    say(2, "presentation isomorphism", ok, "; ".join(parts) + (f"; failed {failed_all}" if failed_all else ""))
    assert ok, failed_all


def test_3_hecke(say):
    recs, failed, dt = run_suite("hecke", 2)
    ranks = {r["params"]["n"] for r in recs}
    ok = not failed and ranks == {1, 2, 3, 4} and dt < 30.0
    say(3, "Hecke symmetrizer", ok, f"{len(recs)} checks, n <= 4, {dt:.1f}s / 30s")
    assert ok, failed


def test_4_theta4(say):
    ok, parts, failed_all = True, [], []
    for n in RANK_SET:
        recs, failed, dt = run_suite("theta4", n)
        ids = {r["id"] for r in recs}
        need = {"theta4/full-twist/x1", "theta4/full-twist/y1", "theta4/intermediate/theta(x1)",
                "theta4/intermediate/theta4(x1)-word"}
        need |= {f"theta4/full-twist/s{i}" for i in range(1, n)}
        ok &= need <= ids and not failed
        failed_all += failed
        parts.append(f"n={n}: {len(recs)} checks, {dt:.1f}s")
    say(4, "theta^4 = conjugation by the full twist", ok, "; ".join(parts))
    assert ok, failed_all


def test_5_power_sums_central(say):
    ok, parts, failed_all = True, [], []
    for n in RANK_SET:
        recs, failed, dt = run_suite("power-sum-central", n, m_max=1)
        ids = {r["id"] for r in recs}
        need = {f"power-sum-central/m={m}/s{i}" for m in (1, 2, 3) for i in range(1, n)}
        need.add("power-sum-central/well-defined/1,1")
        ok &= need <= ids and not failed
        failed_all += failed
        parts.append(f"n={n}: {len(recs)} checks, {dt:.1f}s")
    say(5, "power sums commute with sigma_i; Q~_(1,1) path independent", ok, "; ".join(parts))
    assert ok, failed_all


def test_6_w_vs_q(say):
    ok, parts, failed_all = True, [], []
    for n in RANK_SET:
        recs, failed, dt = run_suite("pw-comparison", n, m_max=2)
        ids = {r["id"] for r in recs}
        axis = [(m, 0) for m in (1, 2)] + [(-m, 0) for m in (1, 2)] + [(0, m) for m in (1, 2)] + [(0, -m) for m in (1, 2)]
        need = {f"pw-comparison/spherical/{a},{b}" for a, b in axis}
        need |= {f"pw-comparison/full/{a},{b}" for a, b in axis}
        need.add("pw-comparison/general/1,1")
        ok &= need <= ids and not failed
        failed_all += failed
        parts.append(f"n={n}: {len(recs)} checks, {dt:.1f}s")
    say(6, "(q^m - 1) W = (s^m - s^-m) Q", ok, "; ".join(parts))
    assert ok, failed_all


def test_7_hall_transport(say):
    budget = {2: 600.0, 3: 1800.0}
    ok, parts, failed_all = True, [], []
    for n in RANK_SET:
        recs, failed, dt = run_suite("hall-transport", n, m_max=2)
        ids = {r["id"] for r in recs}
        need = {"hall-transport/collinear/1,0|2,0", "hall-transport/triangle/0,1|1,0",
                "hall-transport/skein/m=1", "hall-transport/skein/m=2"}
        ok &= need <= ids and not failed and dt < budget[n]
        failed_all += failed
        parts.append(f"n={n}: {len(recs)} checks, {dt:.1f}s / {budget[n]:.0f}s")
    say(7, "Hall algebra relations through phi_n", ok, "; ".join(parts))
    assert ok, failed_all


def test_8_theta_series(say):
    recs, failed, dt = run_suite("theta-series", 2, prefix=("theta-series/low-order/", "theta-series/routes/"))
    ok = not failed and len(recs) == 6
    say(8, "theta series by two routes", ok, f"{len(recs)} checks, {dt:.1f}s")
    assert ok, failed


def test_9_determinism(say, tmp_path):
    outs = []
    t0 = time.perf_counter()
    for hashseed in ("0", "12345"):
        env = dict(os.environ, PYTHONHASHSEED=hashseed)
        for key in list(env):
            if key.startswith("DAHASKEIN_"):
                del env[key]
        proc = subprocess.run(
            [sys.executable, "-m", "dahaskein.cli", "verify", "all"],
            capture_output=True, env=env, cwd=tmp_path,
        )
        outs.append((proc.returncode, proc.stdout))
    dt = time.perf_counter() - t0
    ok = outs[0] == outs[1] and outs[0][0] == 0 and len(outs[0][1]) > 0
    say(9, "byte-identical reports", ok, f"2 runs of verify all, {len(outs[0][1])} bytes each, {dt:.1f}s")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
