import hashlib
import json
import math
import os
import py_compile
import subprocess
import sys

import numpy as np
import pytest

from entroplane.experiments import load_samples, manifest_path, recompute_metrics
from entroplane.states import format_density_text

from conftest import MAX_MIXED


def run_cli(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "entroplane", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )


def test_state_mems1():
    res = run_cli("state", "--family", "mems1", "--c", "0.7")
    assert res.returncode == 0, res.stderr
    out = json.loads(res.stdout)
    assert abs(out["concurrence"] - 0.7) < 1e-10
    assert abs(out["linear_entropy"] - 0.56) < 1e-12
    assert abs(out["gap_a"] - 0.035) < 1e-12
    assert abs(out["chsh_max"] - 1.9798989873223332) < 1e-12
    assert out["region"] == "V_E"
    assert out["violates_a"] and not out["chsh_max"] > 2.0


def test_state_mems2():
    res = run_cli("state", "--family", "mems2", "--c", "0.5")
    assert res.returncode == 0, res.stderr
    out = json.loads(res.stdout)
    assert abs(out["linear_entropy"] - 0.7222222222222222) < 1e-12
    assert out["region"] == "NV_E"


def test_state_e1_params():
    res = run_cli(
        "state", "--family", "e1", "--a", "0.04", "--b", "0.04", "--f", "0.46", "--c", "0", "--d", "0.5"
    )
    assert res.returncode == 0, res.stderr
    out = json.loads(res.stdout)
    assert abs(out["concurrence"] - 0.42) < 1e-10


def test_state_matrix_file(tmp_path):
    path = tmp_path / "mixed.txt"
    path.write_text(format_density_text(MAX_MIXED))
    res = run_cli("state", "--matrix", str(path))
    assert res.returncode == 0, res.stderr
    out = json.loads(res.stdout)
    assert out["concurrence"] == 0.0
    assert abs(out["linear_entropy"] - 1.0) < 1e-12
    assert not out["violates_any"]
    assert abs(out["von_neumann"] - 2.0) < 1e-12


def test_state_usage_errors(tmp_path):
    res = run_cli("state", "--family", "mems1")  # missing --c
    assert res.returncode == 2
    res = run_cli("state")
    assert res.returncode == 2
    res = run_cli("state", "--family", "e0", "--a", "0.2", "--b", "0.1", "--c", "0.4")
    assert res.returncode == 2
    assert "a*b >= c^2/4" in res.stderr
    bad = tmp_path / "bad.txt"
    bad.write_text("1,0 0,0 0,0\n0,0 0,0 0,0\n")
    res = run_cli("state", "--matrix", str(bad))
    assert res.returncode == 2
    assert "rows" in res.stderr


def test_state_missing_file_is_io_error(tmp_path):
    res = run_cli("state", "--matrix", str(tmp_path / "absent.txt"))
    assert res.returncode == 3


def test_regions_table_and_json(tmp_path):
    out_json = tmp_path / "areas.json"
    res = run_cli("regions", "--resolution", "150", "--json", str(out_json))
    assert res.returncode == 0, res.stderr
    assert "entropic %" in res.stdout
    payload = json.loads(out_json.read_text())
    ent = payload["entropic"]["percentages"]
    assert abs(ent["V_E"] - 28.390) < 0.05
    assert abs(ent["Zero_E"] - 58.155) < 0.05
    assert abs(ent["NV_E"] - 13.455) < 0.05
    chsh = payload["chsh"]["percentages"]
    assert abs(chsh["V_E"] - 26.577) < 0.3
    assert abs(sum(ent.values()) - 100.0) < 1e-6


@pytest.mark.parametrize("family", ["e0", "e1", "separable", "full_rank"])
def test_sample_round_trip(tmp_path, family):
    out = tmp_path / f"{family}.csv"
    res = run_cli("sample", "--family", family, "--n", "400", "--seed", "3", "--streams", "2", "--out", str(out))
    assert res.returncode == 0, res.stderr
    data = load_samples(out)
    assert len(data["c"]) == 400
    assert set(data["family"]) == {family}
    c, s, ga, gb, ch = recompute_metrics(family, data)
    for name, col, ref in (("c", data["c"], c), ("s", data["s"], s), ("gap_a", data["gap_a"], ga),
                           ("gap_b", data["gap_b"], gb), ("chsh", data["chsh"], ch)):
        assert np.abs(col - ref).max() < 1e-10, name
    manifest = json.loads((tmp_path / f"{family}.csv.manifest.json").read_text())
    assert manifest["family"] == family
    assert manifest["n"] == 400
    assert manifest["sampler_id"].startswith("philox")
    body = out.read_bytes()
    assert hashlib.sha256(body).hexdigest() == manifest["csv_sha256"]


def test_sample_determinism_small(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    r1 = run_cli("sample", "--n", "1000", "--seed", "7", "--streams", "4", "--out", str(a))
    r2 = run_cli("sample", "--n", "1000", "--seed", "7", "--streams", "4", "--out", str(b))
    assert r1.returncode == r2.returncode == 0
    assert a.read_bytes() == b.read_bytes()
    # worker count must not affect the bytes
    env = dict(os.environ, ENTROPLANE_WORKERS="4")
    c = tmp_path / "c.csv"
    r3 = subprocess.run(
        [sys.executable, "-m", "entroplane", "sample", "--n", "1000", "--seed", "7", "--streams", "4", "--out", str(c)],
        capture_output=True, text=True, env=env,
    )
    assert r3.returncode == 0
    assert c.read_bytes() == a.read_bytes()


def test_curves_csv(tmp_path):
    out = tmp_path / "curves.csv"
    res = run_cli("curves", "--step", str(1.0 / 6.0), "--out", str(out))
    assert res.returncode == 0, res.stderr
    lines = out.read_text().splitlines()
    assert lines[0] == "c,frontier,s_l_minus,s_l_plus,nv_lower"
    rows = {float(ln.split(",")[0]): ln.split(",") for ln in lines[1:]}
    junction = rows[2.0 / 3.0]
    assert abs(float(junction[1]) - 16.0 / 27.0) < 1e-15
    assert junction[4] == ""  # no NV region at or above c = 2/3
    top = rows[1.0]
    assert top[2] == "" and top[3] == ""  # critical curves undefined past 1/sqrt(2)
    low = rows[1.0 / 6.0]
    assert abs(float(low[4]) - 2.0 / 3.0) < 1e-15
    # 17 significant digits round-trip doubles exactly
    assert float(rows[0.5][2]) == (1.0 + 0.25 - math.sqrt(0.5)) / 3.0


@pytest.mark.parametrize("kind", ["scatter", "overlay"])
def test_plotscript_compiles_and_runs(tmp_path, kind):
    script = tmp_path / f"{kind}.py"
    res = run_cli("plotscript", "--kind", kind, "--out", str(script))
    assert res.returncode == 0, res.stderr
    py_compile.compile(str(script), doraise=True)

    curves = tmp_path / "curves.csv"
    assert run_cli("curves", "--step", "0.02", "--out", str(curves)).returncode == 0
    image = tmp_path / f"{kind}.png"
    if kind == "scatter":
        samples = tmp_path / "s.csv"
        assert run_cli("sample", "--n", "200", "--seed", "1", "--out", str(samples)).returncode == 0
        args = [sys.executable, str(script), str(samples), str(curves), str(image)]
    else:
        args = [sys.executable, str(script), str(curves), str(image)]
    run = subprocess.run(args, capture_output=True, text=True, env=dict(os.environ, MPLBACKEND="Agg"))
    assert run.returncode == 0, run.stderr
    assert image.stat().st_size > 1000


def test_verify_fast_smoke():
    res = run_cli("verify", "--fast")
    assert res.returncode == 0, res.stdout + res.stderr
    lines = [ln for ln in res.stdout.splitlines() if ln.startswith("[")]
    assert len(lines) == 11
    assert all(ln.startswith("[PASS]") for ln in lines)


def test_verify_detects_fault_injection(monkeypatch):
    # A corrupted boundary-curve constant must fail the area criterion by name.
    import entroplane.plane as plane
    from entroplane.verify import check_entropic_areas

    orig = plane.s_l_plus
    monkeypatch.setattr(plane, "s_l_plus", lambda c: orig(c) + 0.01)
    res = check_entropic_areas()
    assert not res.passed
    assert res.name == "1-entropic-areas"
