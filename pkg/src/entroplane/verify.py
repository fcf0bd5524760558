"""Self-verification suite: one check per acceptance criterion.

``run_verify`` executes every check at full scale, prints one pass/fail line
per check and reports overall success.  The test suite drives the same
functions through pytest.
"""

import hashlib
import math
import tempfile
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import batches
from .families import RngStream, mems1, sample_e0_params, sample_e1_params, sample_full_rank_mats, sample_separable_mats
from .measures import chsh_max, entropic_violation
from .plane import (
    RegionLabel,
    boundary_band_mask,
    chsh_region_areas,
    classify_entropic_array,
    entropic_region_areas,
    frontier_mems,
    s_l1,
    s_l_minus,
    s_l_plus,
)
from .experiments import run_sampling

INV_SQRT2 = 1.0 / math.sqrt(2.0)

# Printed reference percentages for (V, Zero, NV), and their tolerances
# in percentage points.
REPORTED_ENTROPIC = (28.390, 58.155, 13.455)
REPORTED_CHSH = (26.577, 54.788, 18.635)
ENTROPIC_PCT_TOL = 0.05
CHSH_PCT_TOL = 0.3

# Exact values of the region integrals (closed-form antiderivatives).
TOTAL_AREA_EXACT = 52.0 / 81.0
NV_AREA_EXACT = 7.0 / 81.0
NV_PCT_EXACT = 100.0 * 7.0 / 52.0
V_AREA_EXACT = 11.0 / 27.0 + math.sqrt(2.0) / 12.0 * (math.asin(2.0 * math.sqrt(2.0) / 3.0) - math.pi)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _result(name, t0, ok, detail) -> CheckResult:
    return CheckResult(name, bool(ok), detail, time.perf_counter() - t0)


def check_entropic_areas(tol: float = 1e-10) -> CheckResult:
    t0 = time.perf_counter()
    report = entropic_region_areas(tol)
    pct = [report.percentages[k] for k in (RegionLabel.V_E, RegionLabel.ZERO_E, RegionLabel.NV_E)]
    elapsed = time.perf_counter() - t0
    ok = all(abs(p - r) <= ENTROPIC_PCT_TOL for p, r in zip(pct, REPORTED_ENTROPIC))
    ok &= abs(report.percentages[RegionLabel.NV_E] - NV_PCT_EXACT) <= 1e-6 * NV_PCT_EXACT
    ok &= abs(report.total_area - TOTAL_AREA_EXACT) <= 1e-6 * TOTAL_AREA_EXACT
    ok &= abs(report.areas[RegionLabel.NV_E] - NV_AREA_EXACT) <= 1e-6 * NV_AREA_EXACT
    ok &= abs(report.areas[RegionLabel.V_E] - V_AREA_EXACT) <= 1e-6 * V_AREA_EXACT
    ok &= abs(sum(pct) - 100.0) <= 1e-6
    ok &= elapsed < 5.0
    detail = f"V/Zero/NV = {pct[0]:.4f}/{pct[1]:.4f}/{pct[2]:.4f} %, total = {report.total_area:.10f}, {elapsed:.2f}s"
    return _result("1-entropic-areas", t0, ok, detail)


def check_chsh_areas(resolution: int = 1200) -> CheckResult:
    t0 = time.perf_counter()
    report = chsh_region_areas(resolution=resolution)
    pct = [report.percentages[k] for k in (RegionLabel.V_E, RegionLabel.ZERO_E, RegionLabel.NV_E)]
    elapsed = time.perf_counter() - t0
    ok = all(abs(p - r) <= CHSH_PCT_TOL for p, r in zip(pct, REPORTED_CHSH))
    ok &= abs(sum(pct) - 100.0) <= 1e-6
    ok &= elapsed < 60.0
    detail = f"V/Zero/NV = {pct[0]:.4f}/{pct[1]:.4f}/{pct[2]:.4f} %, {elapsed:.2f}s"
    return _result("2-chsh-areas", t0, ok, detail)


def check_mems1_in_toto(n_grid: int = 1000) -> CheckResult:
    t0 = time.perf_counter()
    lo, hi = 2.0 / 3.0, INV_SQRT2
    worst_gap_err = worst_chsh_err = 0.0
    ok = True
    for i in range(n_grid):
        c = lo + (hi - lo) * (i + 1) / n_grid
        rho = mems1(c)
        rep = entropic_violation(rho)
        gap_closed = 1.5 * c * c - c
        chsh = chsh_max(rho)
        chsh_closed = 2.0 * math.sqrt(2.0) * c
        worst_gap_err = max(worst_gap_err, abs(rep.gap_a - gap_closed))
        worst_chsh_err = max(worst_chsh_err, abs(chsh - chsh_closed))
        ok &= rep.gap_a > 0.0 and chsh <= 2.0 + 1e-12
    ok &= worst_gap_err <= 1e-12 and worst_chsh_err <= 1e-12
    detail = f"{n_grid} grid points, max |gap err| = {worst_gap_err:.2e}, max |chsh err| = {worst_chsh_err:.2e}"
    return _result("3-mems1-in-toto", t0, ok, detail)


def check_curve_anchors() -> CheckResult:
    t0 = time.perf_counter()
    checks = [
        abs(s_l_minus(INV_SQRT2) - 0.5),
        abs(s_l_plus(INV_SQRT2) - 0.5),
        abs(float(s_l1(0.5)) - 2.0 / 3.0),
        abs(frontier_mems(2.0 / 3.0) - 16.0 / 27.0),
        abs(float(s_l1(2.0 / 3.0)) - 16.0 / 27.0),
        abs(8.0 / 9.0 - (2.0 / 3.0) * (2.0 / 3.0) ** 2 - 16.0 / 27.0),
        abs(s_l_minus(0.0) - 0.0),
    ]
    worst = max(checks)
    return _result("4-curve-anchors", t0, worst <= 1e-12, f"max deviation = {worst:.2e}")


def _family_batch(family: str, seed: int, n: int, streams: int = 4):
    """Sampled (c, s, gap_a, gap_b, chsh) arrays, chunked over streams."""
    conc, s, ga, gb, ch = [], [], [], [], []
    counts = [n // streams + (1 if i < n % streams else 0) for i in range(streams)]
    for i, count in enumerate(counts):
        rng = RngStream(seed, i)
        if family == "e0":
            a, b, c, theta = sample_e0_params(rng, count)
            mats = batches.build_e0_mats(a, b, c, theta)
            cc = batches.concurrence_x_batch(
                np.stack([np.zeros_like(a), a, b, 1.0 - a - b], axis=1), np.zeros_like(a), mats[:, 1, 2]
            )
        else:
            a, b, f, c, d, theta, phi = sample_e1_params(rng, count)
            mats = batches.build_e1_mats(a, b, f, c, d, theta, phi)
            cc = batches.concurrence_x_batch(
                np.stack([f, a, b, 1.0 - a - b - f], axis=1), mats[:, 0, 3], mats[:, 1, 2]
            )
        ga_i, gb_i = batches.gaps_batch(mats)
        conc.append(cc)
        s.append(batches.linear_entropy_batch(mats))
        ga.append(ga_i)
        gb.append(gb_i)
        ch.append(batches.chsh_batch(mats))
    return (np.concatenate(conc), np.concatenate(s), np.concatenate(ga), np.concatenate(gb), np.concatenate(ch))


def check_theorem_consistency(n: int = 1_000_000, band: float = 1e-9) -> CheckResult:
    """Region labels never contradict the per-state quadratic verdict."""
    t0 = time.perf_counter()
    ok = True
    details = []
    for family, seed in (("e0", 1009), ("e1", 1013)):
        c, s, gap_a, _, _ = _family_batch(family, seed, n)
        codes = classify_entropic_array(np.clip(c, 0.0, 1.0), np.clip(s, 0.0, 1.0))
        keep = boundary_band_mask(c, s, band)
        bad_v = int(np.sum(keep & (codes == 0) & ~(gap_a > 0.0)))
        bad_nv = int(np.sum(keep & (codes == 2) & (gap_a > 0.0)))
        ok &= bad_v == 0 and bad_nv == 0
        details.append(f"{family}: n={n}, checked={int(keep.sum())}, bad_V={bad_v}, bad_NV={bad_nv}")
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 180.0
    return _result("5-theorem-consistency", t0, ok, "; ".join(details) + f", {elapsed:.1f}s")


def check_concurrence_dual_route(n: int = 100_000) -> CheckResult:
    t0 = time.perf_counter()
    half = n // 2
    a, b, c, theta = sample_e0_params(RngStream(2027, 0), half)
    m0 = batches.build_e0_mats(a, b, c, theta)
    x0 = batches.concurrence_x_batch(
        np.stack([np.zeros_like(a), a, b, 1.0 - a - b], axis=1), np.zeros_like(a), m0[:, 1, 2]
    )
    a1, b1, f1, c1, d1, th1, ph1 = sample_e1_params(RngStream(2027, 1), n - half)
    m1 = batches.build_e1_mats(a1, b1, f1, c1, d1, th1, ph1)
    x1 = batches.concurrence_x_batch(
        np.stack([f1, a1, b1, 1.0 - a1 - b1 - f1], axis=1), m1[:, 0, 3], m1[:, 1, 2]
    )
    general = batches.concurrence_wootters_batch(np.concatenate([m0, m1]))
    err = float(np.abs(general - np.concatenate([x0, x1])).max())
    err_param = float(np.abs(general[:half] - c).max())
    ok = err <= 1e-10 and err_param <= 1e-10
    return _result(
        "6ab-concurrence-dual-route", t0, ok,
        f"n={n}, max |general - closed| = {err:.2e}, max |general - c| on e0 = {err_param:.2e}",
    )


def check_ppt_equivalence(n: int = 100_000) -> CheckResult:
    t0 = time.perf_counter()
    mats = sample_full_rank_mats(RngStream(424242, 0), n)
    conc = batches.concurrence_wootters_batch(mats)
    min_eig = batches.pt_min_eig_batch(mats)
    ppt = min_eig >= -1e-10
    sep = conc <= 1e-8
    mismatches = int(np.sum(ppt != sep))
    return _result(
        "6c-ppt-equivalence", t0, mismatches == 0,
        f"n={n}, mismatches={mismatches}, entangled fraction={float(np.mean(~sep)):.3f}",
    )


def check_separable_soundness(n: int = 100_000) -> CheckResult:
    t0 = time.perf_counter()
    mats = sample_separable_mats(RngStream(515151, 0), n)
    gap_a, gap_b = batches.gaps_batch(mats)
    violations = int(np.sum((gap_a > 1e-12) | (gap_b > 1e-12)))
    s_ab = batches.von_neumann_batch(mats)
    wa, wb = batches.reduced_spectra_batch(mats)

    def ent(w):
        w = np.clip(w, 0.0, None)
        logs = np.where(w > 0.0, np.log2(np.where(w > 0.0, w, 1.0)), 0.0)
        return -(w * logs).sum(axis=1)

    worst = float((np.maximum(ent(wa), ent(wb)) - s_ab).max())
    ok = violations == 0 and worst <= 1e-10
    return _result(
        "6d-separable-soundness", t0, ok,
        f"n={n}, entropic violations={violations}, max(S_local - S_joint)={worst:.2e}",
    )


def check_sign_equivalence(n: int = 100_000) -> CheckResult:
    t0 = time.perf_counter()
    mats = sample_full_rank_mats(RngStream(616161, 0), n)
    p = batches.purity_batch(mats)
    pa, _ = batches._reduced_purities(mats)
    gap = p - pa
    cond_renyi = np.log2(pa / p)
    cond_tsallis = (pa - p) / pa
    keep = np.abs(gap) > 1e-12
    ok = bool(
        np.all(np.sign(cond_renyi[keep]) == -np.sign(gap[keep]))
        and np.all(np.sign(cond_tsallis[keep]) == -np.sign(gap[keep]))
    )
    return _result(
        "6e-sign-equivalence", t0, ok,
        f"n={n}, decided={int(keep.sum())}, all signs consistent={ok}",
    )


def check_detection_order(n: int = 1_000_000) -> CheckResult:
    t0 = time.perf_counter()
    bad_total = 0
    chsh_viol_total = 0
    for family, seed in (("e0", 717171), ("e1", 818181)):
        _, _, gap_a, gap_b, chsh = _family_batch(family, seed, n // 2)
        chsh_viol = chsh > 2.0 + 1e-9
        entropic_viol = (gap_a > 1e-12) | (gap_b > 1e-12)
        bad_total += int(np.sum(chsh_viol & ~entropic_viol))
        chsh_viol_total += int(chsh_viol.sum())
    return _result(
        "6f-detection-order", t0, bad_total == 0,
        f"n={n}, chsh violations={chsh_viol_total}, undetected by entropic={bad_total}",
    )


def check_sample_determinism(n: int = 100_000) -> CheckResult:
    t0 = time.perf_counter()
    with tempfile.TemporaryDirectory() as tmp:
        p1, p2 = Path(tmp) / "run1.csv", Path(tmp) / "run2.csv"
        m1 = run_sampling("e1", n, seed=7, streams=4, out_path=p1)
        m2 = run_sampling("e1", n, seed=7, streams=4, out_path=p2)
        h1 = hashlib.sha256(p1.read_bytes()).hexdigest()
        h2 = hashlib.sha256(p2.read_bytes()).hexdigest()
    ok = h1 == h2 and m1.csv_sha256 == m2.csv_sha256 == h1
    return _result("7-sample-determinism", t0, ok, f"n={n}, sha256 match={ok}, {h1[:16]}...")


def run_verify(fast: bool = False, out=None) -> bool:
    """Run every acceptance check; print one line per check; True if all pass."""
    scale = 100 if fast else 1
    checks = [
        lambda: check_entropic_areas(),
        lambda: check_chsh_areas(resolution=1200 // (4 if fast else 1)),
        lambda: check_mems1_in_toto(1000),
        lambda: check_curve_anchors(),
        lambda: check_theorem_consistency(1_000_000 // scale),
        lambda: check_concurrence_dual_route(100_000 // scale),
        lambda: check_ppt_equivalence(100_000 // scale),
        lambda: check_separable_soundness(100_000 // scale),
        lambda: check_sign_equivalence(100_000 // scale),
        lambda: check_detection_order(1_000_000 // scale),
        lambda: check_sample_determinism(100_000 // scale),
    ]
    all_ok = True
    for make in checks:
        res = make()
        all_ok &= res.passed
        line = f"[{'PASS' if res.passed else 'FAIL'}] {res.name}: {res.detail} ({res.seconds:.2f}s)"
        print(line, file=out)
    print(("all checks passed" if all_ok else "FAILURES detected"), file=out)
    return all_ok
