"""Batch kernels must agree with the scalar API they mirror."""

import numpy as np

from entroplane import batches
from entroplane.families import (
    E0Params,
    E1Params,
    RngStream,
    e0_state,
    e1_state,
    sample_e0_params,
    sample_e1_params,
    sample_full_rank_mats,
    sample_separable_mats,
)
from entroplane.linalg import hermitian_eigen
from entroplane.measures import chsh_max, concurrence, entropic_violation, von_neumann
from entroplane.plane import classify_entropic, classify_entropic_array, _CODE_TO_LABEL
from entroplane.states import (
    linear_entropy,
    partial_trace_a_out,
    partial_trace_b_out,
    partial_transpose,
    purity,
)


def _mixed_stack(n=300):
    half = n // 2
    mats = np.concatenate(
        [sample_full_rank_mats(RngStream(201, 0), half), sample_separable_mats(RngStream(201, 1), n - half)]
    )
    return mats


def test_builders_match_scalar_constructors():
    a, b, c, th = sample_e0_params(RngStream(202, 0), 50)
    stack = batches.build_e0_mats(a, b, c, th)
    for i in range(50):
        assert np.abs(stack[i] - e0_state(E0Params(a[i], b[i], c[i], th[i])).mat).max() < 1e-15
    a, b, f, c, d, th, ph = sample_e1_params(RngStream(202, 1), 50)
    stack = batches.build_e1_mats(a, b, f, c, d, th, ph)
    for i in range(50):
        p = E1Params(a[i], b[i], f[i], c[i], d[i], th[i], ph[i])
        assert np.abs(stack[i] - e1_state(p).mat).max() < 1e-15


def test_purity_entropy_gap_kernels():
    mats = _mixed_stack()
    pur = batches.purity_batch(mats)
    lin = batches.linear_entropy_batch(mats)
    ga, gb = batches.gaps_batch(mats)
    for i in range(0, len(mats), 7):
        rep = entropic_violation(mats[i])
        assert abs(pur[i] - purity(mats[i])) < 1e-13
        assert abs(lin[i] - linear_entropy(mats[i])) < 1e-13
        assert abs(ga[i] - rep.gap_a) < 1e-13
        assert abs(gb[i] - rep.gap_b) < 1e-13


def test_concurrence_kernels():
    mats = _mixed_stack()
    conc = batches.concurrence_wootters_batch(mats)
    for i in range(0, len(mats), 11):
        # Separable mixtures have degenerate zero roots whose rounding the
        # square root amplifies to ~1e-8, so two spectral routes can only be
        # expected to agree at that level there.
        assert abs(conc[i] - concurrence(mats[i]).concurrence) < 2e-8


def test_chsh_and_ppt_kernels():
    mats = _mixed_stack()
    ch = batches.chsh_batch(mats)
    pt = batches.pt_min_eig_batch(mats)
    for i in range(0, len(mats), 11):
        assert abs(ch[i] - chsh_max(mats[i])) < 1e-12
        assert abs(pt[i] - np.linalg.eigvalsh(partial_transpose(mats[i]))[0]) < 1e-12


def test_von_neumann_and_reduced_spectra_kernels():
    mats = _mixed_stack()
    vn = batches.von_neumann_batch(mats)
    wa, wb = batches.reduced_spectra_batch(mats)
    for i in range(0, len(mats), 13):
        assert abs(vn[i] - von_neumann(mats[i])) < 1e-11
        ra = hermitian_eigen(partial_trace_b_out(mats[i]).mat).eigenvalues[::-1]
        rb = hermitian_eigen(partial_trace_a_out(mats[i]).mat).eigenvalues[::-1]
        assert np.abs(np.sort(wa[i]) - ra).max() < 1e-12
        assert np.abs(np.sort(wb[i]) - rb).max() < 1e-12


def test_classifier_array_matches_scalar():
    rng = np.random.default_rng(55)
    c = rng.random(4000)
    s = rng.random(4000)
    codes = classify_entropic_array(c, s)
    for i in range(0, 4000, 37):
        assert _CODE_TO_LABEL[codes[i]] is classify_entropic((c[i], s[i]))
