import math

import numpy as np
import pytest

from entroplane.errors import DomainError, InvalidStateError
from entroplane.families import (
    E0Params,
    E1Params,
    RngStream,
    e0_state,
    e1_state,
    mems1,
    sample_e0_params,
    sample_e1_params,
    sample_full_rank_mats,
    sample_separable_mats,
)
from entroplane.measures import (
    chsh_max,
    concurrence,
    concurrence_x_closed_form,
    conditional_renyi,
    conditional_tsallis,
    entropic_violation,
    renyi,
    tsallis,
    von_neumann,
)
from entroplane.states import make_density

from conftest import BELL, MAX_MIXED


def product_state():
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = 1.0  # |00><00|
    return m


# --- Renyi / von Neumann -----------------------------------------------------


def test_renyi_maximally_mixed_alpha2():
    ev = renyi(MAX_MIXED, 2.0)
    assert ev.alpha == 2.0
    assert abs(ev.value - 2.0) < 1e-12


@pytest.mark.parametrize("alpha", [0.0, 0.5, 2.0, 3.0, 10.0])
def test_renyi_pure_state_is_zero(alpha):
    assert abs(renyi(BELL, alpha).value) < 1e-10


def test_renyi_mems_alpha2_from_purity_oracle():
    # Entry-wise purity of the c = 0.7 MEMS-I state: c^2 + (1-c)^2 = 0.58.
    assert abs(renyi(mems1(0.7), 2.0).value - (-math.log2(0.58))) < 1e-12


def test_renyi_alpha0_counts_rank():
    assert abs(renyi(np.diag([0.5, 0.5, 0.0, 0.0]).astype(complex), 0.0).value - 1.0) < 1e-14
    assert abs(renyi(MAX_MIXED, 0.0).value - 2.0) < 1e-14


def test_renyi_alpha1_is_von_neumann():
    mats = sample_full_rank_mats(RngStream(11, 0), 20)
    for m in mats:
        assert abs(renyi(m, 1.0).value - von_neumann(m)) < 1e-14


def test_renyi_rejects_negative_alpha():
    with pytest.raises(DomainError):
        renyi(MAX_MIXED, -0.5)


def test_renyi_continuity_at_alpha_one():
    mats = sample_full_rank_mats(RngStream(12, 0), 1000)
    for m in mats:
        s = von_neumann(m)
        assert abs(renyi(m, 1.0 + 1e-4).value - s) < 1e-3
        assert abs(renyi(m, 1.0 - 1e-4).value - s) < 1e-3


def test_von_neumann_examples():
    assert abs(von_neumann(MAX_MIXED) - 2.0) < 1e-12
    assert abs(von_neumann(BELL)) < 1e-12
    from entroplane.states import partial_trace_b_out

    assert abs(von_neumann(partial_trace_b_out(BELL)) - 1.0) < 1e-12
    assert abs(von_neumann(np.diag([0.5, 0.5, 0.0, 0.0]).astype(complex)) - 1.0) < 1e-12


# --- Tsallis and conditional entropies ----------------------------------------


def test_tsallis_pure_product_all_zero():
    rho = product_state()
    assert abs(tsallis(rho, 2.0)) < 1e-14
    assert abs(conditional_tsallis(rho, 2.0)) < 1e-14
    assert abs(conditional_renyi(rho, 2.0)) < 1e-14


def test_conditional_renyi_bell():
    # Tr rho^2 = 1 and Tr rho_A^2 = 1/2: conditional order-2 entropy is -1 bit.
    assert abs(conditional_renyi(BELL, 2.0) - (-1.0)) < 1e-12


def test_conditional_tsallis_separable_is_nonnegative():
    # The maximally mixed state is separable, so the conditional Tsallis
    # entropy must be >= 0; with Tr rho^2 = 1/4 and Tr rho_A^2 = 1/2 the
    # value is (1/4 - 1/2)/((1-2) * 1/2) = +1/2.
    assert abs(conditional_tsallis(MAX_MIXED, 2.0) - 0.5) < 1e-14
    mats = sample_separable_mats(RngStream(13, 0), 2000)
    for m in mats:
        assert conditional_tsallis(m, 2.0) >= -1e-12


def test_alpha_domain_errors():
    for fn in (tsallis, conditional_tsallis, conditional_renyi):
        with pytest.raises(DomainError):
            fn(MAX_MIXED, 1.0)
        with pytest.raises(DomainError):
            fn(MAX_MIXED, -1.0)
        with pytest.raises(DomainError):
            fn(MAX_MIXED, 0.0)


def test_sign_equivalence_of_conditionals_and_gap():
    mats = sample_full_rank_mats(RngStream(14, 0), 2000)
    for m in mats:
        gap = entropic_violation(m).gap_a
        if abs(gap) <= 1e-12:
            continue
        assert math.copysign(1.0, conditional_renyi(m, 2.0)) == -math.copysign(1.0, gap)
        assert math.copysign(1.0, conditional_tsallis(m, 2.0)) == -math.copysign(1.0, gap)


# --- entropic violation --------------------------------------------------------


def test_violation_maximally_mixed():
    rep = entropic_violation(MAX_MIXED)
    assert abs(rep.gap_a - (0.25 - 0.5)) < 1e-14
    assert not rep.violates_any


def test_violation_bell():
    rep = entropic_violation(BELL)
    assert abs(rep.gap_a - 0.5) < 1e-14
    assert rep.violates_a and rep.violates_b and rep.violates_any


def test_violation_mems_branch_closed_form():
    for c in np.linspace(0.05, 1.0, 40):
        rho = e0_state(E0Params(c / 2.0, c / 2.0, min(c, 1.0)))
        rep = entropic_violation(rho)
        assert abs(rep.gap_a - (1.5 * c * c - c)) < 1e-12
        assert rep.violates_a == (c > 2.0 / 3.0)


# --- concurrence ---------------------------------------------------------------


def test_concurrence_bell_and_product():
    assert abs(concurrence(BELL).concurrence - 1.0) < 1e-12
    assert concurrence(product_state()).concurrence == 0.0
    assert concurrence(MAX_MIXED).concurrence == 0.0


def test_concurrence_lambdas_sorted_nonnegative():
    spect = concurrence(mems1(0.8))
    assert np.all(spect.lambdas >= 0.0)
    assert np.all(np.diff(spect.lambdas) <= 1e-15)


def test_concurrence_of_single_coherence_family_is_c():
    a, b, c, theta = sample_e0_params(RngStream(15, 0), 2000)
    for i in range(len(a)):
        rho = e0_state(E0Params(a[i], b[i], c[i], theta[i]))
        assert abs(concurrence(rho).concurrence - c[i]) < 1e-10


def test_x_closed_form_matches_general_route():
    a, b, f, c, d, th, ph = sample_e1_params(RngStream(16, 0), 2000)
    for i in range(len(a)):
        rho = e1_state(E1Params(a[i], b[i], f[i], c[i], d[i], th[i], ph[i]))
        closed = concurrence_x_closed_form(
            np.real(np.diag(rho.mat)), rho.mat[0, 3], rho.mat[1, 2]
        )
        assert abs(concurrence(rho).concurrence - closed) < 1e-10


def test_x_closed_form_frozen_example():
    # a = b = 0.04, f = 0.46, d = 0.5, c = 0: the spectral route gives
    # lambda = {0.46 + 0.25, 0.46 - 0.25, 0.04, 0.04}, so C = 2(0.25 - 0.04).
    rho = e1_state(E1Params(0.04, 0.04, 0.46, 0.0, 0.5))
    expected = 2.0 * (0.25 - 0.04)
    assert abs(concurrence(rho).concurrence - expected) < 1e-12
    closed = concurrence_x_closed_form(np.real(np.diag(rho.mat)), rho.mat[0, 3], rho.mat[1, 2])
    assert abs(closed - expected) < 1e-12


def test_x_closed_form_diagonal_separable():
    assert concurrence_x_closed_form([0.4, 0.3, 0.2, 0.1], 0.0, 0.0) == 0.0


def test_x_closed_form_rejects_invalid():
    with pytest.raises(InvalidStateError):
        concurrence_x_closed_form([0.1, 0.1, 0.1, 0.7], 0.0, 0.5)  # inner block not PSD
    with pytest.raises(InvalidStateError):
        concurrence_x_closed_form([0.5, 0.5, 0.5, -0.5], 0.0, 0.0)
    with pytest.raises(InvalidStateError):
        concurrence_x_closed_form([0.5, 0.25, 0.25, 0.5], 0.0, 0.0)  # trace 1.5


# --- CHSH ----------------------------------------------------------------------


def test_chsh_bell_and_mixed():
    assert abs(chsh_max(BELL) - 2.0 * math.sqrt(2.0)) < 1e-12
    assert abs(chsh_max(MAX_MIXED)) < 1e-12


def test_chsh_mems_frozen_value():
    # correlation-matrix spectrum {c^2, c^2, (1-2c)^2}: 2 sqrt(2) c at c = 0.7.
    assert abs(chsh_max(mems1(0.7)) - 2.0 * math.sqrt(0.98)) < 1e-12


def test_chsh_closed_form_on_family():
    a, b, c, theta = sample_e0_params(RngStream(17, 0), 500)
    for i in range(len(a)):
        rho = e0_state(E0Params(a[i], b[i], c[i], theta[i]))
        z = 1.0 - 2.0 * (a[i] + b[i])
        expected = 2.0 * math.sqrt(c[i] ** 2 + max(c[i] ** 2, z * z))
        assert abs(chsh_max(rho) - expected) < 1e-12


# --- phase invariance ------------------------------------------------------------


def test_phase_invariance_of_all_measures():
    a, b, f, c, d, _, _ = sample_e1_params(RngStream(18, 0), 50)
    for i in range(len(a)):
        base = e1_state(E1Params(a[i], b[i], f[i], c[i], d[i], 0.0, 0.0))
        ref = (
            concurrence(base).concurrence,
            entropic_violation(base).gap_a,
            chsh_max(base),
            von_neumann(base),
            renyi(base, 2.0).value,
            tsallis(base, 3.0),
        )
        for th, ph in ((1.1, 2.2), (3.3, 5.5), (6.0, 0.4)):
            rho = e1_state(E1Params(a[i], b[i], f[i], c[i], d[i], th, ph))
            vals = (
                concurrence(rho).concurrence,
                entropic_violation(rho).gap_a,
                chsh_max(rho),
                von_neumann(rho),
                renyi(rho, 2.0).value,
                tsallis(rho, 3.0),
            )
            assert np.allclose(vals, ref, atol=1e-10)
