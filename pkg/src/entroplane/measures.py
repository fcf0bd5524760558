"""Entanglement and entropy measures, and the per-state inequality tests.

All entropies are in bits (base-2 logarithms).  The quadratic (alpha = 2)
entropic criterion used throughout compares the global and reduced purities:
a state with ``Tr(rho^2) > Tr(rho_A^2)`` is necessarily entangled, and the
signed difference ``gap_a = Tr(rho^2) - Tr(rho_A^2)`` is the quantity the
plane classifier reasons about.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError, InvalidStateError
from .linalg import matrix_sqrt_psd
from .states import mat_of, partial_trace_a_out, partial_trace_b_out, purity

# Rank counting for the alpha = 0 entropy uses this eigenvalue threshold.
RANK_EIG_TOL = 1e-10
# Purity gaps larger than this count as a genuine violation, not rounding.
VIOLATION_TOL = 1e-12

_SX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_SY = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
_SZ = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULIS = (_SX, _SY, _SZ)
# sigma_y (x) sigma_y, the spin-flip conjugation used by the concurrence.
SYSY = np.kron(_SY, _SY)
# The nine two-qubit Pauli products sigma_i (x) sigma_j, row-major in (i, j).
PAULI_KRON = np.stack([np.kron(a, b) for a in PAULIS for b in PAULIS])


class EntropyValue(NamedTuple):
    """An entropy evaluation tagged with its order parameter."""

    alpha: float
    value: float


@dataclass(frozen=True)
class ViolationReport:
    """Quadratic entropic-inequality gaps against both reductions.

    ``gap_a = Tr(rho^2) - Tr(rho_A^2)`` and likewise for B; a positive gap
    (beyond ``VIOLATION_TOL``) means the inequality is violated on that side.
    """

    gap_a: float
    gap_b: float
    violates_a: bool
    violates_b: bool
    violates_any: bool


@dataclass(frozen=True)
class ConcurrenceSpectrum:
    """Square-rooted spectrum behind the concurrence.

    ``lambdas`` holds the four non-negative square roots in descending order;
    ``concurrence`` is ``max(0, lambdas[0] - lambdas[1] - lambdas[2] -
    lambdas[3])``.  The explicit clamp at zero makes separable states report
    exactly 0.
    """

    lambdas: np.ndarray
    concurrence: float


def _spectrum(rho) -> np.ndarray:
    w = np.linalg.eigvalsh(mat_of(rho))
    return np.clip(w, 0.0, None)


def von_neumann(rho) -> float:
    """Von Neumann entropy -sum(lam * log2(lam)) with 0*log(0) = 0."""
    w = _spectrum(rho)
    w = w[w > 0.0]
    return float(-(w * np.log2(w)).sum())


def renyi(rho, alpha: float) -> EntropyValue:
    """Renyi entropy ``log2(Tr rho^alpha) / (1 - alpha)`` of order ``alpha``.

    ``alpha = 0`` returns the log of the rank (eigenvalues above
    ``RANK_EIG_TOL``), ``alpha = 1`` the von Neumann entropy.  Negative orders
    are rejected: they are only defined for strictly positive spectra.
    """
    alpha = float(alpha)
    if alpha < 0.0:
        raise DomainError(f"alpha must be >= 0, got {alpha}")
    if alpha == 0.0:
        rank = int((_spectrum(rho) > RANK_EIG_TOL).sum())
        return EntropyValue(0.0, math.log2(rank))
    if alpha == 1.0:
        return EntropyValue(1.0, von_neumann(rho))
    w = _spectrum(rho)
    w = w[w > 0.0]
    return EntropyValue(alpha, float(np.log2((w**alpha).sum()) / (1.0 - alpha)))


def tsallis(rho, alpha: float) -> float:
    """Tsallis entropy ``(1 - Tr rho^alpha) / (1 - alpha)`` for alpha > 0, != 1."""
    alpha = _check_alpha(alpha)
    w = _spectrum(rho)
    w = w[w > 0.0]
    return float((1.0 - (w**alpha).sum()) / (1.0 - alpha))


def conditional_renyi(rho, alpha: float) -> float:
    """Conditional Renyi entropy of B given A: ``S_alpha(rho) - S_alpha(rho_A)``.

    Negative for some entangled states; non-negative for every separable
    state when alpha > 1.
    """
    alpha = _check_alpha(alpha)
    return renyi(rho, alpha).value - renyi(partial_trace_b_out(rho), alpha).value


def conditional_tsallis(rho, alpha: float) -> float:
    """Conditional Tsallis entropy of B given A.

    Evaluated as ``(Tr rho^alpha - Tr rho_A^alpha) / ((1 - alpha) Tr
    rho_A^alpha)``, the normalization that is non-negative on all separable
    states for alpha > 1 and shares its sign with the conditional Renyi
    entropy of the same order.
    """
    alpha = _check_alpha(alpha)
    w = _spectrum(rho)
    wa = _spectrum(partial_trace_b_out(rho))
    ta = float((wa[wa > 0.0] ** alpha).sum())
    t = float((w[w > 0.0] ** alpha).sum())
    return (t - ta) / ((1.0 - alpha) * ta)


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if alpha <= 0.0 or alpha == 1.0:
        raise DomainError(f"alpha must be positive and != 1, got {alpha}")
    return alpha


def entropic_violation(rho) -> ViolationReport:
    """Quadratic entropic-inequality test against both one-qubit reductions."""
    p = purity(rho)
    gap_a = p - purity(partial_trace_b_out(rho))
    gap_b = p - purity(partial_trace_a_out(rho))
    va = gap_a > VIOLATION_TOL
    vb = gap_b > VIOLATION_TOL
    return ViolationReport(gap_a, gap_b, va, vb, va or vb)


def concurrence(rho) -> ConcurrenceSpectrum:
    """Concurrence of a two-qubit state via its spin-flipped spectrum.

    The square roots of the eigenvalues of ``rho @ rho_tilde`` (with
    ``rho_tilde = (sy x sy) rho* (sy x sy)``) are computed from the Hermitian
    reformulation ``sqrt(rho) @ rho_tilde @ sqrt(rho)``, which has the same
    nonzero spectrum and keeps everything inside Hermitian eigensolvers.
    """
    m = mat_of(rho)
    rho_tilde = SYSY @ m.conj() @ SYSY
    root = matrix_sqrt_psd(m)
    h = root @ rho_tilde @ root
    h = 0.5 * (h + h.conj().T)
    lams = np.sqrt(np.clip(np.linalg.eigvalsh(h), 0.0, None))[::-1]
    c = max(0.0, 2.0 * lams[0] - lams.sum())
    return ConcurrenceSpectrum(lams, float(c))


def concurrence_x_closed_form(diag, rho14: complex, rho23: complex) -> float:
    """Closed-form concurrence of an X-shaped state.

    ``diag`` are the four diagonal entries; ``rho14`` / ``rho23`` the two
    anti-diagonal coherences (positions (0,3) and (1,2)).  Equals the general
    spectral route on such states:

        C = 2 * max(0, |rho23| - sqrt(rho11*rho44), |rho14| - sqrt(rho22*rho33))

    Raises ``InvalidStateError`` if the entries fail the positivity of the
    two 2x2 blocks or do not sum to one.
    """
    d = np.asarray(diag, dtype=float)
    if d.shape != (4,):
        raise InvalidStateError(f"expected 4 diagonal entries, got shape {d.shape}")
    if d.min() < -1e-10:
        raise InvalidStateError(f"negative diagonal entry {d.min():.3e}")
    if abs(d.sum() - 1.0) > 1e-12:
        raise InvalidStateError(f"diagonal sums to {d.sum()!r}, not 1")
    d = np.clip(d, 0.0, None)
    a14, a23 = abs(complex(rho14)), abs(complex(rho23))
    if a14**2 > d[0] * d[3] + 1e-10:
        raise InvalidStateError(f"outer block not PSD: |rho14|^2 = {a14**2:.3e} > {d[0] * d[3]:.3e}")
    if a23**2 > d[1] * d[2] + 1e-10:
        raise InvalidStateError(f"inner block not PSD: |rho23|^2 = {a23**2:.3e} > {d[1] * d[2]:.3e}")
    return 2.0 * max(0.0, a23 - math.sqrt(d[0] * d[3]), a14 - math.sqrt(d[1] * d[2]))


def correlation_matrix(rho) -> np.ndarray:
    """3x3 correlation tensor ``T_ij = Tr(rho sigma_i (x) sigma_j)``."""
    m = mat_of(rho)
    return np.einsum("ij,pji->p", m, PAULI_KRON).real.reshape(3, 3)


def chsh_max(rho) -> float:
    """Largest CHSH expectation over all measurement settings.

    Equals ``2 sqrt(m1 + m2)`` where m1 >= m2 are the two largest eigenvalues
    of ``T^T T`` built from the correlation tensor.  Values above 2 violate
    the CHSH inequality; the maximum possible is 2 sqrt(2).
    """
    t = correlation_matrix(rho)
    w = np.linalg.eigvalsh(t.T @ t)
    return 2.0 * math.sqrt(max(w[-1] + w[-2], 0.0))
