"""Vectorized kernels over stacks of states.

Everything here mirrors a scalar operation from :mod:`states`,
:mod:`measures` or :mod:`plane` on an ``(n, 4, 4)`` stack (or parameter
arrays) and is cross-checked against the scalar path in the test suite.  The
Monte Carlo experiments and the acceptance checks run through these kernels.
"""

import numpy as np

from .measures import PAULI_KRON, SYSY
from .plane import classify_entropic_array

__all__ = [
    "build_e0_mats",
    "build_e1_mats",
    "purity_batch",
    "linear_entropy_batch",
    "gaps_batch",
    "concurrence_x_batch",
    "concurrence_wootters_batch",
    "chsh_batch",
    "pt_min_eig_batch",
    "von_neumann_batch",
    "reduced_spectra_batch",
    "classify_entropic_array",
]


def build_e0_mats(a, b, c, theta) -> np.ndarray:
    """Assemble single-coherence family states as an (n, 4, 4) stack."""
    a, b, c, theta = np.broadcast_arrays(*(np.asarray(v, float) for v in (a, b, c, theta)))
    n = a.shape[0]
    m = np.zeros((n, 4, 4), dtype=complex)
    m[:, 1, 1] = a
    m[:, 2, 2] = b
    m[:, 3, 3] = 1.0 - a - b
    m[:, 1, 2] = 0.5 * c * np.exp(1j * theta)
    m[:, 2, 1] = np.conj(m[:, 1, 2])
    return m


def build_e1_mats(a, b, f, c, d, theta, phi) -> np.ndarray:
    """Assemble two-coherence family states as an (n, 4, 4) stack."""
    arrs = [np.asarray(v, float) for v in (a, b, f, c, d, theta, phi)]
    a, b, f, c, d, theta, phi = np.broadcast_arrays(*arrs)
    m = build_e0_mats(a, b, c, theta)
    m[:, 0, 0] = f
    m[:, 3, 3] = 1.0 - a - b - f
    m[:, 0, 3] = 0.5 * d * np.exp(1j * phi)
    m[:, 3, 0] = np.conj(m[:, 0, 3])
    return m


def purity_batch(mats) -> np.ndarray:
    return np.einsum("nij,nji->n", mats, mats).real


def linear_entropy_batch(mats) -> np.ndarray:
    return (4.0 / 3.0) * (1.0 - purity_batch(mats))


def _reduced_purities(mats):
    # rho_A = Tr_B rho and rho_B = Tr_A rho; purity of a unit-trace 2x2
    # matrix from its (0,0) entry and off-diagonal.
    a00 = (mats[:, 0, 0] + mats[:, 1, 1]).real
    a01 = mats[:, 0, 2] + mats[:, 1, 3]
    b00 = (mats[:, 0, 0] + mats[:, 2, 2]).real
    b01 = mats[:, 0, 1] + mats[:, 2, 3]
    pa = a00**2 + (1.0 - a00) ** 2 + 2.0 * np.abs(a01) ** 2
    pb = b00**2 + (1.0 - b00) ** 2 + 2.0 * np.abs(b01) ** 2
    return pa, pb


def gaps_batch(mats) -> tuple[np.ndarray, np.ndarray]:
    """Entropic-inequality gaps (gap_a, gap_b) for a stack of states."""
    p = purity_batch(mats)
    pa, pb = _reduced_purities(mats)
    return p - pa, p - pb


def concurrence_x_batch(diag, rho14, rho23) -> np.ndarray:
    """Closed-form concurrence for stacks of X-shaped states.

    ``diag`` is (n, 4); ``rho14`` / ``rho23`` are the complex coherences.
    """
    d = np.asarray(diag, dtype=float)
    t1 = np.abs(np.asarray(rho23)) - np.sqrt(np.clip(d[:, 0] * d[:, 3], 0.0, None))
    t2 = np.abs(np.asarray(rho14)) - np.sqrt(np.clip(d[:, 1] * d[:, 2], 0.0, None))
    return 2.0 * np.maximum(0.0, np.maximum(t1, t2))


def concurrence_wootters_batch(mats) -> np.ndarray:
    """Spectral-route concurrence for an (n, 4, 4) stack."""
    w, v = np.linalg.eigh(mats)
    w = np.clip(w, 0.0, None)
    roots = np.einsum("nij,nj,nkj->nik", v, np.sqrt(w), v.conj())
    tilde = SYSY @ mats.conj() @ SYSY
    h = roots @ tilde @ roots
    h = 0.5 * (h + np.conj(np.swapaxes(h, 1, 2)))
    lam = np.sqrt(np.clip(np.linalg.eigvalsh(h), 0.0, None))
    return np.maximum(0.0, 2.0 * lam[:, -1] - lam.sum(axis=1))


def chsh_batch(mats) -> np.ndarray:
    """Maximal CHSH value for an (n, 4, 4) stack."""
    t = np.einsum("nij,pji->np", mats, PAULI_KRON).real.reshape(-1, 3, 3)
    w = np.linalg.eigvalsh(np.swapaxes(t, 1, 2) @ t)
    return 2.0 * np.sqrt(np.clip(w[:, -1] + w[:, -2], 0.0, None))


def pt_min_eig_batch(mats) -> np.ndarray:
    """Smallest eigenvalue of the partial transpose over qubit A, per state."""
    n = mats.shape[0]
    pt = mats.reshape(n, 2, 2, 2, 2).transpose(0, 3, 2, 1, 4).reshape(n, 4, 4)
    return np.linalg.eigvalsh(pt)[:, 0]


def von_neumann_batch(mats) -> np.ndarray:
    w = np.clip(np.linalg.eigvalsh(mats), 0.0, None)
    logs = np.where(w > 0.0, np.log2(np.where(w > 0.0, w, 1.0)), 0.0)
    return -(w * logs).sum(axis=1)


def reduced_spectra_batch(mats) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalue pairs of (rho_A, rho_B) for a stack, each (n, 2) ascending."""
    a00 = (mats[:, 0, 0] + mats[:, 1, 1]).real
    a01 = mats[:, 0, 2] + mats[:, 1, 3]
    b00 = (mats[:, 0, 0] + mats[:, 2, 2]).real
    b01 = mats[:, 0, 1] + mats[:, 2, 3]

    def eig2(p00, off):
        det = p00 * (1.0 - p00) - np.abs(off) ** 2
        disc = np.sqrt(np.clip(0.25 - det, 0.0, None))
        return np.stack([0.5 - disc, 0.5 + disc], axis=1)

    return eig2(a00, a01), eig2(b00, b01)
