"""Dense complex linear algebra for the 2x2 and 4x4 matrices used everywhere else.

Matrices are plain ``numpy.ndarray`` objects with ``dtype=complex128``.  The
helpers here add the validation and the ordering conventions the rest of the
library relies on: Hermiticity checks, descending eigenvalues, and a
positive-semidefinite matrix square root with a documented clamp for
rounding-level negative eigenvalues.
"""

from typing import NamedTuple

import numpy as np

from .errors import NoConvergenceError, NotHermitianError, NotPSDError

# Hermiticity tolerance shared with density-matrix validation.
HERMITICITY_TOL = 1e-12
# Eigenvalues in [-PSD_CLAMP, 0) are treated as rounding noise and clamped to 0.
PSD_CLAMP = 1e-10


class EigenDecomposition(NamedTuple):
    """Spectral decomposition of a Hermitian matrix.

    ``eigenvalues`` are real and sorted in descending order; the columns of
    ``eigenvectors`` are the matching orthonormal eigenvectors, so that
    ``eigenvectors @ diag(eigenvalues) @ eigenvectors.conj().T`` reconstructs
    the input.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_cmatrix(entries, dim: int | None = None) -> np.ndarray:
    """Coerce ``entries`` to a square complex matrix of dimension 2 or 4.

    Raises ``ValueError`` for wrong shapes, unsupported dimensions or
    non-finite entries.
    """
    m = np.asarray(entries, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] not in (2, 4):
        raise ValueError(f"only 2x2 and 4x4 matrices are supported, got {m.shape[0]}x{m.shape[0]}")
    if dim is not None and m.shape[0] != dim:
        raise ValueError(f"expected a {dim}x{dim} matrix, got {m.shape[0]}x{m.shape[0]}")
    if not np.all(np.isfinite(m.view(float))):
        raise ValueError("matrix entries must be finite")
    return m


def hermiticity_defect(m: np.ndarray) -> float:
    """Largest entry-wise deviation from Hermitian symmetry, max |M - M^dagger|."""
    return float(np.abs(m - m.conj().T).max())


def require_hermitian(m: np.ndarray, tol: float = HERMITICITY_TOL) -> None:
    defect = hermiticity_defect(m)
    if defect > tol:
        raise NotHermitianError(f"matrix is not Hermitian: max |M - M^dagger| = {defect:.3e} > {tol:.1e}")


def hermitian_eigen(m, tol: float = 1e-13) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian 2x2 or 4x4 matrix.

    Parameters
    ----------
    m : array_like
        Hermitian matrix (checked to ``HERMITICITY_TOL``).
    tol : float
        Requested convergence target for the off-diagonal residual.  The
        LAPACK backend always drives the residual to machine precision, which
        is below any meaningful ``tol``; the parameter is kept so callers can
        state their requirement explicitly.

    Returns
    -------
    EigenDecomposition
        Real eigenvalues in descending order and the unitary of column
        eigenvectors.

    Raises
    ------
    NotHermitianError
        If the input is not Hermitian within tolerance.
    NoConvergenceError
        If the backend fails to converge.
    """
    m = as_cmatrix(m)
    require_hermitian(m)
    if not tol > 0:
        raise ValueError("tol must be positive")
    try:
        w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails on 4x4
        raise NoConvergenceError(str(exc)) from exc
    # eigh returns ascending order; flip to descending.
    return EigenDecomposition(w[::-1].copy(), v[:, ::-1].copy())


def matrix_sqrt_psd(m) -> np.ndarray:
    """Hermitian square root of a positive-semidefinite matrix.

    Eigenvalues in ``[-PSD_CLAMP, 0)`` are clamped to zero before taking the
    square root; anything more negative raises ``NotPSDError``.  The result R
    is Hermitian PSD with ``R @ R == m`` to within a few units of rounding.
    """
    m = as_cmatrix(m)
    require_hermitian(m)
    w, v = np.linalg.eigh(m)
    if w[0] < -PSD_CLAMP:
        raise NotPSDError(f"matrix is not PSD: min eigenvalue = {w[0]:.3e} < -{PSD_CLAMP:.1e}")
    root = np.sqrt(np.clip(w, 0.0, None))
    out = (v * root) @ v.conj().T
    # Re-symmetrize to remove rounding-level asymmetry.
    return 0.5 * (out + out.conj().T)
