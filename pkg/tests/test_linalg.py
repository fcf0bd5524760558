import numpy as np
import pytest

from entroplane.errors import NotHermitianError, NotPSDError
from entroplane.linalg import EigenDecomposition, as_cmatrix, hermitian_eigen, matrix_sqrt_psd

from conftest import BELL, random_hermitian, random_psd


def charpoly_roots(m):
    """Quartic-root oracle: eigenvalues from the characteristic polynomial.

    Coefficients come from the Faddeev-LeVerrier recursion (matrix products
    only), roots from the companion matrix; independent of the eigensolver
    under test.  Zero roots are deflated from the trailing coefficients
    first, since multiple roots are badly conditioned for companion-matrix
    root finding.
    """
    n = m.shape[0]
    coeffs = [1.0]
    mk = np.array(m)
    for k in range(1, n + 1):
        ck = -np.trace(mk).real / k
        coeffs.append(ck)
        mk = m @ (mk + ck * np.eye(n))
    zeros = 0
    while abs(coeffs[-1]) < 1e-13 and len(coeffs) > 1:
        coeffs.pop()
        zeros += 1
    roots = np.concatenate([np.roots(coeffs).real, np.zeros(zeros)]) if len(coeffs) > 1 else np.zeros(zeros)
    return np.sort(roots)[::-1]


def test_identity_eigenvalues():
    dec = hermitian_eigen(np.eye(4, dtype=complex))
    assert np.allclose(dec.eigenvalues, np.ones(4), atol=1e-14)


def test_diagonal_eigenvalues_sorted_descending():
    dec = hermitian_eigen(np.diag([0.5, 0.3, 0.2, 0.0]).astype(complex))
    assert np.allclose(dec.eigenvalues, [0.5, 0.3, 0.2, 0.0], atol=1e-14)


def test_mems1_eigenvalues_match_charpoly_oracle():
    m = np.zeros((4, 4), dtype=complex)
    m[1, 1] = m[2, 2] = m[1, 2] = m[2, 1] = 0.35
    m[3, 3] = 0.3
    expected = charpoly_roots(m)
    assert np.allclose(expected, [0.7, 0.3, 0.0, 0.0], atol=1e-12)
    dec = hermitian_eigen(m)
    assert np.allclose(dec.eigenvalues, expected, atol=1e-10)


def test_reconstruction_and_unitarity(rng):
    for dim in (2, 4):
        for _ in range(200):
            m = random_hermitian(rng, dim)
            w, v = hermitian_eigen(m)
            assert np.all(np.diff(w) <= 1e-12)
            rebuilt = (v * w) @ v.conj().T
            assert np.abs(rebuilt - m).max() < 1e-10 * max(1.0, np.abs(m).max())
            assert np.abs(v.conj().T @ v - np.eye(dim)).max() < 1e-10


def test_trace_and_frobenius_identities(rng):
    for _ in range(300):
        m = random_hermitian(rng)
        w = hermitian_eigen(m).eigenvalues
        assert abs(np.trace(m).real - w.sum()) < 1e-10 * max(1.0, abs(w).max())
        assert abs((np.abs(m) ** 2).sum() - (w**2).sum()) < 1e-9


def test_rejects_non_hermitian():
    m = np.eye(4, dtype=complex)
    m[0, 1] = 1e-6
    with pytest.raises(NotHermitianError):
        hermitian_eigen(m)


def test_as_cmatrix_rejects_bad_shapes():
    with pytest.raises(ValueError):
        as_cmatrix(np.zeros((3, 3)))
    with pytest.raises(ValueError):
        as_cmatrix(np.zeros((4, 2)))
    with pytest.raises(ValueError):
        as_cmatrix(np.full((2, 2), np.nan))


def test_sqrt_identity_and_diagonal():
    assert np.allclose(matrix_sqrt_psd(np.eye(4, dtype=complex)), np.eye(4), atol=1e-14)
    r = matrix_sqrt_psd(np.diag([4.0, 1.0, 0.0, 0.25]).astype(complex))
    assert np.allclose(r, np.diag([2.0, 1.0, 0.0, 0.5]), atol=1e-12)


def test_sqrt_of_projector_is_itself():
    # A rank-one projector is idempotent, so it is its own square root.
    assert np.abs(matrix_sqrt_psd(BELL) - BELL).max() < 1e-12


def test_sqrt_squares_back(rng):
    for _ in range(10_000):
        m = random_psd(rng)
        r = matrix_sqrt_psd(m)
        assert np.abs(r @ r - m).max() < 1e-9 * max(1.0, np.abs(m).max())


def test_sqrt_clamps_rounding_negatives_but_rejects_genuine():
    m = np.diag([1.0, 0.5, 0.0, -5e-11]).astype(complex)
    r = matrix_sqrt_psd(m)
    assert np.abs(r @ r - np.diag([1.0, 0.5, 0.0, 0.0])).max() < 1e-9
    with pytest.raises(NotPSDError):
        matrix_sqrt_psd(np.diag([1.0, 0.5, 0.0, -1e-6]).astype(complex))


def test_eigen_result_type():
    dec = hermitian_eigen(np.eye(2, dtype=complex))
    assert isinstance(dec, EigenDecomposition)
    assert dec.eigenvalues.shape == (2,)
    assert dec.eigenvectors.shape == (2, 2)
