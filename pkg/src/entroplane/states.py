"""Two-qubit density matrices: validation, reductions, purity, linear entropy.

Basis convention
----------------
All 4x4 matrices live in the ordered product basis ``|00>, |01>, |10>, |11>``
(qubit A first), so row/column index ``2*i + k`` carries A-index ``i`` and
B-index ``k``.  Partial transposition acts on qubit A; for the positivity test
the choice of subsystem is immaterial because the two partial transposes are
related by transposition and share their spectrum.

Text format
-----------
``parse_density_text`` / ``format_density_text`` implement the on-disk format
used by the command line: four lines of four whitespace-separated entries,
each entry ``re,im`` with plain floating-point literals (no expressions).
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidStateError, NotPSDError, TraceNotOneError
from .linalg import HERMITICITY_TOL, PSD_CLAMP, as_cmatrix, require_hermitian

TRACE_TOL = 1e-12


def _freeze(m: np.ndarray) -> np.ndarray:
    m = np.ascontiguousarray(m, dtype=complex)
    m.setflags(write=False)
    return m


@dataclass(frozen=True, eq=False, repr=False)
class DensityMatrix:
    """A validated 4x4 density matrix (Hermitian, unit trace, PSD).

    Construct through :func:`make_density`; the wrapped array is read-only.
    """

    mat: np.ndarray = field()

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.mat, dtype=dtype)

    def __repr__(self):
        d = np.real(np.diag(self.mat))
        return f"DensityMatrix(diag=[{d[0]:.6g}, {d[1]:.6g}, {d[2]:.6g}, {d[3]:.6g}])"


@dataclass(frozen=True, eq=False, repr=False)
class ReducedDensity:
    """A validated single-qubit (2x2) density matrix."""

    mat: np.ndarray = field()

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.mat, dtype=dtype)

    def __repr__(self):
        d = np.real(np.diag(self.mat))
        return f"ReducedDensity(diag=[{d[0]:.6g}, {d[1]:.6g}])"


def mat_of(rho) -> np.ndarray:
    """Underlying ndarray of a DensityMatrix/ReducedDensity, or the array itself."""
    if isinstance(rho, (DensityMatrix, ReducedDensity)):
        return rho.mat
    return np.asarray(rho, dtype=complex)


def _validate(m: np.ndarray, cls):
    require_hermitian(m, HERMITICITY_TOL)
    tr = np.trace(m).real
    if abs(tr - 1.0) > TRACE_TOL:
        raise TraceNotOneError(f"trace is {tr!r}, differs from 1 by {abs(tr - 1.0):.3e}")
    w = np.linalg.eigvalsh(m)
    if w[0] < -PSD_CLAMP:
        raise NotPSDError(f"not positive semidefinite: min eigenvalue = {w[0]:.3e}")
    return cls(_freeze(m))


def make_density(entries) -> DensityMatrix:
    """Validate ``entries`` as a two-qubit density matrix.

    Raises ``NotHermitianError``, ``TraceNotOneError`` or ``NotPSDError``
    with the offending quantity in the message.
    """
    return _validate(as_cmatrix(entries, dim=4), DensityMatrix)


def make_reduced(entries) -> ReducedDensity:
    """Validate ``entries`` as a single-qubit density matrix."""
    return _validate(as_cmatrix(entries, dim=2), ReducedDensity)


def partial_trace_b_out(rho) -> ReducedDensity:
    """Trace out qubit B, returning the reduced state of qubit A.

    ``rho_A[i, j] = sum_k rho[2i + k, 2j + k]``.
    """
    m = mat_of(rho).reshape(2, 2, 2, 2)
    return ReducedDensity(_freeze(np.einsum("ikjk->ij", m)))


def partial_trace_a_out(rho) -> ReducedDensity:
    """Trace out qubit A, returning the reduced state of qubit B."""
    m = mat_of(rho).reshape(2, 2, 2, 2)
    return ReducedDensity(_freeze(np.einsum("kikj->ij", m)))


def partial_transpose(rho) -> np.ndarray:
    """Transpose on the qubit-A index: ``out[2i+k, 2j+l] = rho[2j+k, 2i+l]``.

    The result is Hermitian but in general not PSD; a negative eigenvalue
    certifies entanglement (and for two qubits the converse holds as well).
    """
    m = mat_of(rho).reshape(2, 2, 2, 2)
    return m.transpose(2, 1, 0, 3).reshape(4, 4)


def purity(rho) -> float:
    """Tr(rho^2); 1 for pure states, 1/4 for the maximally mixed state."""
    m = mat_of(rho)
    return float(np.einsum("ij,ji->", m, m).real)


def linear_entropy(rho) -> float:
    """Normalized linear entropy (4/3)(1 - Tr rho^2) of a two-qubit state.

    Ranges from 0 (pure) to 1 (maximally mixed).
    """
    m = mat_of(rho)
    if m.shape != (4, 4):
        raise ValueError("linear_entropy is defined here for two-qubit (4x4) states")
    return (4.0 / 3.0) * (1.0 - float(np.einsum("ij,ji->", m, m).real))


def parse_density_text(text: str) -> DensityMatrix:
    """Parse the 4-line ``re,im`` density-matrix text format.

    Raises ``InvalidStateError`` with the line/field position for malformed
    input; the assembled matrix is then validated by :func:`make_density`.
    """
    rows = []
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("#")]
    if len(lines) != 4:
        raise InvalidStateError(f"expected 4 matrix rows, found {len(lines)}")
    for i, line in enumerate(lines, start=1):
        fields = line.split()
        if len(fields) != 4:
            raise InvalidStateError(f"line {i}: expected 4 entries, found {len(fields)}")
        row = []
        for j, tok in enumerate(fields, start=1):
            parts = tok.split(",")
            if len(parts) != 2:
                raise InvalidStateError(f"line {i}, field {j}: expected 're,im', got {tok!r}")
            try:
                row.append(complex(float(parts[0]), float(parts[1])))
            except ValueError as exc:
                raise InvalidStateError(f"line {i}, field {j}: {exc}") from exc
        rows.append(row)
    return make_density(rows)


def format_density_text(rho) -> str:
    """Serialize a density matrix in the text format accepted by the CLI."""
    m = mat_of(rho)
    lines = []
    for i in range(4):
        lines.append(" ".join(f"{m[i, j].real:.17g},{m[i, j].imag:.17g}" for j in range(4)))
    return "\n".join(lines) + "\n"
