"""Exception types raised across the library."""


class EntroplaneError(Exception):
    """Base class for all library-specific errors."""


class NotHermitianError(EntroplaneError, ValueError):
    """Matrix is not Hermitian within tolerance."""


class NotPSDError(EntroplaneError, ValueError):
    """Matrix has an eigenvalue below the negativity tolerance."""


class TraceNotOneError(EntroplaneError, ValueError):
    """Matrix trace differs from one beyond tolerance."""


class NoConvergenceError(EntroplaneError, RuntimeError):
    """Eigensolver failed to converge."""


class MaxDepthError(EntroplaneError, RuntimeError):
    """Adaptive quadrature exceeded the maximum refinement depth."""


class DomainError(EntroplaneError, ValueError):
    """Argument outside the mathematical domain of the operation."""


class InvalidParamsError(EntroplaneError, ValueError):
    """State-family parameters violate a positivity or range condition."""


class InvalidStateError(EntroplaneError, ValueError):
    """Entries do not form a valid density matrix."""


class NoLevelSetError(EntroplaneError, ValueError):
    """No state of the family attains the requested (concurrence, entropy) pair."""
