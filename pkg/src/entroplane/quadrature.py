"""One-dimensional adaptive Simpson quadrature with mandatory breakpoints.

The integrands appearing in the region-area computations are piecewise smooth
with kinks and square-root derivative singularities at known abscissae, so the
panel boundaries are an explicit argument rather than something the routine
tries to discover.
"""

from collections.abc import Callable, Sequence

from .errors import MaxDepthError

MAX_DEPTH = 60


def _simpson(f, a, fa, b, fb):
    mid = 0.5 * (a + b)
    fm = f(mid)
    return mid, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def _adaptive(f, a, fa, b, fb, whole, mid, fm, tol, depth):
    lm, flm, left = _simpson(f, a, fa, mid, fm)
    rm, frm, right = _simpson(f, mid, fm, b, fb)
    delta = left + right - whole
    if abs(delta) <= 15.0 * tol:
        # Richardson extrapolation of the two half-panel estimates.
        return left + right + delta / 15.0
    if depth >= MAX_DEPTH:
        raise MaxDepthError(
            f"recursion depth {MAX_DEPTH} exceeded on [{a!r}, {b!r}] with residual {abs(delta):.3e}"
        )
    return _adaptive(f, a, fa, mid, fm, left, lm, flm, tol / 2.0, depth + 1) + _adaptive(
        f, mid, fm, b, fb, right, rm, frm, tol / 2.0, depth + 1
    )


def integrate_adaptive(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    breakpoints: Sequence[float] = (),
    tol: float = 1e-10,
) -> float:
    """Integrate ``f`` over ``[lo, hi]`` to absolute accuracy ``tol``.

    ``breakpoints`` must be sorted values inside ``[lo, hi]``; each
    sub-interval between consecutive breakpoints is refined independently with
    adaptive Simpson, with ``tol`` shared between panels in proportion to
    their width.

    Raises ``MaxDepthError`` if a panel needs more than ``MAX_DEPTH`` levels
    of bisection.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if hi < lo:
        raise ValueError(f"integration bounds out of order: lo={lo} > hi={hi}")
    pts = [float(lo)]
    for b in breakpoints:
        b = float(b)
        if not lo <= b <= hi:
            raise ValueError(f"breakpoint {b} outside [{lo}, {hi}]")
        if b < pts[-1]:
            raise ValueError("breakpoints must be sorted ascending")
        if b > pts[-1]:
            pts.append(b)
    if hi > pts[-1]:
        pts.append(float(hi))
    width = hi - lo
    if width == 0.0:
        return 0.0
    total = 0.0
    for a, b in zip(pts[:-1], pts[1:]):
        fa, fb = f(a), f(b)
        mid, fm, whole = _simpson(f, a, fa, b, fb)
        total += _adaptive(f, a, fa, b, fb, whole, mid, fm, tol * (b - a) / width, 0)
    return total
