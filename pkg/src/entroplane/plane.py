"""Geometry of the concurrence / linear-entropy plane.

A two-qubit state maps to a point ``(c, s)`` with ``c`` its concurrence and
``s`` its normalized linear entropy.  Within the single-coherence X-state
family the quadratic entropic criterion partitions the physical region into
three zones: points where every state with those coordinates violates the
inequality (``V_E``), points where none does (``NV_E``), and points realized
by both violating and non-violating states (``Zero_E``).  This module holds
the boundary curves, the classifiers (entropic and CHSH), the region areas,
and the level-set machinery backing them.

Level sets
----------
With ``x = (a - b)/sqrt(2)`` and ``y = (a + b - 2/3)/sqrt(2)``, family
members of concurrence ``c`` occupy the region ``X+`` bounded by a hyperbola
(block positivity) and the line ``y = 1/(3 sqrt(2))`` (unit trace); states of
fixed linear entropy ``s`` sit on an ellipse with semi-axes ``A = sqrt(3) B``.
The violation gap restricted to the level set changes sign across the curve
``eineq_lhs = 0``, and extremizing the CHSH value over the same level set
yields the CHSH region classifier.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .errors import DomainError, NoLevelSetError
from .families import E0Params
from .quadrature import integrate_adaptive

INV_SQRT2 = 1.0 / math.sqrt(2.0)
# Largest attainable y: a + b = 1.
Y_CAP = 1.0 / (3.0 * math.sqrt(2.0))
# Points closer than this to a boundary curve are snapped onto it before
# classification, so states constructed from closed forms land on the side
# the curve definitions intend.
BOUNDARY_SNAP = 1e-12

_TWO_THIRDS = 2.0 / 3.0


class RegionLabel(str, Enum):
    """Classification of a plane point (also reused for the CHSH regions)."""

    V_E = "V_E"
    ZERO_E = "Zero_E"
    NV_E = "NV_E"
    NON_PHYSICAL = "NonPhysical"


_CODE_TO_LABEL = (RegionLabel.V_E, RegionLabel.ZERO_E, RegionLabel.NV_E, RegionLabel.NON_PHYSICAL)


class PlanePoint(NamedTuple):
    c: float
    s: float


class XYPoint(NamedTuple):
    x: float
    y: float


class EllipseSpec(NamedTuple):
    """Semi-axes of a linear-entropy level set; always ``A = sqrt(3) * B``."""

    A: float
    B: float


@dataclass(frozen=True)
class AreaReport:
    """Absolute areas and percentages of the three regions.

    Percentages are relative to ``total_area``, the area of the physical
    region under the MEMS frontier.
    """

    total_area: float
    areas: dict
    percentages: dict
    method: str
    tolerance: float


# --- boundary curves ---------------------------------------------------------


def s_l1(c):
    """Upper entropy frontier branch (8/3) c (1 - c), tight for c >= 2/3."""
    c = np.asarray(c, dtype=float)
    return (8.0 / 3.0) * c * (1.0 - c)


def s_l2(c):
    """Upper entropy frontier branch 8/9 - (2/3) c^2, tight for c <= 2/3."""
    c = np.asarray(c, dtype=float)
    return 8.0 / 9.0 - (2.0 / 3.0) * c * c


def frontier_mems(c: float) -> float:
    """Largest linear entropy attainable at concurrence ``c`` (MEMS frontier)."""
    c = float(c)
    if c <= 0.0 or c > 1.0:
        raise DomainError(f"frontier is defined for c in (0, 1], got {c}")
    return float(s_l1(c) if c >= _TWO_THIRDS else s_l2(c))


# |1 - 2 c^2| below this is treated as exactly the curve-merging endpoint
# c = 1/sqrt(2); the square root would otherwise amplify the rounding of
# c^2 (~1e-16) into ~1e-8 of curve error right where the curves meet.
RADICAND_SNAP = 1e-12


def _radical(c: float) -> float:
    rad = 1.0 - 2.0 * float(c) * float(c)
    if rad < -RADICAND_SNAP:
        raise DomainError(f"curves are defined for c in [0, 1/sqrt(2)], got {c}")
    if abs(rad) <= RADICAND_SNAP:
        return 0.0
    return math.sqrt(rad)


def s_l_minus(c: float) -> float:
    """Lower critical curve (1/3)(1 + c^2 - sqrt(1 - 2 c^2)) on [0, 1/sqrt(2)]."""
    c = float(c)
    if c < 0.0:
        raise DomainError(f"curves are defined for c >= 0, got {c}")
    return (1.0 + c * c - _radical(c)) / 3.0


def s_l_plus(c: float) -> float:
    """Upper critical curve (1/3)(1 + c^2 + sqrt(1 - 2 c^2)) on [0, 1/sqrt(2)]."""
    c = float(c)
    if c < 0.0:
        raise DomainError(f"curves are defined for c >= 0, got {c}")
    return (1.0 + c * c + _radical(c)) / 3.0


# --- (x, y) coordinates ------------------------------------------------------


def to_xy(a: float, b: float) -> XYPoint:
    """Diagonal weights to level-set coordinates: x=(a-b)/sqrt2, y=(a+b-2/3)/sqrt2."""
    return XYPoint((a - b) / math.sqrt(2.0), (a + b - _TWO_THIRDS) / math.sqrt(2.0))


def xy_to_ab(p: XYPoint) -> tuple[float, float]:
    """Inverse of :func:`to_xy`."""
    x, y = p
    apb = math.sqrt(2.0) * y + _TWO_THIRDS
    amb = math.sqrt(2.0) * x
    return 0.5 * (apb + amb), 0.5 * (apb - amb)


def hyperbola_margin(p: XYPoint, c: float) -> float:
    """Signed block-positivity margin ``y^2 + (2 sqrt2/3) y - x^2 - c^2/2 + 2/9``.

    Non-negative exactly when the diagonal weights satisfy ``a b >= c^2/4``.
    """
    x, y = p
    return y * y + (2.0 * math.sqrt(2.0) / 3.0) * y - x * x - c * c / 2.0 + 2.0 / 9.0


def in_x_plus(p: XYPoint, c: float) -> bool:
    """Membership of ``p`` in the admissible region at concurrence ``c``."""
    return hyperbola_margin(p, c) >= 0.0 and p[1] <= Y_CAP


def ellipse_axes(s: float, c: float) -> EllipseSpec:
    """Semi-axes of the level set of linear entropy ``s`` at concurrence ``c``.

    Raises ``NoLevelSetError`` when the radicand ``1/9 - c^2/12 - s/8`` is
    negative, i.e. no family state has this (s, c) pair.
    """
    rad = 1.0 / 9.0 - c * c / 12.0 - s / 8.0
    if rad < -1e-15:
        raise NoLevelSetError(f"no level set at (s={s}, c={c}): radicand = {rad:.3e}")
    rad = max(rad, 0.0)
    return EllipseSpec(math.sqrt(6.0 * rad), math.sqrt(2.0 * rad))


def eineq_lhs(p: XYPoint, c: float) -> float:
    """Quadratic entropic-inequality margin in level-set coordinates.

    Equals half the purity gap ``(Tr rho^2 - Tr rho_A^2) / 2`` of the family
    state at ``p``; the state violates the inequality exactly when this is
    positive.
    """
    x, y = p
    k = 1.0 / (3.0 * math.sqrt(2.0))
    return y * y - x * y + k * y + k * x + c * c / 4.0 - 1.0 / 9.0


# --- entropic classifier -----------------------------------------------------


def _merged_root_array(c: np.ndarray) -> np.ndarray:
    """sqrt(1 - 2 c^2) with the same endpoint snap as :func:`_radical`."""
    rad = 1.0 - 2.0 * c * c
    root = np.sqrt(np.clip(rad, 0.0, None))
    root[np.abs(rad) <= RADICAND_SNAP] = 0.0
    return root


def classify_entropic_array(c, s) -> np.ndarray:
    """Vectorized region classification; returns int8 codes.

    Codes: 0 = V_E, 1 = Zero_E, 2 = NV_E, 3 = NonPhysical.  Points within
    ``BOUNDARY_SNAP`` of a boundary curve are snapped onto it first;
    remaining measure-zero gaps between the literal branch inequalities fall
    through to Zero_E.
    """
    c = np.atleast_1d(np.asarray(c, dtype=float)).copy()
    s = np.atleast_1d(np.asarray(s, dtype=float)).copy()
    if c.shape != s.shape:
        raise ValueError("c and s must have matching shapes")
    if not (np.all(np.isfinite(c)) and np.all(np.isfinite(s))):
        raise DomainError("plane coordinates must be finite")
    if np.any(c < -1e-9) or np.any(c > 1.0 + 1e-9) or np.any(s < -1e-9) or np.any(s > 1.0 + 1e-9):
        raise DomainError("plane coordinates must lie in [0, 1] x [0, 1]")
    np.clip(c, 0.0, 1.0, out=c)
    np.clip(s, 0.0, 1.0, out=s)

    for cc in (0.0, 0.5, _TWO_THIRDS, INV_SQRT2, 1.0):
        c[np.abs(c - cc) <= BOUNDARY_SNAP] = cc

    inner = c <= INV_SQRT2
    root = _merged_root_array(c)
    slm = np.where(inner, (1.0 + c * c - root) / 3.0, -np.inf)
    slp = np.where(inner, (1.0 + c * c + root) / 3.0, np.inf)
    sl1c = s_l1(c)
    sl2c = s_l2(c)
    fr = np.where(c >= _TWO_THIRDS, sl1c, sl2c)

    unsnapped = np.ones(s.shape, dtype=bool)
    for curve in (fr, sl1c, sl2c, np.full_like(s, _TWO_THIRDS), slm, slp):
        hit = unsnapped & np.isfinite(curve) & (np.abs(s - curve) <= BOUNDARY_SNAP)
        s[hit] = curve[hit]
        unsnapped &= ~hit

    out = np.ones(c.shape, dtype=np.int8)  # Zero_E default
    v = ((c > 0.0) & (c < INV_SQRT2) & (s < slm)) | (
        (c >= _TWO_THIRDS) & (c <= INV_SQRT2) & (slp < s) & (s <= sl1c)
    ) | ((c > INV_SQRT2) & (s <= sl1c))
    nv = ((c > 0.0) & (c < 0.5) & (s > _TWO_THIRDS) & (s <= sl2c)) | (
        (c >= 0.5) & (c < _TWO_THIRDS) & (sl1c <= s) & (s <= sl2c)
    )
    out[v] = 0
    out[nv] = 2
    out[(c > 0.0) & (s > fr)] = 3
    # Zero concurrence means separable, hence never violating, at any entropy.
    out[c == 0.0] = 2
    return out


def classify_entropic(point) -> RegionLabel:
    """Region of a single plane point (see :func:`classify_entropic_array`)."""
    code = classify_entropic_array(
        np.array([float(point[0])]), np.array([float(point[1])])
    )[0]
    return _CODE_TO_LABEL[code]


def boundary_band_mask(c, s, band: float = 1e-9) -> np.ndarray:
    """True where (c, s) is farther than ``band`` from every region boundary."""
    c = np.asarray(c, dtype=float)
    s = np.asarray(s, dtype=float)
    ok = c > band
    for cc in (0.5, _TWO_THIRDS, INV_SQRT2, 1.0):
        ok &= np.abs(c - cc) > band
    ok &= np.abs(s - _TWO_THIRDS) > band
    ok &= np.abs(s - s_l1(c)) > band
    ok &= np.abs(s - s_l2(c)) > band
    inner = c < INV_SQRT2
    cmin = np.minimum(c, INV_SQRT2)
    root = _merged_root_array(cmin)
    cc2 = cmin**2
    slm = (1.0 + cc2 - root) / 3.0
    slp = (1.0 + cc2 + root) / 3.0
    ok &= ~inner | ((np.abs(s - slm) > band) & (np.abs(s - slp) > band))
    return ok


# --- level sets --------------------------------------------------------------


def level_set_y_intervals(c: float, s: float) -> list[tuple[float, float]]:
    """Attainable y-ranges of the level set at ``(c, s)``.

    The ellipse of constant linear entropy is intersected with the
    block-positivity region; the result is a union of at most two closed
    intervals (possibly empty for non-physical coordinates above the
    frontier).  Raises ``NoLevelSetError`` when the ellipse itself does not
    exist.
    """
    _, b_axis = ellipse_axes(s, c)  # raises NoLevelSetError if no ellipse
    ylo, yhi = -b_axis, min(b_axis, Y_CAP)
    if ylo > yhi:
        return []
    # Positivity margin along the ellipse is an upward parabola in y:
    # h(y) = 4 y^2 + (2 sqrt2/3) y + 2/9 - c^2/2 - 3 B^2.
    k = 2.0 / 9.0 - c * c / 2.0 - 3.0 * b_axis * b_axis
    disc = 8.0 / 9.0 - 16.0 * k
    if disc <= 0.0:
        return [(ylo, yhi)]
    r1 = (-2.0 * math.sqrt(2.0) / 3.0 - math.sqrt(disc)) / 8.0
    r2 = (-2.0 * math.sqrt(2.0) / 3.0 + math.sqrt(disc)) / 8.0
    slack = 1e-12
    pieces = []
    if r1 >= ylo - slack:
        pieces.append((ylo, min(max(r1, ylo), yhi)))
    if r2 <= yhi + slack:
        pieces.append((max(min(r2, yhi), ylo), yhi))
    return [p for p in pieces if p[0] <= p[1] + slack]


def e0_params_on_level(c: float, s: float, y: float, x_sign: int = 1) -> E0Params:
    """Family parameters of the level-set state at ordinate ``y``.

    ``x_sign`` selects one of the two mirror states; ``y`` must lie inside an
    interval returned by :func:`level_set_y_intervals`.
    """
    a_axis, b_axis = ellipse_axes(s, c)
    if abs(y) > b_axis + 1e-12:
        raise NoLevelSetError(f"|y| = {abs(y)} exceeds semi-axis B = {b_axis}")
    x2 = max(3.0 * (b_axis * b_axis - y * y), 0.0)
    x = math.copysign(math.sqrt(x2), x_sign)
    a, b = xy_to_ab(XYPoint(x, y))
    return E0Params(a, b, c, 0.0)


# --- CHSH classifier ---------------------------------------------------------


def chsh_level_bounds(c: float, s: float) -> tuple[float, float] | None:
    """Range of the maximal CHSH value over the level set at ``(c, s)``.

    For this family the CHSH value depends only on ``(c, y)`` through
    ``2 sqrt(c^2 + max(c^2, w^2))`` with ``w = 1/3 + 2 sqrt2 y``; the bounds
    follow from the attainable y-intervals.  Returns ``None`` when the level
    set is empty (coordinates above the frontier).
    """
    pieces = level_set_y_intervals(c, s)
    if not pieces:
        return None
    wmin, wmax = math.inf, 0.0
    for ylo, yhi in pieces:
        wlo = 1.0 / 3.0 + 2.0 * math.sqrt(2.0) * ylo
        whi = 1.0 / 3.0 + 2.0 * math.sqrt(2.0) * yhi
        lo = 0.0 if wlo <= 0.0 <= whi else min(abs(wlo), abs(whi))
        wmin = min(wmin, lo)
        wmax = max(wmax, abs(wlo), abs(whi))
    lo_val = 2.0 * math.sqrt(c * c + max(c * c, wmin * wmin))
    hi_val = 2.0 * math.sqrt(c * c + max(c * c, wmax * wmax))
    return lo_val, hi_val


def classify_chsh(point, tol: float = 1e-9) -> RegionLabel:
    """CHSH analogue of :func:`classify_entropic` by level-set extremization.

    ``V_E`` means every family state at these coordinates violates CHSH
    (minimum over the level set exceeds ``2 + tol``), ``NV_E`` that none does,
    ``Zero_E`` that the level set straddles the threshold.
    """
    c, s = float(point[0]), float(point[1])
    bounds = chsh_level_bounds(c, s)
    if bounds is None:
        return RegionLabel.NON_PHYSICAL
    lo, hi = bounds
    if lo > 2.0 + tol:
        return RegionLabel.V_E
    if hi < 2.0 - tol:
        return RegionLabel.NV_E
    return RegionLabel.ZERO_E


def _chsh_codes_at(c: float, s: np.ndarray, tol: float) -> np.ndarray:
    """Vectorized CHSH labels along a column of fixed ``c`` (codes as above)."""
    s = np.asarray(s, dtype=float)
    rad = np.clip(1.0 / 9.0 - c * c / 12.0 - s / 8.0, 0.0, None)
    b_axis = np.sqrt(2.0 * rad)
    ylo = -b_axis
    yhi = np.minimum(b_axis, Y_CAP)
    k = 2.0 / 9.0 - c * c / 2.0 - 3.0 * b_axis * b_axis
    disc = 8.0 / 9.0 - 16.0 * k
    sq = np.sqrt(np.clip(disc, 0.0, None))
    r1 = (-2.0 * math.sqrt(2.0) / 3.0 - sq) / 8.0
    r2 = (-2.0 * math.sqrt(2.0) / 3.0 + sq) / 8.0
    slack = 1e-12
    whole = disc <= 0.0
    p1 = whole | (r1 >= ylo - slack)
    p2 = whole | (r2 <= yhi + slack)
    lo1 = ylo
    hi1 = np.where(whole, yhi, np.minimum(np.maximum(r1, ylo), yhi))
    lo2 = np.where(whole, ylo, np.maximum(np.minimum(r2, yhi), ylo))
    hi2 = yhi
    p1 &= lo1 <= hi1 + slack
    p2 &= lo2 <= hi2 + slack

    def wrange(lo, hi):
        wlo = 1.0 / 3.0 + 2.0 * math.sqrt(2.0) * lo
        whi = 1.0 / 3.0 + 2.0 * math.sqrt(2.0) * hi
        wmin = np.where((wlo <= 0.0) & (whi >= 0.0), 0.0, np.minimum(np.abs(wlo), np.abs(whi)))
        return wmin, np.maximum(np.abs(wlo), np.abs(whi))

    w1min, w1max = wrange(lo1, hi1)
    w2min, w2max = wrange(lo2, hi2)
    wmin = np.where(p1, w1min, np.inf)
    wmin = np.minimum(wmin, np.where(p2, w2min, np.inf))
    wmax = np.where(p1, w1max, 0.0)
    wmax = np.maximum(wmax, np.where(p2, w2max, 0.0))
    empty = ~(p1 | p2)
    wmin = np.where(empty, 0.0, wmin)
    lo_val = 2.0 * np.sqrt(c * c + np.maximum(c * c, wmin * wmin))
    hi_val = 2.0 * np.sqrt(c * c + np.maximum(c * c, wmax * wmax))
    codes = np.where(lo_val > 2.0 + tol, 0, np.where(hi_val < 2.0 - tol, 2, 1)).astype(np.int8)
    codes[empty] = 3
    return codes


# --- areas -------------------------------------------------------------------

_PAPER_BREAKPOINTS = (0.5, _TWO_THIRDS, INV_SQRT2)


def _frontier_len(c: float) -> float:
    return float(s_l1(c)) if c >= _TWO_THIRDS else float(s_l2(c))


# The two per-column region lengths below use the c -> 0+ limits at c = 0
# (the line c = 0 has measure zero) so the integrands stay continuous there.


def _v_len(c: float) -> float:
    if c < 0.0:
        return 0.0
    if c <= _TWO_THIRDS:
        return s_l_minus(c)
    if c <= INV_SQRT2:
        return s_l_minus(c) + float(s_l1(c)) - s_l_plus(c)
    return float(s_l1(c))


def _nv_len(c: float) -> float:
    if c < 0.0 or c >= _TWO_THIRDS:
        return 0.0
    if c < 0.5:
        return float(s_l2(c)) - _TWO_THIRDS
    return float(s_l2(c)) - float(s_l1(c))


def _zero_len(c: float) -> float:
    return _frontier_len(c) - _v_len(c) - _nv_len(c)


def entropic_region_areas(tol: float = 1e-10) -> AreaReport:
    """Areas of the entropic regions by quadrature of the closed-form bounds.

    The integrands are piecewise smooth with kinks at c = 1/2 and 2/3 and a
    square-root derivative singularity at c = 1/sqrt(2), all passed as panel
    breakpoints.
    """
    total = integrate_adaptive(_frontier_len, 0.0, 1.0, _PAPER_BREAKPOINTS, tol)
    areas = {
        RegionLabel.V_E: integrate_adaptive(_v_len, 0.0, 1.0, _PAPER_BREAKPOINTS, tol),
        RegionLabel.ZERO_E: integrate_adaptive(_zero_len, 0.0, 1.0, _PAPER_BREAKPOINTS, tol),
        RegionLabel.NV_E: integrate_adaptive(_nv_len, 0.0, 1.0, _PAPER_BREAKPOINTS, tol),
    }
    pct = {k: 100.0 * v / total for k, v in areas.items()}
    return AreaReport(total, areas, pct, "adaptive-simpson", tol)


def chsh_region_areas(resolution: int = 1200, tol: float = 1e-9) -> AreaReport:
    """Areas of the CHSH regions by scanning columns of the plane.

    For each of ``resolution`` midpoint abscissae the column ``[0,
    frontier(c)]`` is segmented by label (coarse scan plus bisection of each
    transition) and the per-label lengths are accumulated; the fixed
    chunking makes the result bit-stable for a given resolution.
    """
    resolution = int(resolution)
    if resolution < 10:
        raise ValueError("resolution must be at least 10")
    n_nodes = 256
    acc = {RegionLabel.V_E: 0.0, RegionLabel.ZERO_E: 0.0, RegionLabel.NV_E: 0.0}
    total = 0.0
    width = 1.0 / resolution
    for i in range(resolution):
        c = (i + 0.5) * width
        fr = _frontier_len(c)
        nodes = np.linspace(0.0, fr, n_nodes)
        codes = _chsh_codes_at(c, nodes, tol)
        # The frontier endpoint may round to an empty level set; inherit the
        # label of its neighbour (a measure-zero correction).
        for j in np.nonzero(codes == 3)[0]:
            codes[j] = codes[j - 1] if j > 0 else codes[j + 1]
        lengths = {0: 0.0, 1: 0.0, 2: 0.0}
        pos = 0.0
        for j in range(n_nodes - 1):
            if codes[j] == codes[j + 1]:
                continue
            lo_s, hi_s = nodes[j], nodes[j + 1]
            for _ in range(44):
                mid = 0.5 * (lo_s + hi_s)
                if _chsh_codes_at(c, np.array([mid]), tol)[0] == codes[j]:
                    lo_s = mid
                else:
                    hi_s = mid
            cut = 0.5 * (lo_s + hi_s)
            lengths[int(codes[j])] += cut - pos
            pos = cut
        lengths[int(codes[-1])] += fr - pos
        for code, label in ((0, RegionLabel.V_E), (1, RegionLabel.ZERO_E), (2, RegionLabel.NV_E)):
            acc[label] += lengths[code] * width
        total += fr * width
    pct = {k: 100.0 * v / total for k, v in acc.items()}
    return AreaReport(total, acc, pct, f"level-set-scan(resolution={resolution})", tol)
