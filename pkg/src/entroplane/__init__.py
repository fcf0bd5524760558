"""Two-qubit entanglement vs. mixedness toolkit.

Concurrence, Renyi/Tsallis entropies and their conditional forms, the
quadratic entropic inequality and the CHSH criterion for 4x4 density
matrices; X-state families with deterministic Monte Carlo samplers; and the
decomposition of the concurrence / linear-entropy plane into regions where
the entropic inequality is always, sometimes, or never violated.
"""

__version__ = "0.1.0"

from .errors import (
    DomainError,
    EntroplaneError,
    InvalidParamsError,
    InvalidStateError,
    MaxDepthError,
    NoConvergenceError,
    NoLevelSetError,
    NotHermitianError,
    NotPSDError,
    TraceNotOneError,
)
from .linalg import EigenDecomposition, hermitian_eigen, matrix_sqrt_psd
from .quadrature import integrate_adaptive
from .states import (
    DensityMatrix,
    ReducedDensity,
    format_density_text,
    linear_entropy,
    make_density,
    parse_density_text,
    partial_trace_a_out,
    partial_trace_b_out,
    partial_transpose,
    purity,
)
from .measures import (
    ConcurrenceSpectrum,
    EntropyValue,
    ViolationReport,
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
from .families import (
    E0Params,
    E1Params,
    RngStream,
    SAMPLER_ID,
    e0_state,
    e1_state,
    mems1,
    mems2,
    sample_e0,
    sample_e1,
    sample_full_rank,
    sample_separable,
)
from .plane import (
    AreaReport,
    EllipseSpec,
    PlanePoint,
    RegionLabel,
    XYPoint,
    chsh_region_areas,
    classify_chsh,
    classify_entropic,
    eineq_lhs,
    ellipse_axes,
    entropic_region_areas,
    frontier_mems,
    in_x_plus,
    s_l_minus,
    s_l_plus,
    to_xy,
)

__all__ = [name for name in dir() if not name.startswith("_")]
