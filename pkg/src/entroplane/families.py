"""X-shaped two-qubit state families and the random ensembles built on them.

Two parametric families are provided.  The single-coherence family (tag
``e0``) has diagonal ``(0, a, b, 1-a-b)`` and one coherence ``(c/2) e^{i
theta}`` between ``|01>`` and ``|10>``; its concurrence equals the parameter
``c`` and its linear entropy has a simple closed form.  The two-coherence
family (tag ``e1``) adds weight ``f`` on ``|00>`` and a second coherence
``(d/2) e^{i phi}`` between ``|00>`` and ``|11>``, and contains the first
family as the ``f = d = 0`` slice.  The maximally entangled mixed states
(MEMS) sit on the boundary of the physical region of the concurrence /
linear-entropy plane and come in two branches that meet at concurrence 2/3.

Random sampling is deterministic per ``(seed, stream_index)`` using the
counter-based Philox generator (sampler id ``philox4x64:batch-v1``); the
draw pattern of every sampler is documented in its batch function, and the
scalar samplers consume the underlying stream exactly like a batch of one.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidParamsError
from .states import DensityMatrix, make_density

TWO_PI = 2.0 * math.pi
# Slack for positivity conditions assembled from double-precision parameters.
PARAM_TOL = 1e-12

SAMPLER_ID = "philox4x64:batch-v1"


def _norm_angle(t: float) -> float:
    t = float(t)
    if not math.isfinite(t):
        raise InvalidParamsError(f"phase must be finite, got {t}")
    return t % TWO_PI


@dataclass(frozen=True)
class E0Params:
    """Parameters of the single-coherence family.

    Requires ``a, b >= 0``, ``a + b <= 1``, ``c in [0, 1]`` and the block
    positivity ``a*b >= c^2/4``; the phase is normalized into ``[0, 2*pi)``.
    """

    a: float
    b: float
    c: float
    theta: float = 0.0

    def __post_init__(self):
        a, b, c = float(self.a), float(self.b), float(self.c)
        if not all(map(math.isfinite, (a, b, c))):
            raise InvalidParamsError("parameters must be finite")
        if a < -PARAM_TOL or b < -PARAM_TOL:
            raise InvalidParamsError(f"weights must be non-negative: a={a}, b={b}")
        if a + b > 1.0 + PARAM_TOL:
            raise InvalidParamsError(f"weights exceed unit trace: a + b = {a + b}")
        if c < -PARAM_TOL or c > 1.0 + PARAM_TOL:
            raise InvalidParamsError(f"coherence c must lie in [0, 1], got {c}")
        if a * b + PARAM_TOL < c * c / 4.0:
            raise InvalidParamsError(f"positivity requires a*b >= c^2/4: {a * b} < {c * c / 4.0}")
        object.__setattr__(self, "a", max(a, 0.0))
        object.__setattr__(self, "b", max(b, 0.0))
        object.__setattr__(self, "c", min(max(c, 0.0), 1.0))
        object.__setattr__(self, "theta", _norm_angle(self.theta))


@dataclass(frozen=True)
class E1Params:
    """Parameters of the two-coherence family.

    Requires non-negative weights with ``a + b + f <= 1`` and the two block
    positivity conditions ``a*b >= c^2/4`` and ``f*(1-a-b-f) >= d^2/4``,
    which together are equivalent to positive semidefiniteness.
    """

    a: float
    b: float
    f: float
    c: float
    d: float
    theta: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        a, b, f, c, d = (float(v) for v in (self.a, self.b, self.f, self.c, self.d))
        if not all(map(math.isfinite, (a, b, f, c, d))):
            raise InvalidParamsError("parameters must be finite")
        if min(a, b, f) < -PARAM_TOL:
            raise InvalidParamsError(f"weights must be non-negative: a={a}, b={b}, f={f}")
        g = 1.0 - a - b - f
        if g < -PARAM_TOL:
            raise InvalidParamsError(f"weights exceed unit trace: a + b + f = {a + b + f}")
        for name, v in (("c", c), ("d", d)):
            if v < -PARAM_TOL or v > 1.0 + PARAM_TOL:
                raise InvalidParamsError(f"coherence {name} must lie in [0, 1], got {v}")
        if a * b + PARAM_TOL < c * c / 4.0:
            raise InvalidParamsError(f"positivity requires a*b >= c^2/4: {a * b} < {c * c / 4.0}")
        if f * g + PARAM_TOL < d * d / 4.0:
            raise InvalidParamsError(f"positivity requires f*(1-a-b-f) >= d^2/4: {f * g} < {d * d / 4.0}")
        object.__setattr__(self, "a", max(a, 0.0))
        object.__setattr__(self, "b", max(b, 0.0))
        object.__setattr__(self, "f", max(f, 0.0))
        object.__setattr__(self, "c", min(max(c, 0.0), 1.0))
        object.__setattr__(self, "d", min(max(d, 0.0), 1.0))
        object.__setattr__(self, "theta", _norm_angle(self.theta))
        object.__setattr__(self, "phi", _norm_angle(self.phi))

    @property
    def g(self) -> float:
        """Weight on |11>, fixed by unit trace."""
        return 1.0 - self.a - self.b - self.f


def e0_state(p: E0Params) -> DensityMatrix:
    """Density matrix of the single-coherence family member ``p``."""
    m = np.zeros((4, 4), dtype=complex)
    m[1, 1] = p.a
    m[2, 2] = p.b
    m[3, 3] = 1.0 - p.a - p.b
    m[1, 2] = 0.5 * p.c * np.exp(1j * p.theta)
    m[2, 1] = np.conj(m[1, 2])
    return make_density(m)


def e1_state(p: E1Params) -> DensityMatrix:
    """Density matrix of the two-coherence family member ``p``."""
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = p.f
    m[1, 1] = p.a
    m[2, 2] = p.b
    m[3, 3] = p.g
    m[1, 2] = 0.5 * p.c * np.exp(1j * p.theta)
    m[2, 1] = np.conj(m[1, 2])
    m[0, 3] = 0.5 * p.d * np.exp(1j * p.phi)
    m[3, 0] = np.conj(m[0, 3])
    return make_density(m)


def mems1(c: float, theta: float = 0.0) -> DensityMatrix:
    """First MEMS branch (``a = b = c/2``), defined for c in [2/3, 1].

    Its linear entropy is ``(8/3) c (1 - c)``.
    """
    c = float(c)
    if not (2.0 / 3.0 - PARAM_TOL <= c <= 1.0 + PARAM_TOL):
        raise DomainError(f"first MEMS branch needs c in [2/3, 1], got {c}")
    c = min(max(c, 2.0 / 3.0), 1.0)
    return e0_state(E0Params(c / 2.0, c / 2.0, c, theta))


def mems2(c: float, theta: float = 0.0) -> DensityMatrix:
    """Second MEMS branch (``a = b = 1/3``), defined for c in (0, 2/3].

    Its linear entropy is ``8/9 - (2/3) c^2``.
    """
    c = float(c)
    if not (0.0 < c <= 2.0 / 3.0 + PARAM_TOL):
        raise DomainError(f"second MEMS branch needs c in (0, 2/3], got {c}")
    c = min(c, 2.0 / 3.0)
    return e0_state(E0Params(1.0 / 3.0, 1.0 / 3.0, c, theta))


class RngStream:
    """Deterministic random stream keyed by ``(seed, stream_index)``.

    Streams with distinct indices are statistically independent, so parallel
    workers can each own one.  Rebuilding a stream with the same key replays
    the identical sequence.
    """

    def __init__(self, seed: int, stream_index: int = 0):
        seed = int(seed)
        stream_index = int(stream_index)
        if not 0 <= seed < 2**64:
            raise ValueError("seed must fit in 64 bits")
        if not 0 <= stream_index < 2**64:
            raise ValueError("stream_index must fit in 64 bits")
        self.seed = seed
        self.stream_index = stream_index
        self._gen = np.random.Generator(np.random.Philox(key=np.array([seed, stream_index], dtype=np.uint64)))

    @property
    def generator(self) -> np.random.Generator:
        return self._gen

    def __repr__(self):
        return f"RngStream(seed={self.seed}, stream_index={self.stream_index})"


def _gen_of(rng) -> np.random.Generator:
    if isinstance(rng, RngStream):
        return rng.generator
    if isinstance(rng, np.random.Generator):
        return rng
    raise TypeError(f"expected RngStream or numpy Generator, got {type(rng).__name__}")


# --- batch parameter draws -------------------------------------------------
#
# Each batch function documents its exact consumption of the underlying
# stream; the scalar samplers below call them with n = 1.


def sample_e0_params(rng, n: int):
    """Draw ``n`` parameter tuples (a, b, c, theta) as arrays.

    Consumption: one (n, 4) uniform block, row per sample.  (a, b) is uniform
    on the triangle a + b <= 1 (reflection trick), c uniform on
    [0, min(1, 2 sqrt(a b))], theta uniform on [0, 2 pi).
    """
    g = _gen_of(rng)
    u = g.random((int(n), 4))
    a, b = u[:, 0].copy(), u[:, 1].copy()
    flip = a + b > 1.0
    a[flip] = 1.0 - a[flip]
    b[flip] = 1.0 - b[flip]
    c = u[:, 2] * np.minimum(1.0, 2.0 * np.sqrt(a * b))
    theta = u[:, 3] * TWO_PI
    return a, b, c, theta


def sample_e1_params(rng, n: int):
    """Draw ``n`` parameter tuples (a, b, f, c, d, theta, phi) as arrays.

    Consumption: one (n, 4) standard-exponential block (weights, normalized
    to the unit 3-simplex as (a, b, f, g)), then one (n, 4) uniform block for
    (c, d, theta, phi) with c <= min(1, 2 sqrt(a b)) and
    d <= min(1, 2 sqrt(f g)).
    """
    g = _gen_of(rng)
    e = g.standard_exponential((int(n), 4))
    e /= e.sum(axis=1, keepdims=True)
    a, b, f, gg = e[:, 0].copy(), e[:, 1].copy(), e[:, 2].copy(), e[:, 3].copy()
    u = g.random((int(n), 4))
    c = u[:, 0] * np.minimum(1.0, 2.0 * np.sqrt(a * b))
    d = u[:, 1] * np.minimum(1.0, 2.0 * np.sqrt(f * gg))
    theta = u[:, 2] * TWO_PI
    phi = u[:, 3] * TWO_PI
    return a, b, f, c, d, theta, phi


def sample_separable_mats(rng, n: int, kmax: int = 8) -> np.ndarray:
    """Draw ``n`` random separable states as an (n, 4, 4) stack.

    Each state is a convex mixture of ``k <= kmax`` product pure states with
    uniform simplex weights.  Consumption per call: (n,) integers for k,
    (n, kmax) exponentials for weights, then two (n, kmax, 2, 2) normal
    blocks (real, imaginary) for the product-state amplitudes; draws beyond
    k are discarded so consumption does not depend on k.
    """
    g = _gen_of(rng)
    n = int(n)
    k = g.integers(1, kmax + 1, size=n)
    w = g.standard_exponential((n, kmax))
    w *= np.arange(kmax)[None, :] < k[:, None]
    w /= w.sum(axis=1, keepdims=True)
    amp = g.standard_normal((n, kmax, 2, 2)) + 1j * g.standard_normal((n, kmax, 2, 2))
    amp /= np.linalg.norm(amp, axis=3, keepdims=True)
    prod = np.einsum("nki,nkj->nkij", amp[:, :, 0], amp[:, :, 1]).reshape(n, kmax, 4)
    return np.einsum("nk,nki,nkj->nij", w, prod, prod.conj())


def sample_full_rank_mats(rng, n: int) -> np.ndarray:
    """Draw ``n`` Ginibre-normalized states ``G G^dagger / Tr`` as an (n, 4, 4) stack.

    Consumption: two (n, 4, 4) standard-normal blocks (real, imaginary).
    """
    g = _gen_of(rng)
    gm = g.standard_normal((int(n), 4, 4)) + 1j * g.standard_normal((int(n), 4, 4))
    rho = gm @ np.conj(np.swapaxes(gm, 1, 2))
    tr = np.trace(rho, axis1=1, axis2=2).real
    return rho / tr[:, None, None]


# --- scalar samplers ---------------------------------------------------------


def sample_e0(rng) -> E0Params:
    """Draw one valid parameter tuple of the single-coherence family."""
    a, b, c, theta = sample_e0_params(rng, 1)
    return E0Params(a[0], b[0], c[0], theta[0])


def sample_e1(rng) -> E1Params:
    """Draw one valid parameter tuple of the two-coherence family."""
    a, b, f, c, d, theta, phi = sample_e1_params(rng, 1)
    return E1Params(a[0], b[0], f[0], c[0], d[0], theta[0], phi[0])


def sample_separable(rng) -> DensityMatrix:
    """Draw one random separable state (mixture of <= 8 product pure states)."""
    return make_density(sample_separable_mats(rng, 1)[0])


def sample_full_rank(rng) -> DensityMatrix:
    """Draw one full-rank random state from the normalized Ginibre ensemble."""
    return make_density(sample_full_rank_mats(rng, 1)[0])
