import numpy as np
import pytest

from entroplane.families import RngStream


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)


def stream(seed=99, index=0):
    return RngStream(seed, index)


BELL = np.zeros((4, 4), dtype=complex)
BELL[0, 0] = BELL[0, 3] = BELL[3, 0] = BELL[3, 3] = 0.5

MAX_MIXED = np.eye(4, dtype=complex) / 4.0


def random_hermitian(rng, dim=4):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return g + g.conj().T


def random_psd(rng, dim=4):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return g @ g.conj().T
