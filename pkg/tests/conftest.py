import numpy as np
import pytest

from cfckit.matrix_core import fro_norm


def rel_err(x, y):
    """Frobenius distance relative to max(1, scales)."""
    x = np.asarray(x)
    y = np.asarray(y)
    return fro_norm(x - y) / max(1.0, fro_norm(x), fro_norm(y))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
