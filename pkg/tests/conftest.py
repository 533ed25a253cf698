import numpy as np
import pytest


def rel_err(a, b):
    """Frobenius distance relative to max(1, |a|, |b|)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return float(np.linalg.norm(a - b)) / max(
        1.0, float(np.linalg.norm(a)), float(np.linalg.norm(b)))


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
