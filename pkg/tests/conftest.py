import numpy as np
import pytest

from specsample import SpectralModel, StateVector, new_model


@pytest.fixture
def m2() -> SpectralModel:
    """Symmetric two-level reference model."""
    return new_model([0.0, 2.0], [0.5, 0.5])


def random_model(rng: np.random.Generator, n: int, spread: float = 10.0,
                 normalized: bool = True) -> SpectralModel:
    """Random model with gaps bounded away from zero and moderate weights."""
    gaps = 0.2 + rng.random(n - 1)
    lam = np.concatenate([[0.0], np.cumsum(gaps)])
    lam = lam / lam[-1] * spread + rng.uniform(-1, 1)
    w = 0.2 + rng.random(n)
    if normalized:
        w = w / w.sum()
    return new_model(lam, w)


def random_state(rng: np.random.Generator, n: int) -> StateVector:
    return StateVector(rng.normal(size=n) + 1j * rng.normal(size=n))
