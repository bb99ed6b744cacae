import numpy as np
import pytest

from src.core.configuration import Configuration


def random_configuration(rng, d, N):
    V = rng.standard_normal((d, N))
    return Configuration(V / np.linalg.norm(V, axis=0))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
