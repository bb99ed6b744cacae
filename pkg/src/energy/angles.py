import math

import numpy as np

from ..core.configuration import Configuration
from ..frames.properties import gram


def angle_sum(X: Configuration) -> float:
    """sum over all ordered pairs (i, j) of arccos|<x_i, x_j>|; the diagonal adds 0."""
    magnitudes = np.clip(np.abs(gram(X).entries), 0.0, 1.0)
    return float(np.sum(np.arccos(magnitudes)))


def fejes_toth_bound(N: int) -> float:
    """Largest planar angle sum: pi N^2 / 4 for even N, pi (N^2 - 1) / 4 for odd N."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    if N % 2 == 0:
        return math.pi * N * N / 4.0
    return math.pi * (N * N - 1) / 4.0
