import logging
from typing import List

import numpy as np

from ..core.configuration import Configuration
from ..utils.linalg import kernel_basis
from ..utils.errors import UnknownEtfError, InvalidConfigurationError

logger = logging.getLogger(__name__)

GOLDEN_RATIO = (1.0 + np.sqrt(5.0)) / 2.0


def _check_positive(**counts):
    for name, value in counts.items():
        if int(value) != value or value < 1:
            raise InvalidConfigurationError(f"{name} must be a positive integer, got {value}")


def repeated_onb(d: int, N: int) -> Configuration:
    """
    Cycle through e_1, ..., e_d until N vectors are placed.

    Writing N = m + k*d with 0 <= m < d, the first m directions appear k+1
    times and the remaining d-m appear k times.
    """
    _check_positive(d=d, N=N)
    vectors = np.zeros((d, N))
    vectors[np.arange(N) % d, np.arange(N)] = 1.0
    return Configuration(vectors, label=f"onb:{d}x{N}")


def simplex(d: int) -> Configuration:
    """
    Regular simplex: d+1 unit vectors in R^d with pairwise inner product -1/d.

    The standard basis of R^(d+1) is projected onto the sum-zero hyperplane,
    expressed in an orthonormal basis of that hyperplane and renormalized.
    """
    _check_positive(d=d)
    basis = kernel_basis(np.ones((d + 1, d + 1)))  # (d+1) x d
    rows = basis / np.linalg.norm(basis, axis=1, keepdims=True)
    return Configuration(rows.T, label=f"simplex:{d}")


def _icosahedral_lines() -> np.ndarray:
    phi = GOLDEN_RATIO
    rows = np.array([
        [0.0, 1.0, phi], [0.0, 1.0, -phi],
        [1.0, phi, 0.0], [1.0, -phi, 0.0],
        [phi, 0.0, 1.0], [-phi, 0.0, 1.0],
    ])
    return rows / np.sqrt(1.0 + phi * phi)


def _pair_lines() -> np.ndarray:
    """28 lines in the sum-zero hyperplane of R^8, one per pair {a, b} of coordinates."""
    rows = []
    for a in range(8):
        for b in range(a + 1, 8):
            v = -np.ones(8)
            v[a] = v[b] = 3.0
            rows.append(v)
    basis = kernel_basis(np.ones((8, 8)))  # 8 x 7
    coords = np.array(rows) @ basis
    return coords / np.linalg.norm(coords, axis=1, keepdims=True)


def etf(d: int, N: int) -> Configuration:
    """
    Equiangular tight frame from the built-in catalog.

    Args:
        d: Ambient dimension.
        N: Number of vectors.

    Returns:
        (d, d) orthonormal basis, (d, d+1) regular simplex, (3, 6) icosahedral
        diagonals or the (7, 28) pair construction.

    Raises:
        UnknownEtfError: For any other (d, N).
    """
    _check_positive(d=d, N=N)
    if N == d:
        X = repeated_onb(d, N)
    elif N == d + 1:
        X = simplex(d)
    elif (d, N) == (3, 6):
        X = Configuration(_icosahedral_lines().T)
    elif (d, N) == (7, 28):
        X = Configuration(_pair_lines().T)
    else:
        raise UnknownEtfError(f"No catalog ETF with d={d}, N={N}")
    return Configuration(X.vectors, label=f"etf:{d},{N}")


def repeat_config(base: Configuration, N: int) -> Configuration:
    """Vector j is base vector j mod base.N."""
    _check_positive(N=N)
    columns = base.vectors[:, np.arange(N) % base.N]
    return Configuration(columns, label=f"repeat:({base.label})x{N}")


def hybrid_simplex(d: int, k: int) -> Configuration:
    """
    k-simplex in span(e_1, ..., e_k) padded with e_(k+1), ..., e_d.

    Gives d+1 vectors; k = d is the full simplex and k = 1 the repeated
    orthonormal basis up to a sign.
    """
    _check_positive(d=d, k=k)
    if k > d:
        raise InvalidConfigurationError(f"Simplex dimension k={k} exceeds d={d}")
    vectors = np.zeros((d, d + 1))
    vectors[:k, :k + 1] = simplex(k).vectors
    for offset, axis in enumerate(range(k, d)):
        vectors[axis, k + 1 + offset] = 1.0
    return Configuration(vectors, label=f"hybrid:{d},{k}")


def catalog() -> List[tuple]:
    """(d, N) pairs of the maximal real ETFs that are built in."""
    return [(2, 3), (3, 6), (7, 28)]
