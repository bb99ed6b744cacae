import math
import logging
from typing import Tuple

import numpy as np

from ..config.tolerances import ToleranceMixin
from .errors import (
    NotSymmetricError,
    NoConvergenceError,
    EmptyKernelError,
    NotPositiveDefiniteError,
)

logger = logging.getLogger(__name__)

RANK_TOL = ToleranceMixin.RANK_TOL
MAX_SWEEPS = ToleranceMixin.JACOBI_SWEEPS


def _as_square(S) -> np.ndarray:
    S = np.array(S, dtype=np.float64)
    if S.ndim != 2 or S.shape[0] != S.shape[1]:
        raise ValueError(f"Expected a square matrix, got shape {S.shape}")
    if not np.all(np.isfinite(S)):
        raise ValueError("Matrix has non-finite entries")
    return S


def _rotate(S: np.ndarray, V: np.ndarray, p: int, q: int) -> None:
    """Jacobi rotation in the (p, q) plane that zeroes S[p, q], in place."""
    app, aqq, apq = S[p, p], S[q, q], S[p, q]
    theta = (aqq - app) / (2.0 * apq)
    if theta == 0.0:
        t = 1.0
    else:
        t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    # S <- J^T S J
    col_p, col_q = S[:, p].copy(), S[:, q].copy()
    S[:, p] = c * col_p - s * col_q
    S[:, q] = s * col_p + c * col_q
    row_p, row_q = S[p, :].copy(), S[q, :].copy()
    S[p, :] = c * row_p - s * row_q
    S[q, :] = s * row_p + c * row_q
    S[p, q] = S[q, p] = 0.0

    # V <- V J
    vec_p, vec_q = V[:, p].copy(), V[:, q].copy()
    V[:, p] = c * vec_p - s * vec_q
    V[:, q] = s * vec_p + c * vec_q


def _fix_signs(V: np.ndarray) -> np.ndarray:
    """Make the first entry of largest magnitude of every column nonnegative."""
    for k in range(V.shape[1]):
        col = V[:, k]
        magnitude = np.abs(col)
        lead = int(np.argmax(magnitude >= magnitude.max() - 1e-12))
        if col[lead] < 0:
            V[:, k] = -col
    return V


def sym_eigen(S, tol: float = ToleranceMixin.SYMMETRY_TOL) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Args:
        S: Square symmetric matrix.
        tol: Allowed asymmetry, relative to max(1, max|S|).

    Returns:
        (eigenvalues, eigenvectors) with eigenvalues in descending order and the
        eigenvectors as orthonormal columns.

    Raises:
        NotSymmetricError: If S deviates from symmetry by more than tol.
        NoConvergenceError: If the sweep budget is exhausted.
    """
    S = _as_square(S)
    n = S.shape[0]
    scale = max(1.0, float(np.max(np.abs(S)))) if n else 1.0
    asymmetry = float(np.max(np.abs(S - S.T))) if n else 0.0
    if asymmetry > tol * scale:
        raise NotSymmetricError(f"Matrix asymmetry {asymmetry:.3e} exceeds tolerance {tol:.1e}")

    A = 0.5 * (S + S.T)
    V = np.eye(n)
    floor = 1e-18 * float(np.linalg.norm(A))

    for sweep in range(MAX_SWEEPS):
        rotations = 0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = abs(A[p, q])
                if apq == 0.0:
                    continue
                # Negligible against both diagonal entries: drop it
                g = 100.0 * apq
                if apq <= floor or (abs(A[p, p]) + g == abs(A[p, p]) and abs(A[q, q]) + g == abs(A[q, q])):
                    A[p, q] = A[q, p] = 0.0
                    continue
                _rotate(A, V, p, q)
                rotations += 1
        if rotations == 0:
            break
    else:
        raise NoConvergenceError(f"Jacobi iteration did not converge in {MAX_SWEEPS} sweeps")

    eigenvalues = np.diag(A).copy()
    order = np.argsort(-eigenvalues, kind="stable")
    return eigenvalues[order], _fix_signs(V[:, order])


def numerical_rank(S, rank_tol: float = RANK_TOL) -> int:
    """Count eigenvalues with |lambda| > rank_tol * max|lambda|."""
    eigenvalues, _ = sym_eigen(S)
    if eigenvalues.size == 0:
        return 0
    lam_max = float(np.max(np.abs(eigenvalues)))
    if lam_max == 0.0:
        return 0
    return int(np.sum(np.abs(eigenvalues) > rank_tol * lam_max))


def kernel_basis(A, rank_tol: float = RANK_TOL) -> np.ndarray:
    """
    Orthonormal basis of the numerical kernel of a symmetric matrix.

    Returns:
        N x (N - r) matrix whose columns span Ker A, r being the numerical rank.

    Raises:
        EmptyKernelError: If A has full numerical rank.
    """
    eigenvalues, eigenvectors = sym_eigen(A)
    lam_max = float(np.max(np.abs(eigenvalues))) if eigenvalues.size else 0.0
    small = np.abs(eigenvalues) <= rank_tol * lam_max
    if not np.any(small):
        raise EmptyKernelError(f"Matrix of size {A.shape[0]} has full numerical rank")
    return eigenvectors[:, small]


def inv_sqrt_psd(S, tol: float = 1e-12) -> np.ndarray:
    """
    Symmetric inverse square root R of a positive-definite S, so R S R = I.

    Raises:
        NotPositiveDefiniteError: If some eigenvalue is <= tol.
    """
    eigenvalues, eigenvectors = sym_eigen(S)
    if eigenvalues.size and eigenvalues[-1] <= tol:
        raise NotPositiveDefiniteError(f"Smallest eigenvalue {eigenvalues[-1]:.3e} is not above {tol:.1e}")
    R = (eigenvectors / np.sqrt(eigenvalues)) @ eigenvectors.T
    return 0.5 * (R + R.T)
