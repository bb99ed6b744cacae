import logging

import numpy as np

from ..config.tolerances import ToleranceMixin
from ..core.configuration import GramMatrix, as_matrix
from ..core.dual import GaleDual, GaleReport
from ..utils.linalg import kernel_basis, inv_sqrt_psd, numerical_rank
from ..utils.errors import (
    RankMismatchError,
    DegenerateError,
    EmptyKernelError,
    DimensionMismatchError,
)

logger = logging.getLogger(__name__)

GALE_TOL = ToleranceMixin.GALE_TOL


def gale_from_kernel(K: np.ndarray) -> GaleDual:
    """
    Tight frame whose kernel map is spanned by the columns of K.

    Args:
        K: N x r matrix of linearly independent kernel vectors, r = N - d.
           Orthonormality is not required; the columns are whitened first.

    Returns:
        GaleDual with Y^T = K (K^T K)^(-1/2) / sqrt(r).
    """
    K = np.asarray(K, dtype=np.float64)
    r = K.shape[1]
    whitened = K @ inv_sqrt_psd(K.T @ K)
    Y = whitened.T / np.sqrt(r)
    weights = np.sum(Y * Y, axis=0)
    return GaleDual(Y=Y, weights=weights, frame_constant=1.0 / r)


def gale_dual(A, d: int, tol: float = GALE_TOL) -> GaleDual:
    """
    Gale dual (Naimark complement) of a rank-d unit-diagonal Gram matrix.

    Every vector (<y, y_1>, ..., <y, y_N>) lies in Ker A, the y_i form a tight
    frame in R^(N-d) with frame constant 1/(N-d) and sum_i <y_i, y_i> = 1.

    Raises:
        RankMismatchError: If the numerical rank of A is not d.
        DegenerateError: If N = d, leaving an empty dual.
    """
    M = as_matrix(A)
    N = M.shape[0]
    if N == d:
        rank = numerical_rank(M)
        if rank != d:
            raise RankMismatchError(f"Gram matrix has numerical rank {rank}, expected {d}")
        raise DegenerateError(f"N = d = {d}: the Gale dual is empty")
    try:
        K = kernel_basis(M)
    except EmptyKernelError:
        raise RankMismatchError(f"Gram matrix has full rank {N}, expected {d}") from None
    if K.shape[1] != N - d:
        raise RankMismatchError(f"Gram matrix has numerical rank {N - K.shape[1]}, expected {d}")

    G = gale_from_kernel(K)
    report = verify_gale(M, G, tol)
    if not report.passed:
        logger.warning(f"Gale dual residuals above tolerance {tol:.1e}: {report.to_dict()}")
    return G


def verify_gale(A, G: GaleDual, tol: float = GALE_TOL) -> GaleReport:
    """
    Residuals of the Gale-dual contracts.

    (a) max_i of the row norms of A Y^T (kernel identity);
    (b) ||Y Y^T - I/(N-d)||_F (tightness);
    (c) |sum_i t_i - 1| (normalization).
    """
    M = as_matrix(A)
    if M.shape[0] != G.N:
        raise DimensionMismatchError(f"Gram matrix is {M.shape[0]} x {M.shape[0]} but the dual has {G.N} vectors")
    kernel = M @ G.Y.T
    kernel_residual = float(np.max(np.linalg.norm(kernel, axis=1)))
    tight = G.Y @ G.Y.T - np.eye(G.codim) / G.codim
    tightness_residual = float(np.linalg.norm(tight))
    normalization_residual = abs(float(np.sum(G.weights)) - 1.0)
    return GaleReport(kernel_residual, tightness_residual, normalization_residual, tol)
