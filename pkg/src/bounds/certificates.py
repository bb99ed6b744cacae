import logging
from typing import Tuple

import numpy as np

from ..config.tolerances import ToleranceMixin
from ..core.configuration import as_matrix
from ..core.dual import GaleDual
from ..utils.errors import MismatchedDualError, BadExponentError

logger = logging.getLogger(__name__)

GALE_TOL = ToleranceMixin.GALE_TOL


def _certificate_sides(A, G: GaleDual, p: float, tol: float) -> Tuple[np.ndarray, np.ndarray]:
    M = as_matrix(A)
    N = M.shape[0]
    if p < 1.0:
        raise BadExponentError(f"Row certificate needs p >= 1, got {p}")
    if G.N != N:
        raise MismatchedDualError(f"Dual has {G.N} vectors, Gram matrix has {N}")
    kernel_residual = float(np.max(np.linalg.norm(M @ G.Y.T, axis=1)))
    if kernel_residual > tol:
        raise MismatchedDualError(f"Dual fails the kernel identity: residual {kernel_residual:.3e} > {tol:.1e}")

    off = ~np.eye(N, dtype=bool)
    lhs = np.sum(np.where(off, np.abs(M), 0.0) ** p, axis=1) ** (1.0 / p)
    c = G.frame_constant
    t = G.weights
    rhs = np.sqrt(np.clip(t, 0.0, None) / np.maximum(c - t, np.finfo(float).tiny))
    if p > 2.0:
        rhs = rhs * (N - 1) ** (1.0 / p - 0.5)
    return lhs, rhs


def per_row_certificate(A, G: GaleDual, p: float, tol: float = GALE_TOL) -> np.ndarray:
    """
    Row-wise check of the Gale-dual lower bound.

    Row i compares (sum_{j != i} |A_ij|^p)^(1/p) with (t_i / (1/(N-d) - t_i))^(1/2),
    the latter scaled by (N-1)^(1/p - 1/2) when p > 2.

    Returns:
        Residuals LHS_i - RHS_i; all are >= -1e-8 for a dual built from A.

    Raises:
        MismatchedDualError: If G does not satisfy the kernel identity for A.
    """
    lhs, rhs = _certificate_sides(A, G, p, tol)
    return lhs - rhs


def lemma2_certified_bound(A, G: GaleDual, p: float, tol: float = GALE_TOL) -> float:
    """sum_i RHS_i^p: a lower bound on E_p(A) specific to this Gram matrix."""
    _, rhs = _certificate_sides(A, G, p, tol)
    return float(np.sum(rhs ** p))
