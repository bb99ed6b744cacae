import logging
from typing import List, Tuple

import numpy as np

from ..config.tolerances import ToleranceMixin
from ..core.configuration import Configuration, GramMatrix
from ..utils.errors import InvalidConfigurationError

logger = logging.getLogger(__name__)

FRAME_TOL = ToleranceMixin.FRAME_TOL


def gram(X: Configuration) -> GramMatrix:
    """Inner products <x_i, x_j>, with the diagonal pinned to 1."""
    G = X.vectors.T @ X.vectors
    G = 0.5 * (G + G.T)
    np.fill_diagonal(G, 1.0)
    return GramMatrix(G)


def _require_pairs(X: Configuration, what: str) -> None:
    if X.N < 2:
        raise InvalidConfigurationError(f"{what} needs at least 2 vectors, got N={X.N}")


def coherence(X: Configuration) -> float:
    """max over i != j of |<x_i, x_j>|."""
    _require_pairs(X, "coherence")
    return float(np.max(np.abs(gram(X).off_diagonal())))


def is_tight_frame(X: Configuration, tol: float = FRAME_TOL) -> Tuple[bool, float]:
    """
    Check whether the frame operator sum x_i x_i^T equals c * I.

    Returns:
        (is_tight, c) with c = (sum ||x_i||^2) / d.
    """
    frame_operator = X.vectors @ X.vectors.T
    c = float(np.trace(frame_operator)) / X.d
    deviation = float(np.max(np.abs(frame_operator - c * np.eye(X.d))))
    return deviation <= tol, c


def is_etf(X: Configuration, tol: float = FRAME_TOL) -> bool:
    _require_pairs(X, "is_etf")
    tight, _ = is_tight_frame(X, tol)
    if not tight:
        return False
    magnitudes = np.abs(gram(X).off_diagonal())
    return bool(magnitudes.max() - magnitudes.min() <= tol)


def canonicalize(X: Configuration) -> Configuration:
    """
    Projective normal form of a configuration.

    Every vector is flipped so its first entry of magnitude above SIGN_ZERO_TOL
    is positive, then vectors are sorted in descending lexicographic order.
    """
    rows = X.rows()
    for row in rows:
        significant = np.flatnonzero(np.abs(row) > X.SIGN_ZERO_TOL)
        if significant.size and row[significant[0]] < 0:
            row *= -1.0
    rows = rows + 0.0  # -0.0 -> 0.0
    order = np.lexsort(-rows.T[::-1])
    return Configuration(rows[order].T, label=X.label)


def line_multiplicities(X: Configuration, tol: float = 1e-5) -> List[List[int]]:
    """
    Group vectors that span the same line.

    Returns:
        Index groups in order of first appearance; vectors i and j share a
        group when |<x_i, x_j>| >= 1 - tol.
    """
    G = np.abs(gram(X).entries)
    groups: List[List[int]] = []
    for i in range(X.N):
        for group in groups:
            if G[i, group[0]] >= 1.0 - tol:
                group.append(i)
                break
        else:
            groups.append([i])
    return groups


def is_repeated_onb(X: Configuration, tol: float = 1e-5) -> bool:
    """
    True when X is a repeated orthonormal basis up to rotation and signs.

    The distinct lines must be pairwise orthogonal, min(N, d) in number, and
    their multiplicities may differ by at most one.
    """
    groups = line_multiplicities(X, tol)
    if len(groups) != min(X.N, X.d):
        return False
    leaders = [group[0] for group in groups]
    G = np.abs(gram(X).entries)[np.ix_(leaders, leaders)]
    if np.max(np.abs(G - np.eye(len(leaders)))) > tol:
        return False
    sizes = [len(group) for group in groups]
    return max(sizes) - min(sizes) <= 1
