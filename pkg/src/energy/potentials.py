import logging
from typing import Union

import numpy as np

from ..config.tolerances import ToleranceMixin
from ..core.configuration import Configuration, as_matrix
from ..core.potential import Potential, EnergyReport
from ..utils.errors import DomainError, NonSmoothPointError

logger = logging.getLogger(__name__)

DOMAIN_SLACK = ToleranceMixin.DOMAIN_SLACK
NONSMOOTH_TOL = ToleranceMixin.NONSMOOTH_TOL


def _checked_inner_products(t) -> np.ndarray:
    t = np.asarray(t, dtype=np.float64)
    if np.any(np.abs(t) > 1.0 + DOMAIN_SLACK):
        worst = float(np.max(np.abs(t)))
        raise DomainError(f"Inner product {worst:.12g} lies outside [-1, 1]")
    return np.clip(t, -1.0, 1.0)


def _argument(f: Potential, t: np.ndarray) -> np.ndarray:
    """The quantity u whose |u|^p the potential measures."""
    if f.kind == "pframe":
        return t
    if f.kind == "simplex_shift":
        return t + 1.0 / f.d
    return t * t - f.alpha * f.alpha


def _profile(f: Potential, u: np.ndarray) -> np.ndarray:
    if f.epsilon == 0.0:
        return np.abs(u) ** f.p
    return (u * u + f.epsilon ** 2) ** (f.p / 2.0) - f.epsilon ** f.p


def _profile_slope(f: Potential, u: np.ndarray) -> np.ndarray:
    """d/du of the (smoothed) profile; callers exclude the singular u = 0, p < 2 case."""
    base = u * u + f.epsilon ** 2
    safe = np.where(base > 0.0, base, 1.0)
    return np.where(base > 0.0, f.p * u * safe ** (f.p / 2.0 - 1.0), 0.0)


def eval_potential(f: Potential, t) -> Union[float, np.ndarray]:
    """
    Evaluate f at an inner product t (scalar or array).

    Raises:
        DomainError: If |t| > 1 beyond rounding slack.
    """
    scalar = np.ndim(t) == 0
    values = _profile(f, _argument(f, _checked_inner_products(t)))
    return float(values) if scalar else values


def _columns(X) -> np.ndarray:
    if isinstance(X, Configuration):
        return X.vectors
    return np.asarray(X, dtype=np.float64)


def pair_energy(V: np.ndarray, f: Potential) -> float:
    """Energy of the columns of V without building a Configuration (optimizer inner loop)."""
    G = V.T @ V
    np.fill_diagonal(G, 1.0)
    values = _profile(f, _argument(f, np.clip(G, -1.0, 1.0)))
    np.fill_diagonal(values, 0.0)
    return float(np.sum(values))


def energy(A, f: Potential) -> EnergyReport:
    """
    Discrete energy sum_{i != j} f(A_ij) over ordered pairs.

    Args:
        A: GramMatrix (or array of inner products).
        f: Pair potential.
    """
    M = as_matrix(A)
    N = M.shape[0]
    values = eval_potential(f, M)
    off_diagonal = values[~np.eye(N, dtype=bool)]
    return EnergyReport(
        value=float(np.sum(off_diagonal)),
        pair_count=N * (N - 1),
        max_term=float(np.max(off_diagonal)) if off_diagonal.size else 0.0,
        potential=f,
    )


def energy_gradient(X, f: Potential) -> np.ndarray:
    """
    Tangential gradient of the energy on the product of spheres.

    Column i is P_i sum_{j != i} 2 f'(<x_i, x_j>) x_j with P_i = I - x_i x_i^T.

    Args:
        X: Configuration or d x N array of unit columns.
        f: Pair potential; a positive epsilon selects the smoothed form.

    Returns:
        d x N array of tangential partial derivatives.

    Raises:
        NonSmoothPointError: If epsilon = 0, p < 2 and some pair sits at u = 0.
    """
    V = _columns(X)
    N = V.shape[1]
    G = np.clip(V.T @ V, -1.0, 1.0)
    u = _argument(f, G)
    off = ~np.eye(N, dtype=bool)
    if f.epsilon == 0.0 and f.p < 2.0 and np.any(np.abs(u[off]) < NONSMOOTH_TOL):
        raise NonSmoothPointError(
            f"Potential {f!r} is not differentiable at a pair with u = 0; use a positive epsilon"
        )
    slope = _profile_slope(f, u)
    if f.kind == "etf_dev":
        slope = slope * 2.0 * G
    slope[~off] = 0.0
    raw = V @ (2.0 * slope)
    radial = np.sum(V * raw, axis=0)
    return raw - V * radial


def repeated_onb_energy(d: int, N: int) -> int:
    """
    p-frame energy of the repeated orthonormal basis, for every p.

    With N = m + k*d, 0 <= m < d: m lines of multiplicity k+1 and d-m of
    multiplicity k give d(k^2 - k) + 2mk.
    """
    k, m = divmod(N, d)
    return d * (k * k - k) + 2 * m * k


def conjectured_onb_energy(d: int, N: int) -> int:
    """The closed form d(k^2 - k) + 2k; agrees with repeated_onb_energy only when m = 1."""
    k, _ = divmod(N, d)
    return d * (k * k - k) + 2 * k
