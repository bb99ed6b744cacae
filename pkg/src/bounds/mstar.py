import math
import logging
from typing import Tuple, Optional

import numpy as np
from scipy.optimize import minimize_scalar

from ..config.tolerances import ToleranceMixin
from ..core.auxiliary import MStarSolution, MStarFamily
from ..utils.errors import InfeasibleCError, TooLargeError, DomainError, BadExponentError
from ..utils.seeding import generator

logger = logging.getLogger(__name__)

GRID = ToleranceMixin.MSTAR_GRID
XATOL = ToleranceMixin.MSTAR_XATOL
TIE_TOL = ToleranceMixin.MSTAR_TIE_TOL
ORACLE_MAX_N = ToleranceMixin.ORACLE_MAX_N

ORACLE_STARTS = 200
ORACLE_ITERS = 400
ORACLE_GRID = 4000
ORACLE_SEED = 20240101


def f_cp(c: float, p: float, t):
    """
    f_{c,p}(t) = (t / (c - t))^(p/2) on 0 <= t < c.

    Raises:
        DomainError: If some t lies outside [0, c).
    """
    t_arr = np.asarray(t, dtype=np.float64)
    if np.any(t_arr < 0.0) or np.any(t_arr >= c):
        raise DomainError(f"f_(c,p) needs 0 <= t < c = {c:.12g}")
    values = _f(c, p, t_arr)
    return float(values) if np.ndim(t) == 0 else values


def _f(c: float, p: float, t):
    return (t / (c - t)) ** (p / 2.0)


def inflection_point(c: float, p: float) -> float:
    """alpha = c(2 - p)/4: f_{c,p} is concave on [0, alpha] and convex on [alpha, c)."""
    return c * (2.0 - p) / 4.0


def _check_inputs(c: float, p: float, N: int) -> None:
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    if not p > 0:
        raise BadExponentError(f"Exponent p must be positive, got {p}")
    if c * N <= 1.0:
        raise InfeasibleCError(f"c = {c:.12g} <= 1/N = {1.0 / N:.12g}: sum t_i = 1 is unreachable with t_i < c")


def _bounded_refine(objective, grid: np.ndarray, values: np.ndarray) -> Tuple[float, float]:
    """Refine the best grid point inside its neighbouring cells."""
    j = int(np.argmin(values))
    best_x, best_value = float(grid[j]), float(values[j])
    lo, hi = float(grid[max(j - 1, 0)]), float(grid[min(j + 1, grid.size - 1)])
    if hi > lo:
        res = minimize_scalar(objective, bounds=(lo, hi), method="bounded", options={"xatol": XATOL})
        if res.success and res.fun < best_value:
            best_x, best_value = float(res.x), float(res.fun)
    return best_x, best_value


def _equal_split(c: float, p: float, N: int, k: int) -> Tuple[float, np.ndarray]:
    weights = np.zeros(N)
    weights[:k] = 1.0 / k
    return k * (1.0 / (k * c - 1.0)) ** (p / 2.0), weights


def _split_with_remainder(c: float, p: float, N: int, k: int) -> Optional[Tuple[float, float, np.ndarray]]:
    """Minimize k f(x) + f(1 - kx) over x >= alpha, 0 < 1 - kx < alpha, x < c."""
    alpha = inflection_point(c, p)
    lo = max(alpha, (1.0 - alpha) / k)
    hi = min(1.0 / k, c * (1.0 - 1e-12))
    if not hi > lo:
        return None

    def objective(x):
        return k * _f(c, p, x) + _f(c, p, np.maximum(1.0 - k * x, 0.0))

    grid = np.linspace(lo, hi, GRID)
    x, value = _bounded_refine(objective, grid, objective(grid))
    weights = np.zeros(N)
    weights[:k] = x
    weights[k] = 1.0 - k * x
    return value, x, weights


def mstar(c: float, p: float, N: int) -> MStarSolution:
    """
    Solve M(c, p, N) = min sum_i f_{c,p}(t_i) over sum t_i = 1, 0 <= t_i < c.

    Candidates are the equal splits t_1 = ... = t_k = 1/k and, for p <= 2, the
    splits t_1 = ... = t_k = x, t_(k+1) = 1 - kx. They are visited with k
    ascending and the equal split first; a later candidate wins only when it
    is lower by more than MSTAR_TIE_TOL. For p < 1 the structural reduction
    is not guaranteed, so the exhaustive oracle is consulted (N <= 8) and the
    result is flagged.

    Raises:
        InfeasibleCError: If c <= 1/N.
    """
    _check_inputs(c, p, N)
    best: Optional[Tuple[float, np.ndarray, MStarFamily]] = None

    def consider(value, weights, family):
        nonlocal best
        if best is None or value < best[0] - TIE_TOL:
            best = (value, weights, family)

    for k in range(1, N + 1):
        if k * c > 1.0:
            value, weights = _equal_split(c, p, N, k)
            consider(value, weights, MStarFamily("equal_split", k))
        if p <= 2.0 and k + 1 <= N:
            found = _split_with_remainder(c, p, N, k)
            if found is not None:
                value, x, weights = found
                consider(value, weights, MStarFamily("split_with_remainder", k, x))

    value, weights, family = best
    solution = MStarSolution(value=float(value), weights=weights, family=family, c=c, p=p, N=N)

    if p < 1.0:
        solution.flagged = True
        if N <= ORACLE_MAX_N:
            oracle_value, oracle_weights = _oracle_search(c, p, N)
            if oracle_value < solution.value - TIE_TOL:
                logger.warning(f"Oracle improves M({c:.6g}, {p:.6g}, {N}) from {solution.value:.12g} to {oracle_value:.12g}")
                solution.value, solution.weights, solution.source = oracle_value, oracle_weights, "oracle"
        else:
            logger.warning(f"M({c:.6g}, {p:.6g}, {N}) for p < 1 is not cross-checked: N exceeds {ORACLE_MAX_N}")

    logger.info(f"M({c:.6g}, {p:.6g}, {N}) = {solution.value:.12g} via {solution.family!r}")
    return solution


def _two_level_search(c: float, p: float, N: int) -> Tuple[float, np.ndarray]:
    """
    Exhaustive search over weight vectors with at most two distinct positive values.

    f'_{c,p} takes every value at most twice, so a stationary point of the
    constrained problem has a entries equal to u and b entries equal to v.
    """
    best_value, best_weights = math.inf, None
    for b in range(1, N + 1):
        if b * c > 1.0:
            value = b * float(_f(c, p, 1.0 / b))
            if value < best_value:
                best_value = value
                best_weights = np.zeros(N)
                best_weights[:b] = 1.0 / b
        for a in range(1, N - b + 1):
            # u in (0, c), v = (1 - a u)/b in (0, c)
            lo = max(0.0, (1.0 - b * c) / a)
            hi = min(c, 1.0 / a)
            if not hi > lo:
                continue
            grid = np.linspace(lo, hi, ORACLE_GRID + 2)[1:-1]

            def objective(u, a=a, b=b):
                v = (1.0 - a * u) / b
                ok = (v > 0.0) & (v < c)
                v_safe = np.where(ok, v, 0.0)
                return np.where(ok, a * _f(c, p, u) + b * _f(c, p, v_safe), np.inf)

            u, value = _bounded_refine(objective, grid, objective(grid))
            if value < best_value:
                best_value = value
                best_weights = np.zeros(N)
                best_weights[:a] = u
                best_weights[a:a + b] = (1.0 - a * u) / b
    return best_value, best_weights


def _project_capped_simplex(Y: np.ndarray, cap: float) -> np.ndarray:
    """Row-wise Euclidean projection onto {t : sum t = 1, 0 <= t <= cap} by bisection on the shift."""
    lo = np.min(Y, axis=1) - 1.0
    hi = np.max(Y, axis=1)
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        total = np.clip(Y - mid[:, None], 0.0, cap).sum(axis=1)
        too_big = total > 1.0
        lo = np.where(too_big, mid, lo)
        hi = np.where(too_big, hi, mid)
    return np.clip(Y - 0.5 * (lo + hi)[:, None], 0.0, cap)


def _projected_gradient_search(c: float, p: float, N: int) -> Tuple[float, np.ndarray]:
    """Multi-start projected gradient on the capped simplex, all starts advanced together."""
    rng = generator(ORACLE_SEED)
    cap = c * (1.0 - 1e-9)
    T = _project_capped_simplex(rng.dirichlet(np.ones(N), size=ORACLE_STARTS), cap)
    step = 1e-2 * c
    for it in range(ORACLE_ITERS):
        safe = np.clip(T, 1e-12, cap)
        grad = (p / 2.0) * _f(c, p, safe) / safe * c / (c - safe)
        T = _project_capped_simplex(T - step / (1.0 + it) ** 0.5 * grad, cap)
    values = np.sum(_f(c, p, T), axis=1)
    j = int(np.argmin(values))
    return float(values[j]), T[j]


def _oracle_search(c: float, p: float, N: int) -> Tuple[float, np.ndarray]:
    exhaustive = _two_level_search(c, p, N)
    sampled = _projected_gradient_search(c, p, N)
    return min(exhaustive, sampled, key=lambda pair: pair[0])


def mstar_oracle(c: float, p: float, N: int) -> float:
    """
    Independent value of M(c, p, N) for N <= 8.

    Raises:
        TooLargeError: If N > 8.
        InfeasibleCError: If c <= 1/N.
    """
    if N > ORACLE_MAX_N:
        raise TooLargeError(f"Oracle is limited to N <= {ORACLE_MAX_N}, got N={N}")
    _check_inputs(c, p, N)
    value, _ = _oracle_search(c, p, N)
    return value
