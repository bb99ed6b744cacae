import math
import logging
from typing import Dict

from .mstar import mstar, f_cp
from ..utils.errors import NotApplicableError, BadExponentError, DomainError

logger = logging.getLogger(__name__)

PLANAR_MAX_P = 1.3


def lemma2_bound(N: int, d: int, p: float) -> float:
    """
    Lower bound on E_p(A) for rank-d unit-diagonal A through the auxiliary problem.

    M(1/(N-d), p, N) for 1 <= p <= 2 and (N-1)^(1-p/2) M(1/(N-d), p, N) for p > 2.

    Raises:
        NotApplicableError: If N <= d.
        BadExponentError: If p < 1.
    """
    if N <= d:
        raise NotApplicableError(f"Auxiliary bound needs N > d, got N={N}, d={d}")
    if p < 1.0:
        raise BadExponentError(f"Auxiliary bound needs p >= 1, got {p}")
    value = mstar(1.0 / (N - d), p, N).value
    if p > 2.0:
        value *= (N - 1) ** (1.0 - p / 2.0)
    return value


def bound_theorem2(N: int, d: int, p: float) -> float:
    """
    2(N-d) / (p^(p/2) (2-p)^((2-p)/2)) for p in [1, 2), and 2(N-d) for p in (0, 1).

    Returns 0 when N <= d.
    """
    if not 0.0 < p < 2.0:
        raise BadExponentError(f"Rank bound needs p in (0, 2), got {p}")
    excess = max(N - d, 0)
    if p < 1.0:
        return 2.0 * excess
    return 2.0 * excess / (p ** (p / 2.0) * (2.0 - p) ** ((2.0 - p) / 2.0))


def bound_proposition1(N: int, d: int, p: float) -> float:
    """N(N-1)((N-d)/(d(N-1)))^(p/2) for p >= 2; equality exactly on equiangular tight frames."""
    if p < 2.0:
        raise BadExponentError(f"Frame bound needs p >= 2, got {p}")
    if N <= d:
        return 0.0
    return N * (N - 1) * ((N - d) / (d * (N - 1))) ** (p / 2.0)


def welch_bound(N: int, d: int) -> float:
    if N < 2:
        raise ValueError(f"Welch bound needs N >= 2, got {N}")
    if N <= d:
        return 0.0
    return math.sqrt((N - d) / (d * (N - 1)))


def gerzon_bound(d: int, field: str = "real") -> int:
    """Largest possible ETF size in dimension d."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if field == "real":
        return d * (d + 1) // 2
    if field == "complex":
        return d * d
    raise ValueError(f"field must be 'real' or 'complex', got {field!r}")


def p_threshold(m: int) -> float:
    """p_m = 2 log((2m+1)/(2m)) / log((m+1)/m)."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return 2.0 * math.log((2 * m + 1) / (2 * m)) / math.log((m + 1) / m)


def p_threshold_upper(m: int) -> float:
    """(4m+2)/(4m+1), an upper estimate for p_threshold(m)."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return (4 * m + 2) / (4 * m + 1)


def F_m(m: int, x: float, p: float) -> float:
    """x (m/(x-m))^(p/2), the value of N equal weights 1/x under f_{1/m,p}."""
    if x <= m:
        raise DomainError(f"F_m needs x > m, got x={x}, m={m}")
    return x * (m / (x - m)) ** (p / 2.0)


def g_j(m: int, j: int, x: float, p: float) -> float:
    """
    j f_{1/m,p}(x) + f_{1/m,p}(1 - jx).

    g_j(1/(j+1)) = F_m(j+1) and g_j(1/j) = F_m(j).
    """
    c = 1.0 / m
    return j * f_cp(c, p, x) + f_cp(c, p, max(1.0 - j * x, 0.0))


def fm_local_minimum(m: int, p: float, iterations: int = 200) -> float:
    """
    Location of the unique local minimum of F_m on (m, inf), by ternary search.

    Raises:
        BadExponentError: Unless 0 < p < 2 (F_m is monotone otherwise).
    """
    if not 0.0 < p < 2.0:
        raise BadExponentError(f"F_m has an interior minimum only for p in (0, 2), got {p}")
    lo, hi = m * (1.0 + 1e-12), 2.0 * m
    while F_m(m, 2.0 * hi, p) < F_m(m, hi, p):
        hi *= 2.0
    hi *= 2.0
    for _ in range(iterations):
        a = lo + (hi - lo) / 3.0
        b = hi - (hi - lo) / 3.0
        if F_m(m, a, p) < F_m(m, b, p):
            hi = b
        else:
            lo = a
    return 0.5 * (lo + hi)


def bound_theorem5(N: int, p: float) -> float:
    """Planar bound N(N-2)/2 for even N and (N-1)^2/2 for odd N, valid for p <= 1.3."""
    if not 0.0 < p <= PLANAR_MAX_P:
        raise BadExponentError(f"Planar bound needs p in (0, {PLANAR_MAX_P}], got {p}")
    if N % 2 == 0:
        return N * (N - 2) / 2.0
    return (N - 1) ** 2 / 2.0


def applicable_bounds(N: int, d: int, p: float) -> Dict[str, float]:
    """
    Every closed-form lower bound on the p-frame energy that applies to (N, d, p).

    Keys: bound_theorem2 (p < 2), bound_proposition1 (p >= 2), lemma2_bound (N > d, p >= 1),
    small_excess_bound (N = d + m with m < d and p <= p_threshold(m)), bound_theorem5 (d = 2, p <= 1.3).
    """
    bounds: Dict[str, float] = {}
    if 0.0 < p < 2.0:
        bounds["bound_theorem2"] = bound_theorem2(N, d, p)
    if p >= 2.0:
        bounds["bound_proposition1"] = bound_proposition1(N, d, p)
    if N > d and p >= 1.0:
        bounds["lemma2_bound"] = lemma2_bound(N, d, p)
    m = N - d
    # Energies are nonincreasing in p, so the bound at p = 1 covers p < 1.
    if 1 <= m < d and p <= p_threshold(m):
        bounds["small_excess_bound"] = 2.0 * m
    if d == 2 and 0.0 < p <= PLANAR_MAX_P:
        bounds["bound_theorem5"] = bound_theorem5(N, p)
    return bounds
