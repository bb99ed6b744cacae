import logging

import numpy as np

from ..core.configuration import Configuration
from ..core.potential import Potential
from ..energy.potentials import eval_potential
from ..frames.properties import gram
from ..utils.errors import BadExponentError

logger = logging.getLogger(__name__)

INEQUALITY_SLACK = 1e-12


def continuous_energy(X: Configuration, f: Potential) -> float:
    """
    I_f(mu) for mu uniform on the vectors of X.

    (1/N^2) sum over all ordered pairs (i, j), the diagonal included.
    """
    values = eval_potential(f, gram(X).entries)
    return float(np.sum(values)) / X.N ** 2


def check_inequality_eq6(t_grid, d: int, p: float) -> bool:
    """
    Check |u|^p >= u^2 on a grid for both normalized potentials.

    u = (t + 1/d)/(1 + 1/d) and u = (t^2 - a)/(1 - a) with a = 1/(d+2);
    both stay in [-1, 1], where the inequality holds for p <= 2.
    """
    if not 0.0 < p <= 2.0:
        raise BadExponentError(f"Comparison holds for p in (0, 2], got {p}")
    t = np.clip(np.asarray(t_grid, dtype=np.float64), -1.0, 1.0)
    a = 1.0 / (d + 2)
    for u in ((t + 1.0 / d) / (1.0 + 1.0 / d), (t * t - a) / (1.0 - a)):
        if np.any(np.abs(u) ** p < u * u - INEQUALITY_SLACK):
            return False
    return True


def continuous_energy_bound(kind: str, d: int, p: float) -> float:
    """
    Lower bound on I_f(mu) over probability measures on S^(d-1) for p in (0, 2].

    pframe:        1/d
    simplex_shift: (1 + 1/d)^(p-2) (d+1)/d^2, attained by the regular simplex
    etf_dev:       (1 - 1/(d+2))^(p-2) 2(d+1)/(d(d+2)^2) at alpha^2 = 1/(d+2),
                   attained by a maximal ETF
    """
    if not 0.0 < p <= 2.0:
        raise BadExponentError(f"Continuous bounds are stated for p in (0, 2], got {p}")
    if kind == "pframe":
        return 1.0 / d
    if kind == "simplex_shift":
        return (1.0 + 1.0 / d) ** (p - 2.0) * (d + 1) / d ** 2
    if kind == "etf_dev":
        return (1.0 - 1.0 / (d + 2)) ** (p - 2.0) * 2.0 * (d + 1) / (d * (d + 2) ** 2)
    raise ValueError(f"Unknown potential kind {kind!r}")
