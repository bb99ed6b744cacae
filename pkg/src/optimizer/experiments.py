import sys
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Dict, Any

import numpy as np
import pandas as pd
from tqdm import tqdm

from .sphere_descent import minimize_energy
from ..core.configuration import Configuration
from ..core.potential import Potential
from ..core.optimization import OptimizerOptions, SweepRow
from ..bounds.closed_form import applicable_bounds
from ..energy.potentials import energy
from ..frames.builders import hybrid_simplex
from ..frames.properties import gram, canonicalize
from ..utils.errors import DimensionMismatchError

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ["p", "best_energy", "construction_energy", "bound", "gap", "restarts_hitting_best"]
GAP_TOL = 1e-6


@dataclass(slots=True)
class SweepResult:
    """Rows of a p-sweep plus the smallest p at which the construction was beaten."""
    rows: List[SweepRow]
    threshold: Optional[float]
    potential: Potential
    d: int
    N: int
    construction_label: str = field(default="")

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame([row.to_dict() for row in self.rows], columns=SWEEP_COLUMNS)

    def to_csv(self, path) -> None:
        """Plot-ready CSV, 17 significant digits."""
        self.to_dataframe().to_csv(path, index=False, float_format="%.17g")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "N": self.N,
            "potential": self.potential.to_dict(),
            "construction": self.construction_label,
            "threshold_estimate": self.threshold,
            "rows": [row.to_dict() for row in self.rows],
        }


def _check_shape(X: Configuration, d: int, N: int) -> None:
    if (X.d, X.N) != (d, N):
        raise DimensionMismatchError(f"Configuration {X.label or X!r} has shape d={X.d}, N={X.N}; expected d={d}, N={N}")


def sweep_p(d: int, N: int, f_family: Potential, p_grid: Sequence[float], construction: Configuration,
            opts: Optional[OptimizerOptions] = None) -> SweepResult:
    """
    Compare the empirical minimum with a construction across exponents.

    Args:
        d, N: Problem size.
        f_family: Potential whose p is replaced by each grid value.
        p_grid: Ascending exponents in (0, 4].
        construction: Configuration to beat (e.g. a repeated ONB).
        opts: Optimizer settings, shared by every row.

    Returns:
        SweepResult; gap = best_energy - construction_energy and the threshold
        estimate is the first p with gap < -1e-6. The best energy is empirical only.
    """
    grid = [float(p) for p in p_grid]
    if any(not 0.0 < p <= 4.0 for p in grid) or any(b < a for a, b in zip(grid, grid[1:])):
        raise ValueError(f"p_grid must be ascending within (0, 4], got {grid}")
    _check_shape(construction, d, N)
    opts = opts or OptimizerOptions()
    A = gram(construction)

    rows: List[SweepRow] = []
    threshold = None
    for p in tqdm(grid, disable=not opts.progress, file=sys.stderr, desc="sweep"):
        f = f_family.with_p(p).with_epsilon(0.0)
        result = minimize_energy(d, N, f, opts)
        construction_energy = energy(A, f).value
        bound = 0.0
        if f.kind == "pframe":
            bound = max(applicable_bounds(N, d, p).values(), default=0.0)
        row = SweepRow(
            p=p,
            best_energy=result.energy,
            construction_energy=construction_energy,
            bound=bound,
            gap=result.energy - construction_energy,
            restarts_hitting_best=result.restarts_hitting_best(GAP_TOL),
        )
        if row.best_energy < bound - GAP_TOL:
            logger.error(f"Optimizer energy {row.best_energy:.12g} violates lower bound {bound:.12g} at p={p}")
        if threshold is None and row.gap < -GAP_TOL:
            threshold = p
        logger.info(f"sweep p={p:g}: best={row.best_energy:.10g} construction={construction_energy:.10g} gap={row.gap:.3e}")
        rows.append(row)

    return SweepResult(rows, threshold, f_family, d, N, construction.label)


def compare_constructions(d: int, N: int, f: Potential, candidates: Sequence[Configuration]) -> pd.DataFrame:
    """
    Rank candidate configurations by energy, ascending and stable.

    For N = d+1 the simplex hybrids (k-simplex plus d-k orthonormal vectors,
    k = 1..d) are appended; for even potentials a hybrid that coincides with a
    candidate up to signs and order is skipped.

    Raises:
        DimensionMismatchError: If a candidate is not d x N.
    """
    entries = []
    for i, X in enumerate(candidates):
        _check_shape(X, d, N)
        entries.append((X.label or f"candidate_{i}", "candidate", X))
    if N == d + 1:
        seen = [canonicalize(X).vectors for _, _, X in entries]
        for k in range(1, d + 1):
            H = hybrid_simplex(d, k)
            if f.is_even and any(np.allclose(canonicalize(H).vectors, V, atol=1e-9) for V in seen):
                continue
            entries.append((H.label, "hybrid", H))

    table = pd.DataFrame(
        [{"label": label, "source": source, "energy": energy(gram(X), f).value} for label, source, X in entries],
        columns=["label", "source", "energy"],
    )
    return table.sort_values("energy", kind="mergesort").reset_index(drop=True)
