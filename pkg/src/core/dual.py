from dataclasses import dataclass
from typing import Dict, Any

import numpy as np


@dataclass(slots=True, eq=False)
class GaleDual:
    """
    Tight frame {y_i} in R^(N-d) attached to a rank-d Gram matrix.

    Y has the y_i as columns; weights[i] = <y_i, y_i>; the frame constant is 1/(N-d).
    """
    Y: np.ndarray
    weights: np.ndarray
    frame_constant: float

    @property
    def N(self) -> int:
        return int(self.Y.shape[1])

    @property
    def codim(self) -> int:
        """N - d, the dimension the frame lives in."""
        return int(self.Y.shape[0])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "codim": self.codim,
            "N": self.N,
            "frame_constant": self.frame_constant,
            "weights": self.weights.tolist(),
            "Y": self.Y.T.tolist(),
        }

    def __repr__(self) -> str:
        return f"GaleDual(codim={self.codim}, N={self.N}, frame_constant={self.frame_constant:.6g})"


@dataclass(slots=True)
class GaleReport:
    """Residuals of the three Gale-dual contracts."""
    kernel_residual: float
    tightness_residual: float
    normalization_residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return max(self.kernel_residual, self.tightness_residual, self.normalization_residual) <= self.tol

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kernel_residual": self.kernel_residual,
            "tightness_residual": self.tightness_residual,
            "normalization_residual": self.normalization_residual,
            "tol": self.tol,
            "passed": self.passed,
        }
