from dataclasses import dataclass, field
from typing import Optional, Dict, Any

import numpy as np


@dataclass(frozen=True, slots=True)
class MStarFamily:
    """
    Candidate family of weight vectors for M(c, p, N).

    equal_split(k):             t_1 = ... = t_k = 1/k, rest 0
    split_with_remainder(k, x): t_1 = ... = t_k = x, t_(k+1) = 1 - kx, rest 0
    """
    name: str
    k: int
    x: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "k": self.k, "x": self.x}

    def __repr__(self) -> str:
        if self.x is None:
            return f"{self.name}({self.k})"
        return f"{self.name}({self.k}, {self.x:.12g})"


@dataclass(slots=True, eq=False)
class MStarSolution:
    """Value of M(c, p, N) with its minimizing weights."""
    value: float
    weights: np.ndarray
    family: MStarFamily
    c: float
    p: float
    N: int
    # Set when p < 1, where the two candidate families are not guaranteed to hold the minimum
    flagged: bool = False
    source: str = field(default="structural")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "weights": self.weights.tolist(),
            "family": self.family.to_dict(),
            "c": self.c,
            "p": self.p,
            "N": self.N,
            "flagged": self.flagged,
            "source": self.source,
        }

    def __repr__(self) -> str:
        return (f"MStarSolution(value={self.value:.12g}, family={self.family!r}, "
                f"c={self.c:.6g}, p={self.p:.6g}, N={self.N}, flagged={self.flagged})")
