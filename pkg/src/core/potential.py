from dataclasses import dataclass, field, replace
from typing import Optional, Dict, Any
import math

from ..config.tolerances import ToleranceMixin

POTENTIAL_KINDS = ("pframe", "simplex_shift", "etf_dev")


@dataclass(frozen=True, slots=True)
class Potential(ToleranceMixin):
    """
    Pair potential f(t) of an inner product t.

    pframe:        |t|^p
    simplex_shift: |t + 1/d|^p
    etf_dev:       |t^2 - alpha^2|^p
    A positive epsilon replaces |u|^p by (u^2 + eps^2)^(p/2) - eps^p.
    """
    kind: str
    p: float
    d: Optional[int] = None
    alpha: Optional[float] = None
    epsilon: float = 0.0

    def __post_init__(self):
        if self.kind not in POTENTIAL_KINDS:
            raise ValueError(f"Unknown potential kind {self.kind!r}; expected one of {POTENTIAL_KINDS}")
        if not self.p > 0:
            raise ValueError(f"Exponent p must be positive, got {self.p}")
        if self.epsilon < 0:
            raise ValueError(f"Smoothing width must be nonnegative, got {self.epsilon}")
        if self.kind == "simplex_shift" and (self.d is None or self.d < 1):
            raise ValueError("simplex_shift potential needs a dimension d >= 1")
        if self.kind == "etf_dev":
            if self.alpha is None or not (0.0 <= self.alpha < 1.0):
                raise ValueError(f"etf_dev potential needs alpha in [0, 1), got {self.alpha}")

    @classmethod
    def pframe(cls, p: float, epsilon: float = 0.0) -> "Potential":
        return cls("pframe", float(p), epsilon=float(epsilon))

    @classmethod
    def simplex_shift(cls, d: int, p: float, epsilon: float = 0.0) -> "Potential":
        return cls("simplex_shift", float(p), d=int(d), epsilon=float(epsilon))

    @classmethod
    def etf_dev(cls, p: float, alpha: Optional[float] = None, alpha_sq: Optional[float] = None,
                epsilon: float = 0.0) -> "Potential":
        """ETF-deviation potential, coherence given either as alpha or alpha^2."""
        if alpha is None:
            if alpha_sq is None:
                raise ValueError("etf_dev needs alpha or alpha_sq")
            alpha = math.sqrt(alpha_sq)
        return cls("etf_dev", float(p), alpha=float(alpha), epsilon=float(epsilon))

    def with_p(self, p: float) -> "Potential":
        return replace(self, p=float(p))

    def with_epsilon(self, epsilon: float) -> "Potential":
        return replace(self, epsilon=float(epsilon))

    @property
    def is_even(self) -> bool:
        """True when f(-t) = f(t), so sign flips of vectors leave energies unchanged."""
        return self.kind != "simplex_shift"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "p": self.p,
            "d": self.d,
            "alpha": self.alpha,
            "epsilon": self.epsilon,
        }

    def __repr__(self) -> str:
        extra = ""
        if self.kind == "simplex_shift":
            extra = f", d={self.d}"
        elif self.kind == "etf_dev":
            extra = f", alpha={self.alpha}"
        return f"Potential({self.kind}, p={self.p}{extra}, epsilon={self.epsilon})"


@dataclass(slots=True)
class EnergyReport:
    """Discrete energy: sum of f over all ordered pairs i != j."""
    value: float
    pair_count: int
    max_term: float
    potential: Potential = field(compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "pair_count": self.pair_count,
            "max_term": self.max_term,
            "potential": self.potential.to_dict(),
        }
