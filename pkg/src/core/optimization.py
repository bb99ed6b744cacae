from dataclasses import dataclass, field
from typing import List, Optional, Dict, Any, Tuple

from .configuration import Configuration


def _default_schedule() -> Tuple[float, ...]:
    return (1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8)


@dataclass(slots=True)
class OptimizerOptions:
    """Settings for the multi-start projected gradient search."""
    restarts: int = 64
    max_iters: int = 5000
    step0: float = 0.1
    armijo_beta: float = 0.5
    armijo_sigma: float = 1e-4
    grad_tol: float = 1e-9
    epsilon_schedule: Tuple[float, ...] = field(default_factory=_default_schedule)
    seed: int = 0
    threads: int = 1
    stall_patience: int = 50
    stall_delta: float = 1e-15
    progress: bool = False

    def __post_init__(self):
        """Ensuring every setting is positive and the schedule decreases."""
        self.epsilon_schedule = tuple(float(eps) for eps in self.epsilon_schedule)
        for name in ("restarts", "max_iters", "step0", "armijo_beta", "grad_tol", "threads", "stall_patience"):
            if not getattr(self, name) > 0:
                raise ValueError(f"OptimizerOptions.{name} must be positive, got {getattr(self, name)}")
        if not 0 < self.armijo_beta < 1:
            raise ValueError(f"armijo_beta must lie in (0, 1), got {self.armijo_beta}")
        if not self.epsilon_schedule or any(eps <= 0 for eps in self.epsilon_schedule):
            raise ValueError("epsilon_schedule must be a non-empty sequence of positive widths")
        if any(b >= a for a, b in zip(self.epsilon_schedule, self.epsilon_schedule[1:])):
            raise ValueError(f"epsilon_schedule must be decreasing, got {self.epsilon_schedule}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "restarts": self.restarts,
            "max_iters": self.max_iters,
            "step0": self.step0,
            "armijo_beta": self.armijo_beta,
            "armijo_sigma": self.armijo_sigma,
            "grad_tol": self.grad_tol,
            "epsilon_schedule": list(self.epsilon_schedule),
            "seed": self.seed,
            "threads": self.threads,
            "stall_patience": self.stall_patience,
            "stall_delta": self.stall_delta,
        }


@dataclass(slots=True)
class TraceEntry:
    epsilon: float
    iteration: int
    energy: float
    grad_norm: float
    step: float


@dataclass(slots=True)
class MinimizeResult:
    """Best configuration over all restarts, with the winning restart's trace."""
    configuration: Configuration
    energy: float
    trace: List[TraceEntry]
    converged: bool
    restart_energies: List[float]
    best_restart: int

    def __iter__(self):
        """Unpack as (configuration, energy, trace)."""
        return iter((self.configuration, self.energy, self.trace))

    def restarts_hitting_best(self, tol: float = 1e-6) -> int:
        return sum(1 for value in self.restart_energies if value <= self.energy + tol)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "energy": self.energy,
            "converged": self.converged,
            "best_restart": self.best_restart,
            "restarts_hitting_best": self.restarts_hitting_best(),
            "restart_energies": self.restart_energies,
            "iterations": len(self.trace),
            "configuration": self.configuration.to_dict(),
        }


@dataclass(slots=True)
class SweepRow:
    p: float
    best_energy: float
    construction_energy: float
    bound: float
    gap: float
    restarts_hitting_best: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "best_energy": self.best_energy,
            "construction_energy": self.construction_energy,
            "bound": self.bound,
            "gap": self.gap,
            "restarts_hitting_best": self.restarts_hitting_best,
        }
