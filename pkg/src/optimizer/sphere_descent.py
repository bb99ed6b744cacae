import sys
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, List, Tuple

import numpy as np
from tqdm import tqdm

from .early_stopping import StallMonitor
from ..core.configuration import Configuration
from ..core.potential import Potential
from ..core.optimization import OptimizerOptions, TraceEntry, MinimizeResult
from ..energy.potentials import pair_energy, energy_gradient
from ..frames.properties import canonicalize
from ..utils.seeding import restart_generators

logger = logging.getLogger(__name__)

MIN_STEP = 1e-18
MAX_STEP = 1.0


def random_configuration(d: int, N: int, rng: np.random.Generator) -> np.ndarray:
    """N rotation-invariant samples on S^(d-1) as columns."""
    V = rng.standard_normal((d, N))
    norms = np.linalg.norm(V, axis=0)
    while np.any(norms == 0.0):
        bad = norms == 0.0
        V[:, bad] = rng.standard_normal((d, int(bad.sum())))
        norms = np.linalg.norm(V, axis=0)
    return V / norms


def retract(V: np.ndarray) -> np.ndarray:
    """Back onto the product of spheres by column renormalization."""
    return V / np.linalg.norm(V, axis=0)


def descend_level(V: np.ndarray, f: Potential, opts: OptimizerOptions,
                  trace: Optional[List[TraceEntry]] = None) -> Tuple[np.ndarray, float, bool]:
    """
    Projected gradient with Armijo backtracking at one smoothing level.

    Accepted energies are nonincreasing. Returns (V, energy, converged) where
    converged means the tangential gradient norm dropped to grad_tol.
    """
    E = pair_energy(V, f)
    grad = energy_gradient(V, f)
    gnorm2 = float(np.sum(grad * grad))
    step = opts.step0
    monitor = StallMonitor(patience=opts.stall_patience, delta=opts.stall_delta,
                           verbose=logger.isEnabledFor(logging.DEBUG))

    for iteration in range(opts.max_iters):
        if gnorm2 <= opts.grad_tol ** 2:
            return V, E, True
        while step >= MIN_STEP:
            candidate = retract(V - step * grad)
            E_new = pair_energy(candidate, f)
            if E_new <= E - opts.armijo_sigma * step * gnorm2:
                break
            step *= opts.armijo_beta
        else:
            # no decrease at any step length: numerically stationary
            return V, E, False

        V, E = candidate, E_new
        grad = energy_gradient(V, f)
        gnorm2 = float(np.sum(grad * grad))
        if trace is not None:
            trace.append(TraceEntry(f.epsilon, iteration, E, float(np.sqrt(gnorm2)), step))
        step = min(step / opts.armijo_beta, MAX_STEP)
        if monitor(E):
            break

    return V, E, gnorm2 <= opts.grad_tol ** 2


def _run_restart(d: int, N: int, f: Potential, opts: OptimizerOptions, rng: np.random.Generator,
                 record: bool = False) -> Tuple[np.ndarray, float, Optional[List[TraceEntry]], bool]:
    """One restart through the schedule; the trace is kept only when record is set."""
    V = random_configuration(d, N, rng)
    trace: Optional[List[TraceEntry]] = [] if record else None
    converged = False
    for eps in opts.epsilon_schedule:
        V, _, converged = descend_level(V, f.with_epsilon(eps), opts, trace)
    return V, pair_energy(V, f.with_epsilon(0.0)), trace, converged


def _merge_key(energy_value: float, X: Configuration) -> tuple:
    return (round(energy_value, 12), tuple(np.round(X.rows().ravel(), 9)))


def minimize_energy(d: int, N: int, f: Potential, opts: Optional[OptimizerOptions] = None) -> MinimizeResult:
    """
    Multi-start projected gradient search for a minimizer of the energy.

    Each restart samples N random unit vectors from its own PCG64 stream,
    descends through the smoothing schedule, and is scored with epsilon = 0.
    The winner is the minimum of (energy rounded to 1e-12, canonical form),
    so the result does not depend on thread scheduling.

    Args:
        d: Ambient dimension.
        N: Number of vectors.
        f: Potential; its own epsilon is ignored in favour of the schedule.
        opts: Optimizer settings.

    Returns:
        MinimizeResult with the canonical best configuration and the winning trace.
    """
    if d < 1 or N < 1:
        raise ValueError(f"d and N must be positive, got d={d}, N={N}")
    opts = opts or OptimizerOptions()
    generators = restart_generators(opts.seed, opts.restarts)
    logger.info(f"Minimizing {f!r} for d={d}, N={N} over {opts.restarts} restarts")

    restart_energies: List[float] = [0.0] * opts.restarts
    best_key, best = None, None
    with ThreadPoolExecutor(max_workers=opts.threads) as pool, \
            tqdm(total=opts.restarts, disable=not opts.progress, file=sys.stderr, desc="restarts") as bar:
        futures = [pool.submit(_run_restart, d, N, f, opts, rng) for rng in generators]
        # Collected in restart order so ties resolve the same way for any thread count
        for r, future in enumerate(futures):
            V, value, _, converged = future.result()
            futures[r] = None
            bar.update(1)
            restart_energies[r] = float(value)
            X = canonicalize(Configuration.from_columns(V))
            key = _merge_key(value, X)
            if best_key is None or key < best_key:
                best_key, best = key, (r, X, value, converged)
            if not converged:
                logger.debug(f"Restart {r} stopped before reaching grad_tol")

    r, X, value, converged = best
    # Streams depend only on (seed, r): replaying the winner reproduces its path with a trace
    replay = restart_generators(opts.seed, opts.restarts)[r]
    _, _, trace, _ = _run_restart(d, N, f, opts, replay, record=True)
    if not converged:
        logger.warning(f"Best restart {r} did not reach gradient norm {opts.grad_tol:.1e}")
    label = f"minimize:{f.kind},p={f.p:g},d={d},N={N}"
    return MinimizeResult(
        configuration=Configuration(X.vectors, label=label),
        energy=float(value),
        trace=trace,
        converged=converged,
        restart_energies=restart_energies,
        best_restart=r,
    )
