#!/usr/bin/env python
# -*- coding: utf-8 -*-

import logging
from typing import Dict, Any, List, Tuple

import numpy as np
import pandas as pd
from sympy import Rational

from ..config.tolerances import ToleranceMixin
from ..core.configuration import Configuration
from ..core.potential import Potential
from ..core.optimization import OptimizerOptions
from ..bounds.closed_form import (
    applicable_bounds, bound_theorem2, bound_proposition1, lemma2_bound, welch_bound,
    gerzon_bound, p_threshold, bound_theorem5, PLANAR_MAX_P,
)
from ..bounds.mstar import mstar, mstar_oracle
from ..bounds.certificates import per_row_certificate, lemma2_certified_bound
from ..continuous.polynomials import parse_coefficients, format_poly, simplex_shift_square, etf_dev_square
from ..continuous.gegenbauer import expand, is_positive_definite, energy_lower_bound_gegenbauer
from ..data.constructions import parse_construction
from ..data.vector_files import save_vectors
from ..energy.potentials import energy
from ..energy.angles import angle_sum, fejes_toth_bound
from ..frames.gale import gale_dual, verify_gale
from ..frames.properties import gram, coherence, is_repeated_onb
from ..optimizer.sphere_descent import minimize_energy
from ..optimizer.experiments import sweep_p
from ..utils.errors import NotApplicableError, BadExponentError, NotCertifiableError
from ..utils.linalg import numerical_rank

logger = logging.getLogger(__name__)

Payload = Tuple[Dict[str, Any], List[str]]


def _configuration(args) -> Configuration:
    spec = args.construct if args.construct is not None else f"file:{args.file}"
    return parse_construction(spec)


def _potential(args, d: int, p: float = None) -> Potential:
    p = args.p if p is None else p
    if args.potential == 'pframe':
        return Potential.pframe(p, epsilon=args.epsilon)
    if args.potential == 'simplex-shift':
        return Potential.simplex_shift(args.shift_d or d, p, epsilon=args.epsilon)
    return Potential.etf_dev(p, alpha=args.alpha, alpha_sq=args.alpha_sq, epsilon=args.epsilon)


def _epsilon_schedule(eps_start: float, eps_stop: float) -> List[float]:
    """eps_start, eps_start/10, ... down to eps_stop (included up to rounding)."""
    if not (0 < eps_start < np.inf and eps_stop > 0):
        raise ValueError(f"--eps-start and --eps-stop must be positive and finite, got {eps_start} and {eps_stop}")
    if eps_stop > eps_start:
        raise ValueError(f"--eps-stop ({eps_stop}) must not exceed --eps-start ({eps_start})")
    levels = int(np.floor(np.log10(eps_start / eps_stop) + 1e-9)) + 1
    return [eps_start / 10.0 ** i for i in range(levels)]


def _options(args) -> OptimizerOptions:
    schedule = _epsilon_schedule(args.eps_start, args.eps_stop)
    return OptimizerOptions(
        restarts=args.restarts,
        max_iters=args.max_iters,
        step0=args.step0,
        grad_tol=args.grad_tol,
        epsilon_schedule=tuple(schedule),
        seed=args.seed,
        threads=args.threads,
        progress=args.progress,
    )


def _parse_grid(text: str) -> List[float]:
    """'1.0,1.2' or 'start:step:stop' (stop included)."""
    if ":" in text:
        start, step, stop = (float(token) for token in text.split(":"))
        if not step > 0:
            raise ValueError(f"Grid step must be positive, got {step} in {text!r}")
        if stop < start:
            raise ValueError(f"Grid stop {stop} is below its start {start} in {text!r}")
        count = int(np.floor((stop - start) / step + 1e-9)) + 1
        grid = [round(start + i * step, 12) for i in range(count)]
    else:
        grid = [float(token) for token in text.split(",") if token.strip()]
    if not grid:
        raise ValueError(f"Empty p grid {text!r}")
    return grid


def _bounds_with_margins(value: float, bounds: Dict[str, float]) -> Dict[str, Dict[str, float]]:
    return {name: {"value": bound, "margin": value - bound} for name, bound in bounds.items()}


def _write_csv(frame: pd.DataFrame, path: str, outputs: List[str]) -> None:
    if path:
        frame.to_csv(path, index=False, float_format="%.17g")
        outputs.append(path)


def cmd_energy(args) -> Payload:
    """Energy of a configuration, its coherence and all applicable lower bounds."""
    X = _configuration(args)
    f = _potential(args, X.d)
    report = energy(gram(X), f)
    bounds = applicable_bounds(X.N, X.d, f.p) if f.kind == "pframe" else {}
    payload = {
        "configuration": {"label": X.label, "d": X.d, "N": X.N},
        **report.to_dict(),
        "coherence": coherence(X) if X.N >= 2 else None,
        "bounds": _bounds_with_margins(report.value, bounds),
    }
    outputs: List[str] = []
    frame = pd.DataFrame(
        [{"bound": name, "value": b, "margin": report.value - b} for name, b in bounds.items()],
        columns=["bound", "value", "margin"],
    )
    _write_csv(frame, args.csv, outputs)
    return payload, outputs


def cmd_certify(args) -> Payload:
    """Every closed-form bound for (N, d, p); inapplicable entries are null."""
    N, d, p = args.N, args.d, args.p
    if N < 1 or d < 1 or not p > 0:
        raise ValueError(f"N and d must be positive and p > 0, got N={N}, d={d}, p={p}")
    bounds: Dict[str, Any] = {
        "bound_theorem2": bound_theorem2(N, d, p) if p < 2.0 else None,
        "bound_proposition1": bound_proposition1(N, d, p) if p >= 2.0 else None,
        "welch_bound": welch_bound(N, d) if N >= 2 else None,
        "gerzon_bound": {"real": gerzon_bound(d, "real"), "complex": gerzon_bound(d, "complex")},
        "p_threshold": p_threshold(N - d) if 1 <= N - d < d else None,
        "bound_theorem5": bound_theorem5(N, p) if d == 2 and p <= PLANAR_MAX_P else None,
    }
    try:
        bounds["lemma2_bound"] = lemma2_bound(N, d, p)
    except (NotApplicableError, BadExponentError) as e:
        logger.info(f"lemma2_bound not reported: {e}")
        bounds["lemma2_bound"] = None
    payload = {"N": N, "d": d, "p": p, "bounds": bounds}
    outputs: List[str] = []
    frame = pd.DataFrame(
        [{"bound": name, "value": value} for name, value in bounds.items() if isinstance(value, float)],
        columns=["bound", "value"],
    )
    _write_csv(frame, args.csv, outputs)
    return payload, outputs


def cmd_gale(args) -> Payload:
    """Gale dual of a configuration, residual report and optional row certificate."""
    X = _configuration(args)
    A = gram(X)
    rank = numerical_rank(A.entries)
    G = gale_dual(A, rank)
    report = verify_gale(A, G)
    payload: Dict[str, Any] = {
        "configuration": {"label": X.label, "d": X.d, "N": X.N, "rank": rank},
        "dual": G.to_dict(),
        "report": report.to_dict(),
    }
    table = pd.DataFrame({"i": np.arange(G.N), "weight": G.weights})
    if args.p is not None:
        residuals = per_row_certificate(A, G, args.p)
        table["residual"] = residuals
        payload["certificate"] = {
            "p": args.p,
            "residuals": residuals.tolist(),
            "min_residual": float(residuals.min()),
            "passed": bool(residuals.min() >= -ToleranceMixin.CERTIFICATE_TOL),
            "certified_bound": lemma2_certified_bound(A, G, args.p),
            "energy": energy(A, Potential.pframe(args.p)).value,
        }
    outputs: List[str] = []
    if args.output:
        header = f"Gale dual of {X.label}: one y_i per row in R^{G.codim}, frame constant 1/{G.codim}"
        outputs.append(save_vectors(args.output, G.Y.T, header))
    _write_csv(table, args.csv, outputs)
    return payload, outputs


def cmd_mstar(args) -> Payload:
    try:
        c = float(Rational(args.c))
    except (TypeError, ValueError, ZeroDivisionError):
        raise ValueError(f"--c must be a decimal or a fraction, got {args.c!r}") from None
    solution = mstar(c, args.p, args.N)
    payload: Dict[str, Any] = {"solution": solution.to_dict()}
    if args.oracle:
        oracle = mstar_oracle(c, args.p, args.N)
        payload["oracle"] = {"value": oracle, "difference": solution.value - oracle}
    outputs: List[str] = []
    _write_csv(pd.DataFrame({"i": np.arange(args.N), "weight": solution.weights}), args.csv, outputs)
    return payload, outputs


def cmd_minimize(args) -> Payload:
    f = _potential(args, args.d)
    result = minimize_energy(args.d, args.N, f, _options(args))
    bounds = applicable_bounds(args.N, args.d, f.p) if f.kind == "pframe" else {}
    payload = {
        "potential": f.to_dict(),
        **result.to_dict(),
        "repeated_onb": is_repeated_onb(result.configuration),
        "bounds": _bounds_with_margins(result.energy, bounds),
    }
    outputs: List[str] = []
    if args.output:
        header = f"{result.configuration.label} energy {result.energy!r}"
        outputs.append(save_vectors(args.output, result.configuration.rows(), header))
    trace = pd.DataFrame(
        [(e.epsilon, e.iteration, e.energy, e.grad_norm, e.step) for e in result.trace],
        columns=["epsilon", "iteration", "energy", "grad_norm", "step"],
    )
    _write_csv(trace, args.csv, outputs)
    return payload, outputs


def cmd_sweep(args) -> Payload:
    grid = _parse_grid(args.p_grid)
    construction = _configuration(args)
    template = _potential(args, args.d, p=grid[0] if args.p is None else args.p)
    result = sweep_p(args.d, args.N, template, grid, construction, _options(args))
    outputs: List[str] = []
    if args.csv:
        result.to_csv(args.csv)
        outputs.append(args.csv)
    return result.to_dict(), outputs


def cmd_pd_check(args) -> Payload:
    if args.preset == 'simplex-shift':
        f = simplex_shift_square(args.d)
    elif args.preset == 'etf-dev':
        f = etf_dev_square(args.d)
    else:
        f = parse_coefficients(args.coeffs)
    coefficients = expand(f, args.d)
    try:
        lower = str(energy_lower_bound_gegenbauer(f, args.d))
    except NotCertifiableError as e:
        logger.info(str(e))
        lower = None
    payload = {
        "polynomial": format_poly(f),
        "d": args.d,
        "coefficients": [str(a) for a in coefficients],
        "positive_definite": is_positive_definite(f, args.d),
        "energy_lower_bound": lower,
    }
    outputs: List[str] = []
    frame = pd.DataFrame({"degree": range(len(coefficients)), "coefficient": [str(a) for a in coefficients]})
    _write_csv(frame, args.csv, outputs)
    return payload, outputs


def cmd_anglesum(args) -> Payload:
    X = _configuration(args)
    total = angle_sum(X)
    bound = fejes_toth_bound(X.N)
    payload = {
        "configuration": {"label": X.label, "d": X.d, "N": X.N},
        "angle_sum": total,
        "fejes_toth_bound": bound,
        "planar": X.d == 2,
        "margin": bound - total,
    }
    return payload, []


COMMANDS = {
    'energy': cmd_energy,
    'certify': cmd_certify,
    'gale': cmd_gale,
    'mstar': cmd_mstar,
    'minimize': cmd_minimize,
    'sweep': cmd_sweep,
    'pd-check': cmd_pd_check,
    'anglesum': cmd_anglesum,
}
