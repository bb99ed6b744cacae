"""
Multi-start projected gradient search and the experiments built on it.

    - Armijo steps never increase the energy within a smoothing level
    - results are deterministic for a fixed seed, independent of the thread count
    - known minimizers are recovered: tight frames at p = 2, repeated bases at p = 1, the Mercedes frame at p = 3
    - at least 90% of 64 restarts land on the known optimum in small cases
    - only the winning restart keeps a trace, replayed from its own stream
    - sweeps and construction rankings report the documented crossovers
"""

import logging

import numpy as np
import pandas as pd
import pytest
from pytest import approx

from src.core.optimization import OptimizerOptions, MinimizeResult
from src.core.potential import Potential
from src.frames.builders import repeated_onb, simplex
from src.frames.properties import is_repeated_onb, is_etf
from src.optimizer.early_stopping import StallMonitor
from src.optimizer import sphere_descent
from src.optimizer.sphere_descent import minimize_energy, descend_level, random_configuration, retract, _run_restart
from src.optimizer.experiments import sweep_p, compare_constructions, SWEEP_COLUMNS
from src.utils.errors import DimensionMismatchError
from src.utils.seeding import generator, restart_generators


def _quick(**overrides):
    settings = dict(restarts=4, max_iters=2000, seed=7)
    settings.update(overrides)
    return OptimizerOptions(**settings)


class TestStallMonitor:
    def test_stalls_after_patience(self):
        monitor = StallMonitor(patience=3)
        assert not monitor(1.0)
        assert not monitor(1.0)
        assert not monitor(1.0)
        assert monitor(1.0)

    def test_improvement_resets(self):
        monitor = StallMonitor(patience=2)
        monitor(1.0)
        monitor(1.0)
        assert not monitor(0.5)
        assert monitor.counter == 0
        monitor.reset()
        assert monitor.best_energy is None

    def test_verbose_logs_counter(self, caplog):
        caplog.set_level(logging.DEBUG, logger="src.optimizer.early_stopping")
        monitor = StallMonitor(patience=2, verbose=True)
        monitor(1.0)
        monitor(1.0)
        assert "counter: 1 out of 2" in caplog.text


class TestOptions:
    @pytest.mark.parametrize("kwargs", [
        {"restarts": 0},
        {"armijo_beta": 1.0},
        {"epsilon_schedule": (1e-3, 1e-2)},
        {"epsilon_schedule": ()},
        {"grad_tol": -1.0},
    ])
    def test_rejects(self, kwargs):
        with pytest.raises(ValueError):
            OptimizerOptions(**kwargs)

    def test_schedule_is_tuple(self):
        assert OptimizerOptions(epsilon_schedule=[1e-2, 1e-4]).epsilon_schedule == (1e-2, 1e-4)


class TestDescent:
    def test_retract(self):
        V = retract(np.array([[3.0, 0.0], [4.0, 2.0]]))
        np.testing.assert_allclose(np.linalg.norm(V, axis=0), 1.0)

    def test_random_configuration_unit(self):
        V = random_configuration(4, 9, generator(3))
        np.testing.assert_allclose(np.linalg.norm(V, axis=0), 1.0)

    def test_monotone_within_level(self):
        f = Potential.pframe(1.5, epsilon=1e-2)
        trace = []
        V0 = random_configuration(3, 7, generator(11))
        descend_level(V0, f, _quick(max_iters=300), trace)
        energies = [entry.energy for entry in trace]
        assert len(energies) > 1
        assert all(b <= a for a, b in zip(energies, energies[1:]))

    def test_debug_level_turns_on_stall_logging(self, caplog, monkeypatch):
        seen = []

        class RecordingMonitor(StallMonitor):
            def __init__(self, **kwargs):
                seen.append(kwargs.get("verbose"))
                super().__init__(**kwargs)

        monkeypatch.setattr(sphere_descent, "StallMonitor", RecordingMonitor)
        V0 = random_configuration(2, 3, generator(5))
        caplog.set_level(logging.DEBUG, logger="src.optimizer.sphere_descent")
        descend_level(V0, Potential.pframe(2.0), _quick(max_iters=5))
        caplog.set_level(logging.WARNING, logger="src.optimizer.sphere_descent")
        descend_level(V0, Potential.pframe(2.0), _quick(max_iters=5))
        assert seen == [True, False]


class TestMinimize:
    def test_tight_frame_at_p2(self):
        result = minimize_energy(3, 4, Potential.pframe(2.0), _quick())
        assert isinstance(result, MinimizeResult)
        assert result.energy == approx(4.0 / 3.0, abs=1e-6)
        assert result.restarts_hitting_best() >= 1
        configuration, value, trace = result
        assert value == result.energy
        assert configuration.label == "minimize:pframe,p=2,d=3,N=4"

    def test_deterministic(self):
        f = Potential.pframe(1.3)
        first = minimize_energy(2, 4, f, _quick(restarts=3, max_iters=300))
        second = minimize_energy(2, 4, f, _quick(restarts=3, max_iters=300))
        assert first.energy == second.energy
        np.testing.assert_array_equal(first.configuration.vectors, second.configuration.vectors)

    def test_thread_count_does_not_matter(self):
        f = Potential.pframe(2.5)
        single = minimize_energy(3, 5, f, _quick(restarts=4, max_iters=300, threads=1))
        pooled = minimize_energy(3, 5, f, _quick(restarts=4, max_iters=300, threads=2))
        assert single.energy == pooled.energy
        assert single.restart_energies == pooled.restart_energies
        np.testing.assert_array_equal(single.configuration.vectors, pooled.configuration.vectors)

    def test_only_the_winning_trace_is_kept(self):
        f = Potential.pframe(2.0)
        opts = _quick(max_iters=300)
        result = minimize_energy(3, 4, f, opts)
        rng = restart_generators(opts.seed, opts.restarts)[result.best_restart]
        _, value, trace, _ = _run_restart(3, 4, f, opts, rng, record=True)
        assert value == result.restart_energies[result.best_restart]
        assert result.trace == trace
        assert len(trace) > 0
        _, _, untraced, _ = _run_restart(3, 4, f, opts, restart_generators(opts.seed, 1)[0])
        assert untraced is None

    def test_invalid_size(self):
        with pytest.raises(ValueError):
            minimize_energy(0, 3, Potential.pframe(1.0))

    @pytest.mark.slow
    @pytest.mark.parametrize("d,N", [(2, 3), (2, 4), (3, 4), (3, 6), (4, 6)])
    def test_repeated_basis_at_p1(self, d, N):
        result = minimize_energy(d, N, Potential.pframe(1.0), OptimizerOptions(restarts=64))
        assert result.energy == approx(2.0 * (N - d), abs=1e-6)
        assert is_repeated_onb(result.configuration)

    @pytest.mark.slow
    @pytest.mark.parametrize("d,N,p,optimum", [(2, 4, 1.0, 4.0), (3, 6, 2.0, 6.0), (2, 3, 3.0, 0.75)])
    def test_most_restarts_recover_the_optimum(self, d, N, p, optimum):
        result = minimize_energy(d, N, Potential.pframe(p), OptimizerOptions(restarts=64))
        hits = sum(1 for value in result.restart_energies if abs(value - optimum) <= 1e-6)
        assert hits >= 0.9 * len(result.restart_energies)

    @pytest.mark.slow
    def test_below_first_threshold(self):
        result = minimize_energy(3, 4, Potential.pframe(1.1))
        assert result.energy == approx(2.0, abs=1e-6)

    @pytest.mark.slow
    def test_mercedes_at_p3(self):
        result = minimize_energy(2, 3, Potential.pframe(3.0))
        assert result.energy == approx(0.75, abs=1e-6)
        assert is_etf(result.configuration, tol=1e-5)


class TestSweep:
    def test_simplex_is_optimal(self, tmp_path):
        result = sweep_p(2, 3, Potential.pframe(2.0), [2.0, 3.0], simplex(2), _quick())
        assert [row.p for row in result.rows] == [2.0, 3.0]
        for row in result.rows:
            assert abs(row.gap) <= 1e-6
            assert row.best_energy >= row.bound - 1e-6
        assert result.threshold is None
        assert result.rows[0].bound == approx(1.5)

        path = tmp_path / "sweep.csv"
        result.to_csv(path)
        assert path.read_text().splitlines()[0] == ",".join(SWEEP_COLUMNS)
        frame = pd.read_csv(path)
        assert list(frame["p"]) == [2.0, 3.0]

    @pytest.mark.slow
    def test_planar_bound(self):
        grid = [1.0, 1.05, 1.1, 1.15, 1.2, 1.25, 1.3]
        result = sweep_p(2, 5, Potential.pframe(1.0), grid, repeated_onb(2, 5))
        for row in result.rows:
            assert row.gap >= -1e-6
            assert row.construction_energy == 8.0

    @pytest.mark.parametrize("grid", [[2.0, 1.0], [0.0, 1.0], [1.0, 4.5]])
    def test_grid_validation(self, grid):
        with pytest.raises(ValueError):
            sweep_p(2, 3, Potential.pframe(1.0), grid, simplex(2), _quick())

    def test_shape_check(self):
        with pytest.raises(DimensionMismatchError):
            sweep_p(3, 4, Potential.pframe(1.0), [1.0], simplex(2), _quick())


class TestCompareConstructions:
    def _table(self, p):
        return compare_constructions(3, 4, Potential.pframe(p), [repeated_onb(3, 4), simplex(3)])

    def test_basis_first_at_p1(self):
        table = self._table(1.0)
        assert list(table["label"]) == ["onb:3x4", "hybrid:3,2", "simplex:3"]
        assert table["energy"].iloc[0] == approx(2.0)

    def test_simplex_first_at_p2(self):
        table = self._table(2.0)
        assert table["label"].iloc[0] == "simplex:3"
        assert table["energy"].iloc[0] == approx(4.0 / 3.0)

    def test_basis_strictly_best_at_p11(self):
        table = self._table(1.1)
        assert table["label"].iloc[0] == "onb:3x4"
        assert table["energy"].iloc[1] > table["energy"].iloc[0]

    def test_basis_beaten_at_p16(self):
        table = self._table(1.6)
        assert table["label"].iloc[0] == "hybrid:3,2"
        onb = table.loc[table["label"] == "onb:3x4", "energy"].item()
        assert table["energy"].iloc[0] < onb

    def test_no_hybrids_when_n_is_2d(self):
        table = compare_constructions(2, 4, Potential.pframe(1.7), [repeated_onb(2, 4)])
        assert len(table) == 1
        assert table["energy"].iloc[0] == approx(4.0)

    def test_shape_check(self):
        with pytest.raises(DimensionMismatchError):
            compare_constructions(3, 4, Potential.pframe(1.0), [simplex(2)])
