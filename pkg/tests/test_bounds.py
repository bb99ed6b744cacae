"""
Closed-form lower bounds, the auxiliary problem M(c, p, N) and row certificates.

    - p_threshold and F_m anchors: F_m(2m) = F_m(2m+1) = 2m at p = p_m
    - lemma2_bound reaches 2m at p = p_m and matches the frame bound at p = 2
    - mstar agrees with the exhaustive oracle on the 48-case grid
    - per-row certificates hold on random configurations and certify below the energy
"""

import math

import numpy as np
import pytest
from pytest import approx

from src.core.configuration import Configuration
from src.core.potential import Potential
from src.bounds.mstar import f_cp, inflection_point, mstar, mstar_oracle
from src.bounds.closed_form import (
    lemma2_bound, bound_theorem2, bound_proposition1, welch_bound, gerzon_bound,
    p_threshold, p_threshold_upper, F_m, g_j, fm_local_minimum, bound_theorem5, applicable_bounds,
)
from src.bounds.certificates import per_row_certificate, lemma2_certified_bound
from src.energy.potentials import energy
from src.frames.builders import repeated_onb, simplex, etf
from src.frames.gale import gale_dual, verify_gale
from src.frames.properties import gram
from src.utils.errors import (
    InfeasibleCError, TooLargeError, NotApplicableError, BadExponentError, MismatchedDualError, DomainError,
)

from .conftest import random_configuration

P1 = p_threshold(1)


class TestThresholds:
    def test_p1(self):
        assert P1 == approx(1.16993, abs=5e-6)
        assert P1 == approx(2.0 * (math.log(3) / math.log(2) - 1.0), rel=1e-14)

    def test_p2(self):
        assert p_threshold(2) == approx(1.100679, abs=1e-6)

    @pytest.mark.parametrize("m", range(1, 11))
    def test_below_upper_estimate(self, m):
        assert 1.0 < p_threshold(m) < p_threshold_upper(m)

    def test_invalid_m(self):
        with pytest.raises(ValueError):
            p_threshold(0)


class TestFm:
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_anchors(self, m):
        p = p_threshold(m)
        assert F_m(m, 2 * m, p) == approx(2 * m, rel=1e-12)
        assert F_m(m, 2 * m + 1, p) == approx(2 * m, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            F_m(2, 2.0, 1.0)

    @pytest.mark.parametrize("m", [1, 2, 5])
    def test_local_minimum(self, m):
        p = p_threshold(m)
        x = fm_local_minimum(m, p)
        assert 2 * m < x < 2 * m + 1
        assert x == approx(2 * m / (2.0 - p), rel=1e-6)

    def test_local_minimum_needs_p_below_two(self):
        with pytest.raises(BadExponentError):
            fm_local_minimum(1, 2.0)

    def test_g_j_identities(self):
        m, j, p = 2, 3, 1.3
        assert g_j(m, j, 1.0 / (j + 1), p) == approx(F_m(m, j + 1, p), rel=1e-12)
        assert g_j(m, j, 1.0 / j, p) == approx(F_m(m, j, p), rel=1e-12)


class TestClosedForm:
    def test_rank_bound(self):
        assert bound_theorem2(7, 4, 1.0) == approx(6.0)
        assert bound_theorem2(4, 4, 1.5) == 0.0
        assert bound_theorem2(5, 3, 1.5) == approx(3.50953, abs=1e-5)

    def test_rank_bound_from_tangent(self):
        N, d, p = 5, 3, 1.5
        c = 1.0 / (N - d)
        t0 = (2.0 - p) / (2.0 * (N - d))
        assert bound_theorem2(N, d, p) == approx(f_cp(c, p, t0) / t0, rel=1e-12)

    def test_rank_bound_small_p(self):
        assert bound_theorem2(6, 2, 0.5) == 8.0
        with pytest.raises(BadExponentError):
            bound_theorem2(6, 2, 2.0)

    def test_frame_bound(self):
        assert bound_proposition1(3, 2, 2.0) == approx(1.5)
        assert bound_proposition1(28, 7, 4.0) == approx(756.0 / 81.0)
        assert bound_proposition1(3, 3, 3.0) == 0.0
        with pytest.raises(BadExponentError):
            bound_proposition1(4, 2, 1.5)

    @pytest.mark.parametrize("d,N", [(2, 3), (3, 6), (7, 28)])
    @pytest.mark.parametrize("p", [2.0, 3.0, 4.0])
    def test_frame_bound_equality_on_etfs(self, d, N, p):
        assert energy(gram(etf(d, N)), Potential.pframe(p)).value == approx(bound_proposition1(N, d, p), abs=1e-9)

    def test_welch(self):
        assert welch_bound(3, 2) == approx(0.5)
        assert welch_bound(6, 3) == approx(1.0 / math.sqrt(5.0))
        assert welch_bound(3, 3) == 0.0

    def test_gerzon(self):
        assert gerzon_bound(3) == 6
        assert gerzon_bound(7, "real") == 28
        assert gerzon_bound(2, "complex") == 4
        with pytest.raises(ValueError):
            gerzon_bound(2, "quaternion")

    def test_planar_bound(self):
        assert bound_theorem5(4, 1.0) == 4.0
        assert bound_theorem5(5, 1.3) == 8.0
        assert bound_theorem5(1, 1.0) == 0.0
        with pytest.raises(BadExponentError):
            bound_theorem5(5, 1.31)

    def test_planar_bound_attained(self):
        for N in (4, 5, 6, 7):
            assert energy(gram(repeated_onb(2, N)), Potential.pframe(1.2)).value == bound_theorem5(N, 1.2)

    def test_applicable_bounds_keys(self):
        assert set(applicable_bounds(4, 3, 1.1)) == {"bound_theorem2", "lemma2_bound", "small_excess_bound"}
        assert set(applicable_bounds(5, 2, 1.3)) == {"bound_theorem2", "lemma2_bound", "bound_theorem5"}
        assert set(applicable_bounds(6, 3, 2.0)) == {"bound_proposition1", "lemma2_bound"}
        assert set(applicable_bounds(3, 3, 0.5)) == {"bound_theorem2"}


class TestAuxiliaryBound:
    @pytest.mark.parametrize("m,d", [(1, 2), (1, 3), (1, 5), (2, 3), (2, 5), (3, 4)])
    def test_sharp_at_threshold(self, m, d):
        p = p_threshold(m)
        assert lemma2_bound(d + m, d, p) == approx(2 * m, abs=1e-8)
        assert energy(gram(repeated_onb(d, d + m)), Potential.pframe(p)).value == 2 * m

    def test_frame_potential(self):
        assert lemma2_bound(6, 3, 2.0) == approx(6.0)
        assert lemma2_bound(6, 3, 2.0) == approx(bound_proposition1(6, 3, 2.0))

    def test_p_one(self):
        assert lemma2_bound(7, 4, 1.0) == approx(6.0)

    def test_above_two(self):
        # scaled by (N-1)^(1-p/2); must stay below the ETF value
        assert lemma2_bound(6, 3, 3.0) <= bound_proposition1(6, 3, 3.0) + 1e-9

    def test_errors(self):
        with pytest.raises(NotApplicableError):
            lemma2_bound(3, 3, 1.0)
        with pytest.raises(BadExponentError):
            lemma2_bound(5, 3, 0.5)

    @pytest.mark.parametrize("N,d", [(4, 3), (5, 3), (6, 4), (7, 3)])
    def test_dominates_rank_bound(self, N, d):
        for p in (1.0, 1.2, 1.5, 1.9):
            assert lemma2_bound(N, d, p) >= bound_theorem2(N, d, p) - 1e-9


class TestMStar:
    def test_at_p1(self):
        for N in (3, 4, 6):
            solution = mstar(1.0, P1, N)
            assert solution.value == approx(2.0, abs=1e-9)
            assert solution.family.name == "equal_split"
            assert solution.family.k in (2, 3)

    def test_equal_split_of_four(self):
        solution = mstar(0.5, 1.0, 5)
        assert solution.value == approx(4.0)
        assert (solution.family.name, solution.family.k) == ("equal_split", 4)

    @pytest.mark.parametrize("c,N", [(0.5, 4), (1.0 / 3.0, 6), (1.0, 3)])
    def test_frame_potential_closed_form(self, c, N):
        solution = mstar(c, 2.0, N)
        assert solution.value == approx(N / (N * c - 1.0))
        assert solution.family.k == N

    def test_weights(self):
        solution = mstar(0.4, 1.3, 6)
        assert solution.weights.sum() == approx(1.0)
        assert np.all(solution.weights >= 0.0)
        assert np.all(solution.weights < 0.4)
        assert float(np.sum(f_cp(0.4, 1.3, solution.weights))) == approx(solution.value, rel=1e-9)

    def test_infeasible(self):
        with pytest.raises(InfeasibleCError):
            mstar(0.2, 1.0, 5)

    def test_small_p_is_flagged(self):
        solution = mstar(0.5, 0.7, 5)
        assert solution.flagged
        assert solution.value <= mstar_oracle(0.5, 0.7, 5) + 1e-9

    def test_inflection(self):
        assert inflection_point(1.0, 1.0) == 0.25
        assert inflection_point(0.5, 2.0) == 0.0


class TestOracle:
    def test_examples(self):
        assert mstar_oracle(1.0, 1.5, 4) == approx(mstar(1.0, 1.5, 4).value, abs=1e-6)
        assert mstar_oracle(0.5, 2.0, 4) == approx(4.0, abs=1e-6)
        assert mstar_oracle(1.0, 1.0, 2) == approx(2.0, abs=1e-6)

    def test_too_large(self):
        with pytest.raises(TooLargeError):
            mstar_oracle(1.0, 1.0, 9)

    def test_grid_equivalence(self):
        cases = 0
        for c in (1.0, 0.5, 1.0 / 3.0):
            for p in (1.0, 1.17, 1.5, 2.0):
                for N in range(2, 7):
                    if c * N <= 1.0:
                        continue
                    cases += 1
                    assert mstar(c, p, N).value == approx(mstar_oracle(c, p, N), abs=1e-6), (c, p, N)
        assert cases == 48


class TestCertificates:
    def test_doubled_vector(self):
        X = Configuration(np.array([[1.0, 1.0, 0.0], [0.0, 0.0, 1.0]]))
        A = gram(X)
        G = gale_dual(A, 2)
        np.testing.assert_allclose(G.weights, [0.5, 0.5, 0.0], atol=1e-12)
        np.testing.assert_allclose(per_row_certificate(A, G, 1.0), 0.0, atol=1e-10)

    def test_simplex(self):
        A = gram(simplex(2))
        residuals = per_row_certificate(A, gale_dual(A, 2), 1.0)
        np.testing.assert_allclose(residuals, 1.0 - math.sqrt(0.5), atol=1e-10)

    def test_random(self, rng):
        for d, N in [(2, 4), (3, 5), (3, 9), (5, 8), (8, 24)]:
            X = random_configuration(rng, d, N)
            A = gram(X)
            G = gale_dual(A, d)
            for p in (1.0, 1.5, 2.0, 3.0):
                assert np.all(per_row_certificate(A, G, p) >= -1e-8)
                assert lemma2_certified_bound(A, G, p) <= energy(A, Potential.pframe(p)).value + 1e-8

    @pytest.mark.slow
    def test_random_suite(self):
        rng = np.random.default_rng(77)
        for _ in range(200):
            d = int(rng.integers(2, 9))
            N = int(rng.integers(d + 1, 25))
            X = random_configuration(rng, d, N)
            A = gram(X)
            G = gale_dual(A, d)
            report = verify_gale(A, G)
            assert max(report.kernel_residual, report.tightness_residual, report.normalization_residual) <= 1e-8
            for p in (1.0, 1.5, 2.0, 3.0):
                assert np.min(per_row_certificate(A, G, p)) >= -1e-8, (d, N, p)
                assert lemma2_certified_bound(A, G, p) <= energy(A, Potential.pframe(p)).value + 1e-8

    def test_certified_above_auxiliary_bound(self, rng):
        X = random_configuration(rng, 3, 6)
        A = gram(X)
        G = gale_dual(A, 3)
        for p in (1.0, 1.5, 2.0):
            assert lemma2_certified_bound(A, G, p) >= lemma2_bound(6, 3, p) - 1e-8

    def test_mismatched(self, rng):
        A = gram(simplex(2))
        other = gale_dual(gram(Configuration(np.array([[1.0, 1.0, 0.0], [0.0, 0.0, 1.0]]))), 2)
        with pytest.raises(MismatchedDualError):
            per_row_certificate(A, other, 1.0)
        with pytest.raises(MismatchedDualError):
            per_row_certificate(gram(random_configuration(rng, 2, 4)), other, 1.0)

    def test_exponent(self):
        A = gram(simplex(2))
        with pytest.raises(BadExponentError):
            lemma2_certified_bound(A, gale_dual(A, 2), 0.5)
