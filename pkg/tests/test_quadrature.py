import math

import numpy as np
import pytest

from singlet_lhv import (
    DetectorSide,
    InvalidConfig,
    PatternKind,
    nonideal_probs,
    solve_params,
)
from singlet_lhv.quadrature import outcome_probabilities

SIN = PatternKind.SYMMETRIZED_SINUSOIDAL
LINE = PatternKind.SYMMETRIZED_STAIRCASE
UNSYM = PatternKind.UNSYMMETRIZED_SINUSOIDAL


class TestAgainstClosedForms:
    def test_sinusoidal_cells(self):
        p = solve_params(0.7, 0.8, SIN)
        pi = outcome_probabilities(p, 0.3, 0.3 + math.pi / 3.0)
        q = nonideal_probs(math.pi / 3.0, 0.7, 0.8, SIN)
        got = pi.prob_quad()
        np.testing.assert_allclose(got.as_tuple(), q.as_tuple(), rtol=0.0, atol=1e-9)

    def test_staircase_cells(self):
        p = solve_params(0.7, 0.8, LINE)
        pi = outcome_probabilities(p, 0.1, 2.1)
        q = nonideal_probs(2.0, 0.7, 0.8, LINE)
        np.testing.assert_allclose(
            pi.prob_quad().as_tuple(), q.as_tuple(), rtol=0.0, atol=1e-9
        )

    def test_marginals_and_mass(self):
        p = solve_params(0.7, 0.8, SIN)
        pi = outcome_probabilities(p, 0.3, 0.3 + math.pi / 3.0)
        assert pi.total() == pytest.approx(1.0, abs=1e-12)
        assert pi.coincidence() == pytest.approx(0.49, abs=1e-9)
        for side in (DetectorSide.ONE, DetectorSide.TWO):
            plus, minus, none = pi.marginal(side)
            assert plus == pytest.approx(0.35, abs=1e-9)
            assert minus == pytest.approx(0.35, abs=1e-9)
            assert none == pytest.approx(0.3, abs=1e-9)

    def test_angle_wraparound(self):
        p = solve_params(0.7, 0.8, SIN)
        pi = outcome_probabilities(p, 5.0, 5.0 + math.pi / 3.0 - 2.0 * math.pi)
        q = nonideal_probs(math.pi / 3.0, 0.7, 0.8, SIN)
        np.testing.assert_allclose(
            pi.prob_quad().as_tuple(), q.as_tuple(), rtol=0.0, atol=1e-9
        )

    def test_cell_symmetries(self):
        p = solve_params(0.6, 0.7, LINE)
        pi = outcome_probabilities(p, 0.0, 1.0)
        q = pi.prob_quad()
        assert q.p_pp == pytest.approx(q.p_mm, abs=1e-10)
        assert q.p_pm == pytest.approx(q.p_mp, abs=1e-10)


class TestUnsymmetrized:
    def setup_method(self):
        self.p = solve_params(0.7, 1.0, UNSYM)
        self.pi = outcome_probabilities(self.p, 0.0, math.pi / 3.0)

    def test_coincidence_cells(self):
        a = self.p.a
        ct = math.cos(math.pi / 3.0)
        scale = a / (2.0 * math.pi)
        assert self.pi.joint(1, 1) == pytest.approx(scale * (1.0 - ct), abs=1e-10)
        assert self.pi.joint(-1, -1) == pytest.approx(scale * (1.0 - ct), abs=1e-10)
        assert self.pi.joint(1, -1) == pytest.approx(scale * (1.0 + ct), abs=1e-10)
        assert self.pi.joint(-1, 1) == pytest.approx(scale * (1.0 + ct), abs=1e-10)

    def test_asymmetric_marginals(self):
        a, b = self.p.a, self.p.b
        plus1, minus1, none1 = self.pi.marginal(DetectorSide.ONE)
        assert plus1 == pytest.approx(a / math.pi, abs=1e-10)
        assert minus1 == pytest.approx(a / math.pi, abs=1e-10)
        assert none1 == pytest.approx(1.0 - 2.0 * a / math.pi, abs=1e-9)
        plus2, minus2, none2 = self.pi.marginal(DetectorSide.TWO)
        assert plus2 == pytest.approx(0.5 * b, abs=1e-10)
        assert minus2 == pytest.approx(0.5 * b, abs=1e-10)

    def test_station_one_never_fires_alone(self):
        # the core lies strictly inside the other station's detection band
        assert self.pi.joint(1, 0) == 0.0
        assert self.pi.joint(-1, 0) == 0.0

    def test_conditional_correlation_is_full(self):
        q = self.pi.prob_quad()
        corr = (q.p_pp - q.p_pm - q.p_mp + q.p_mm) / q.total()
        assert corr == pytest.approx(-math.cos(math.pi / 3.0), abs=1e-9)


class TestInterface:
    def setup_method(self):
        self.p = solve_params(0.7, 0.8, SIN)

    def test_table_shape(self):
        pi = outcome_probabilities(self.p, 0.0, 0.5, r_probes=64, gl_order=8)
        assert pi.table.shape == (3, 3)
        assert (pi.angle_1, pi.angle_2) == (0.0, 0.5)

    def test_marginal_accepts_plain_side_numbers(self):
        pi = outcome_probabilities(self.p, 0.0, 0.5, r_probes=64, gl_order=8)
        assert pi.marginal(1) == pi.marginal(DetectorSide.ONE)
        assert pi.marginal(2) == pi.marginal(DetectorSide.TWO)
        with pytest.raises(InvalidConfig):
            pi.marginal(3)

    def test_joint_rejects_bad_outcomes(self):
        pi = outcome_probabilities(self.p, 0.0, 0.5, r_probes=64, gl_order=8)
        with pytest.raises(InvalidConfig):
            pi.joint(2, 0)
        with pytest.raises(InvalidConfig):
            pi.joint(0, -2)

    def test_knob_validation(self):
        with pytest.raises(InvalidConfig):
            outcome_probabilities(self.p, 0.0, 0.5, r_probes=8)
        with pytest.raises(InvalidConfig):
            outcome_probabilities(self.p, 0.0, 0.5, gl_order=1)
        with pytest.raises(InvalidConfig):
            outcome_probabilities(self.p, 0.0, 0.5, bisect_iters=0)

    def test_coarse_knobs_still_close(self):
        pi = outcome_probabilities(self.p, 0.3, 0.3 + 1.0, r_probes=256, gl_order=10)
        q = nonideal_probs(1.0, 0.7, 0.8, SIN)
        np.testing.assert_allclose(
            pi.prob_quad().as_tuple(), q.as_tuple(), rtol=0.0, atol=1e-6
        )
