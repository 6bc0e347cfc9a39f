import numpy as np
import pytest

from qstep.analytic import WaveSample, coefficients
from qstep.errors import IllConditioned, InvalidConfig, UnstableGrowth
from qstep.model import StepPotential, kinematics
from qstep.oracle import IntegrationConfig, compare, extract_amplitudes, integrate


def synthetic(k, b, x=None):
    x = np.linspace(-40, -30, 2001) if x is None else x
    psi = np.exp(1j * k * x) + b * np.exp(-1j * k * x)
    return WaveSample.from_values(x, psi, 1j * k * (np.exp(1j * k * x) - b * np.exp(-1j * k * x)))


class TestConfig:
    def test_for_potential(self):
        cfg = IntegrationConfig.for_potential(StepPotential(1.0, 0.5))
        assert cfg.x_left == -30 and cfg.x_right == 30
        cfg.check(StepPotential(1.0, 0.5))

    @pytest.mark.parametrize("args", [(1, 2, 0.1), (-2, -1, 0.1), (-1, 1, 0.0), (-1e4, 1e4, 1e-4)])
    def test_invalid(self, args):
        with pytest.raises(InvalidConfig):
            IntegrationConfig(*args)

    def test_window_too_narrow(self):
        with pytest.raises(InvalidConfig):
            IntegrationConfig(-10, 10).check(StepPotential(1.0, 1.0))

    def test_grid_ends(self):
        g = IntegrationConfig(-15, 15, 0.01).grid()
        assert g[-1] == 15 and g[0] <= -15
        assert np.allclose(np.diff(g), 0.01)


class TestExtract:
    def test_pure_incident(self):
        a = extract_amplitudes(synthetic(1.3, 0), 1.3)
        assert abs(a.A - 1) < 1e-12 and abs(a.B) < 1e-12

    def test_superposition(self):
        a = extract_amplitudes(synthetic(0.8, 0.3j), 0.8)
        assert abs(a.B - 0.3j) < 1e-12

    def test_ill_conditioned(self):
        # two nodes exactly one half wavelength apart
        k = 1.0
        x = np.array([-40.0, -40.0 + np.pi])
        with pytest.raises(IllConditioned):
            extract_amplitudes(synthetic(k, 0.2, x), k)


class TestIntegrate:
    def test_free_particle_surrogate(self):
        p = StepPotential(1e-12, 1.0)
        s = integrate(p, 2.0, IntegrationConfig.for_potential(p))
        assert abs(extract_amplitudes(s, np.sqrt(2.0)).B) ** 2 < 1e-9

    def test_matches_analytic(self):
        p = StepPotential(1.0, 1.0)
        rep = compare(p, 2.0, IntegrationConfig.for_potential(p, 1e-3))
        assert rep.dR <= 1e-6
        assert rep.dT <= 1e-6
        assert rep.max_psi_deviation < 1e-6

    def test_below_total_reflection(self):
        p = StepPotential(1.0, 1.0)
        s = integrate(p, 0.5, IntegrationConfig.for_potential(p))
        assert abs(abs(extract_amplitudes(s, np.sqrt(0.5)).B) - 1) < 1e-6

    def test_end_to_end_delta_2(self):
        p = StepPotential(1.0, 2.0)
        s = integrate(p, 3.0, IntegrationConfig.for_potential(p))
        b = extract_amplitudes(s, np.sqrt(3.0)).B
        assert abs(abs(b) ** 2 - coefficients(kinematics(p, 3.0)).R) < 1e-6

    def test_current_constant(self):
        p = StepPotential(1.0, 0.5)
        s = integrate(p, 1.5, IntegrationConfig.for_potential(p))
        assert np.ptp(s.current) <= 1e-6 * abs(s.current.mean())

    def test_unstable_growth(self):
        # h^2 k^2 far beyond the Numerov stability bound
        p = StepPotential(1.0, 1.0)
        with pytest.raises(UnstableGrowth):
            integrate(p, 1000.0, IntegrationConfig(-15, 15, 0.5))


class TestCompare:
    @pytest.mark.parametrize("delta", [0.5, 1.0, 2.0])
    @pytest.mark.parametrize("ratio", [1.2, 2.0, 4.0])
    def test_figure6_grid(self, delta, ratio):
        p = StepPotential(1.0, delta)
        assert compare(p, ratio, IntegrationConfig.for_potential(p)).dR <= 1e-6

    @pytest.mark.parametrize("ratio", [0.25, 0.9])
    def test_below(self, ratio):
        p = StepPotential(1.0, 1.0)
        rep = compare(p, ratio, IntegrationConfig.for_potential(p))
        assert rep.T_numeric == 0.0
        assert rep.R_numeric - 1 <= 1e-6

    def test_fourth_order(self):
        p = StepPotential(1.0, 1.0)
        errs = [compare(p, 2.0, IntegrationConfig.for_potential(p, h)).dR for h in (0.08, 0.04, 0.02)]
        assert errs[0] / errs[1] > 8 and errs[1] / errs[2] > 8

    def test_step_halving_at_fine_steps(self):
        p = StepPotential(1.0, 1.0)
        coarse = compare(p, 2.0, IntegrationConfig.for_potential(p, 2e-3)).dR
        fine = compare(p, 2.0, IntegrationConfig.for_potential(p, 1e-3)).dR
        # at these steps the truncation error is already below double-precision noise
        if coarse > 1e-10:
            assert coarse / fine >= 8
        assert fine <= 1e-6
