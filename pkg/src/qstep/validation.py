"""
Cross-checks behind ``qstep validate``.

Each check returns a :class:`Check` holding the worst observed error and the
tolerance it is held to. ``lgamma`` can be swapped for a perturbed log-Gamma to
confirm that the checks actually catch a broken special function.
"""

import math
import time
from dataclasses import dataclass

import numpy as np

from .analytic import (
    ScatteringState,
    amplitudes,
    coefficients,
    coefficients_gamma_form,
    match_below,
    psi_trans,
    step_limit_amplitudes,
    step_limit_coefficients,
)
from .model import StepPotential, kinematics
from .oracle import IntegrationConfig, compare
from .special import gamma_abs_sq_one_plus_i_eta, hyp2f1, log_gamma

ABOVE_DELTAS = (0.5, 1.0, 2.0, 10.0)
ABOVE_RATIOS = (1.01, 1.1, 1.5, 2.0, 3.0, 5.0)
BELOW_DELTAS = (0.5, 10.0)
BELOW_RATIOS = (0.1, 0.2, 0.5, 0.9, 0.999)
ORACLE_DELTAS = (0.5, 1.0, 2.0)
ORACLE_RATIOS = (0.25, 0.5, 0.9, 1.2, 2.0, 4.0)


@dataclass(frozen=True)
class Check:
    name: str
    error: float
    tolerance: float
    detail: str = ""

    @property
    def passed(self):
        return bool(self.error <= self.tolerance)


def perturbed_log_gamma(eps):
    """log Gamma evaluated at z + eps; a deliberate fault for self-tests."""
    return lambda z: log_gamma(z + eps)


def check_unitarity(v0=1.0, lgamma=log_gamma):
    worst = 0.0
    for d in ABOVE_DELTAS:
        p = StepPotential(v0, d)
        for r in ABOVE_RATIOS:
            kin = kinematics(p, r * v0)
            for c in (coefficients(kin), coefficients_gamma_form(kin, lgamma)):
                worst = max(worst, abs(c.R + c.T - 1.0))
    return Check("unitarity R+T=1", worst, 1e-10)


def check_total_reflection(v0=1.0, lgamma=log_gamma):
    worst = 0.0
    for d in BELOW_DELTAS:
        p = StepPotential(v0, d)
        for r in BELOW_RATIOS:
            kin = kinematics(p, r * v0)
            c = coefficients(kin)
            worst = max(worst, abs(c.R - 1.0), abs(c.T))
            worst = max(worst, abs(abs(amplitudes(kin, lgamma).B) ** 2 - 1.0))
            worst = max(worst, abs(abs(match_below(p, r * v0).B) ** 2 - 1.0))
    return Check("total reflection |R-1| below step", worst, 1e-10)


def check_dual_form(v0=1.0, lgamma=log_gamma):
    worst = 0.0
    for d in ABOVE_DELTAS:
        p = StepPotential(v0, d)
        for r in ABOVE_RATIOS:
            kin = kinematics(p, r * v0)
            s, g = coefficients(kin), coefficients_gamma_form(kin, lgamma)
            worst = max(worst, abs(s.R - g.R) / s.R, abs(s.T - g.T) / s.T)
    return Check("sinh vs Gamma form (relative)", worst, 1e-10)


def check_oracle(v0=1.0, step=1e-3, budget=60.0):
    start = time.perf_counter()
    worst = 0.0
    for d in ORACLE_DELTAS:
        p = StepPotential(v0, d)
        cfg = IntegrationConfig.for_potential(p, step)
        for r in ORACLE_RATIOS:
            worst = max(worst, compare(p, r * v0, cfg).dR)
    elapsed = time.perf_counter() - start
    return (
        Check("Numerov vs analytic R", worst, 1e-6),
        Check("Numerov grid runtime [s]", elapsed, budget),
    )


def connection_error(p, energy, n=81):
    """Max relative gap between D psi_trans and psi_inc + B psi_ref on [-2/delta, 0)."""
    state = ScatteringState(p, energy)
    worst = 0.0
    for x in np.linspace(-2.0 / p.delta, 0.0, n, endpoint=False):
        left = state(x)
        right = state.amps.D * psi_trans(state.kin, x)[0]
        worst = max(worst, abs(left - right) / abs(left))
    return worst


def check_connection(v0=1.0):
    worst = 0.0
    for d in (0.5, 1.0, 2.0, 10.0):
        for r in (0.5, 1.0, 2.0, 4.0):
            worst = max(worst, connection_error(StepPotential(v0, d), r * v0))
    return Check("connection formula end-to-end", worst, 1e-8)


def check_step_limit_above(v0=1.0):
    kin = kinematics(StepPotential(v0, 50.0), 2.0 * v0)
    return Check(
        "step limit R (delta=50)",
        abs(coefficients(kin).R - step_limit_coefficients(kin).R),
        1e-3,
    )


def check_step_limit_below(v0=1.0):
    kin = kinematics(StepPotential(v0, 50.0), 0.5 * v0)
    d = match_below(StepPotential(v0, 50.0), 0.5 * v0).D
    return Check(
        "step limit D below (delta=50)",
        abs(d - step_limit_amplitudes(kin).D),
        1e-2,
    )


def random_below_draws(n=10, seed=20171):
    rng = np.random.default_rng(seed)
    for _ in range(n):
        v0 = float(rng.uniform(0.2, 5.0))
        delta = float(rng.uniform(0.3, 10.0))
        energy = float(rng.uniform(0.02, 0.98)) * v0
        yield StepPotential(v0, delta), energy


def check_continuity(lgamma=log_gamma):
    worst = 0.0
    for p, e in random_below_draws():
        b_gamma = amplitudes(kinematics(p, e), lgamma).B
        worst = max(worst, abs(match_below(p, e).B - b_gamma))
    return Check("continuity vs Gamma-form B below", worst, 1e-8)


def ode_residual(p, energy, x_min=-4.0, x_max=4.0, h=1e-3):
    """max |psi'' + (E - V) psi| / max |psi| with a centered second difference."""
    x = np.arange(int(round((x_max - x_min) / h)) + 1) * h + x_min
    state = ScatteringState(p, energy)
    psi = np.array([state(xi) for xi in x])
    lap = (psi[2:] - 2 * psi[1:-1] + psi[:-2]) / h ** 2
    res = lap + (energy - p(x[1:-1])) * psi[1:-1]
    return float(np.max(np.abs(res)) / np.max(np.abs(psi)))


def check_ode_residual(v0=1.0):
    cases = ((1.0, 2.0), (10.0, 1.5), (0.5, 0.9), (10.0, 0.5))
    worst = max(ode_residual(StepPotential(v0, d), r * v0) for d, r in cases)
    return Check("ODE residual / max|psi|", worst, 1e-4)


def check_figure_shapes(v0=1.0):
    rs = [coefficients(kinematics(StepPotential(v0, d), 2.0 * v0)).R for d in ABOVE_DELTAS]
    rs.append(step_limit_coefficients(kinematics(StepPotential(v0, 1.0), 2.0 * v0)).R)
    ordered = all(a < b for a, b in zip(rs, rs[1:]))
    sample = ScatteringState(StepPotential(v0, 0.5), 0.9 * v0).sample(np.linspace(-10, 10, 2001))
    x_peak = float(sample.x[np.argmax(sample.density)])
    failures = (not ordered) + (x_peak <= 0)
    return Check("R ordering in delta; density peak at x>0", float(failures), 0.0, f"x*={x_peak:.3f}")


def check_golden():
    errs = (
        abs(hyp2f1(1, 1, 2, -1) - math.log(2.0)) / 1e-12,
        abs(hyp2f1(0.5, 0.25, 0.25, -3) - 0.5) / 1e-10,
        abs(math.exp(2 * log_gamma(1 + 1j).real) - math.pi / math.sinh(math.pi)) / 1e-12,
        abs(gamma_abs_sq_one_plus_i_eta(1.0) - math.pi / math.sinh(math.pi)) / 1e-12,
    )
    return Check("special-function golden values (err/tol)", max(errs), 1.0)


def run_checks(perturb_gamma=0.0, below_only=False):
    lgamma = perturbed_log_gamma(perturb_gamma) if perturb_gamma else log_gamma
    if below_only:
        return [
            check_total_reflection(lgamma=lgamma),
            check_continuity(lgamma),
            check_step_limit_below(),
        ]
    return [
        check_golden(),
        check_unitarity(lgamma=lgamma),
        check_total_reflection(lgamma=lgamma),
        check_dual_form(lgamma=lgamma),
        check_connection(),
        check_step_limit_above(),
        check_step_limit_below(),
        check_continuity(lgamma),
        check_ode_residual(),
        check_figure_shapes(),
        *check_oracle(),
    ]
