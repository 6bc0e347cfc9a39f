"""
Exact scattering solutions for the tanh step.

All amplitudes use unit incident amplitude, A = 1. Left of the origin the wave
is written as psi_inc + B psi_ref, right of it as D psi_trans, where each piece
is an elementary prefactor times a 2F1 evaluated at z = -exp(-2 delta |x|), so
the hypergeometric argument always stays in [-1, 0].

Below the step the same formulas hold with i*nu replaced by -kappa/(2 delta),
which selects the solution decaying as exp(-kappa x).
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import BelowRegime, DegenerateInput, OverflowGuard, SingularWronskian
from .model import Regime, hyp_mapping, kinematics
from .special import hyp2f1, hyp2f1_deriv, log_gamma

__all__ = [
    "AmplitudeSet",
    "Coefficients",
    "WaveSample",
    "ScatteringState",
    "amplitudes",
    "coefficients",
    "coefficients_gamma_form",
    "step_limit_coefficients",
    "step_limit_amplitudes",
    "psi_trans",
    "psi_inc",
    "psi_ref",
    "wavefunction",
    "wavefunction_with_derivative",
    "match_below",
    "density_scan",
]

# exact expressions are used for delta*|x| <= EXACT_WINDOW
EXACT_WINDOW = 50.0
# sinh ratios switch to log space above this argument
SINH_LOG_THRESHOLD = 30.0
WRONSKIAN_TOL = 1e-14


@dataclass(frozen=True)
class AmplitudeSet:
    """Incident, reflected and transmitted (or penetrating) amplitudes."""

    A: complex
    B: complex
    D: complex
    regime: Regime


@dataclass(frozen=True)
class Coefficients:
    R: float
    T: float


@dataclass
class WaveSample:
    """Wavefunction on a grid, with density |psi|^2 and current Im(conj(psi) psi')."""

    x: np.ndarray
    psi: np.ndarray
    density: np.ndarray
    current: np.ndarray

    @classmethod
    def from_values(cls, x, psi, dpsi):
        x = np.asarray(x, dtype=float)
        psi = np.asarray(psi, dtype=complex)
        dpsi = np.asarray(dpsi, dtype=complex)
        return cls(x, psi, np.abs(psi) ** 2, np.imag(np.conj(psi) * dpsi))


def _log_gamma_ratio(num, den, lgamma):
    return sum(lgamma(z) for z in num) - sum(lgamma(z) for z in den)


def amplitudes(kin, lgamma=log_gamma):
    """
    Gamma-ratio amplitudes B and D for A = 1.

    With s = i*nu (above) or s = -kappa/(2 delta) (below)::

        B = G(2i mu) G(1 - i mu - s) G(-i mu - s) / [G(-2i mu) G(1 + i mu - s) G(i mu - s)]
        D = G(1 - i mu - s) G(-i mu - s) / [G(1 - 2s) G(-2i mu)]

    ``lgamma`` may be replaced (e.g. by a perturbed version for fault injection).
    """
    imu = 1j * kin.mu
    s = kin.i_nu
    if imu - s == 0:
        raise DegenerateInput("mu == nu: the step has zero height")
    log_d = _log_gamma_ratio((1 - imu - s, -imu - s), (1 - 2 * s, -2 * imu), lgamma)
    log_b = _log_gamma_ratio(
        (2 * imu, 1 - imu - s, -imu - s),
        (-2 * imu, 1 + imu - s, imu - s),
        lgamma,
    )
    return AmplitudeSet(1 + 0j, cmath.exp(log_b), cmath.exp(log_d), kin.regime)


def _sinh_ratio_sq(x, y):
    # (sinh x / sinh y)^2 for 0 <= x <= y, y > 0
    if y <= SINH_LOG_THRESHOLD:
        return (math.sinh(x) / math.sinh(y)) ** 2
    return math.exp(2.0 * (_log_sinh(x) - _log_sinh(y)))


def _log_sinh(x):
    return x + math.log(-math.expm1(-2.0 * x)) - math.log(2.0)


def coefficients(kin):
    """
    R and T from the hyperbolic closed forms.

    R = sinh^2 pi(mu - nu) / sinh^2 pi(mu + nu),
    T = sinh(2 pi mu) sinh(2 pi nu) / sinh^2 pi(mu + nu).
    Below the step (and at E = v0) R = 1 and T = 0.
    """
    if not kin.above or kin.nu == 0.0:
        return Coefficients(1.0, 0.0)
    pm = math.pi * abs(kin.mu - kin.nu)
    pp = math.pi * (kin.mu + kin.nu)
    r = _sinh_ratio_sq(pm, pp)
    if pp <= SINH_LOG_THRESHOLD:
        t = math.sinh(2 * math.pi * kin.mu) * math.sinh(2 * math.pi * kin.nu) / math.sinh(pp) ** 2
    else:
        t = math.exp(
            _log_sinh(2 * math.pi * kin.mu) + _log_sinh(2 * math.pi * kin.nu) - 2 * _log_sinh(pp)
        )
    return Coefficients(r, t)


def coefficients_gamma_form(kin, lgamma=log_gamma):
    """R = |B|^2 and T = (nu/mu)|D|^2 from the Gamma-ratio amplitudes."""
    if not kin.above or kin.nu == 0.0:
        raise BelowRegime("Gamma-form coefficients need E > v0")
    amps = amplitudes(kin, lgamma)
    return Coefficients(abs(amps.B) ** 2, kin.nu / kin.mu * abs(amps.D) ** 2)


def step_limit_coefficients(kin):
    """Abrupt-step values (k - ell)^2/(k + ell)^2 and 4 k ell/(k + ell)^2."""
    if not kin.above:
        return Coefficients(1.0, 0.0)
    k, ell = kin.k, kin.ell
    return Coefficients((k - ell) ** 2 / (k + ell) ** 2, 4 * k * ell / (k + ell) ** 2)


def step_limit_amplitudes(kin):
    """Abrupt-step amplitudes for A = 1; below the step D = 2k/(k + i kappa)."""
    k = kin.k
    q = kin.ell if kin.above else 1j * kin.kappa
    return AmplitudeSet(1 + 0j, (k - q) / (k + q), 2 * k / (k + q), kin.regime)


def _piece(s, q, a, b, c, x):
    # value and x-derivative of exp(s x) (1 + exp(q x)) 2F1(a, b; c; -exp(q x))
    e = math.exp(q * x)
    f = hyp2f1(a, b, c, -e)
    fp = hyp2f1_deriv(a, b, c, -e)
    pref = cmath.exp(s * x)
    value = pref * (1 + e) * f
    deriv = pref * ((s * (1 + e) + q * e) * f - q * e * (1 + e) * fp)
    return value, deriv


def psi_trans(kin, x):
    """Right-moving (or decaying) solution, normalized to exp(i ell x) as x -> +inf."""
    m = hyp_mapping(kin)
    return _piece(2 * kin.delta * kin.i_nu, -2 * kin.delta, m.a, m.b, m.c, x)


def psi_inc(kin, x):
    """Incident solution, exp(i k x) as x -> -inf."""
    imu, s = 1j * kin.mu, kin.i_nu
    return _piece(1j * kin.k, 2 * kin.delta, 1 + imu - s, 1 + imu + s, 1 + 2 * imu, x)


def psi_ref(kin, x):
    """Reflected solution, exp(-i k x) as x -> -inf."""
    imu, s = 1j * kin.mu, kin.i_nu
    return _piece(-1j * kin.k, 2 * kin.delta, 1 - imu - s, 1 - imu + s, 1 - 2 * imu, x)


class ScatteringState:
    """
    Stationary state for a wave incident from the left with unit amplitude.

    Parameters
    ----------
    p : StepPotential
    energy : float
    asymptotic : bool
        Substitute plane-wave / exponential forms for delta*|x| > 50. When False,
        such positions raise OverflowGuard.
    """

    def __init__(self, p, energy, asymptotic=True):
        self.potential = p
        self.kin = kinematics(p, energy)
        self.amps = amplitudes(self.kin)
        self.asymptotic = asymptotic

    def _far(self, x):
        kin, amps = self.kin, self.amps
        if x > 0:
            if kin.above:
                w = amps.D * cmath.exp(1j * kin.ell * x)
                return w, 1j * kin.ell * w
            w = amps.D * math.exp(-kin.kappa * x)
            return w, -kin.kappa * w
        inc = cmath.exp(1j * kin.k * x)
        ref = amps.B / inc
        return inc + ref, 1j * kin.k * (inc - ref)

    def evaluate(self, x):
        """Return (psi(x), psi'(x))."""
        x = float(x)
        if abs(x) * self.kin.delta > EXACT_WINDOW:
            if not self.asymptotic:
                raise OverflowGuard(f"|x| = {abs(x)} beyond {EXACT_WINDOW}/delta")
            return self._far(x)
        if x >= 0:
            v, d = psi_trans(self.kin, x)
            return self.amps.D * v, self.amps.D * d
        vi, di = psi_inc(self.kin, x)
        vr, dr = psi_ref(self.kin, x)
        b = self.amps.B
        return vi + b * vr, di + b * dr

    def __call__(self, x):
        return self.evaluate(x)[0]

    def sample(self, x):
        values = [self.evaluate(xi) for xi in np.asarray(x, dtype=float)]
        psi = [v for v, _ in values]
        dpsi = [d for _, d in values]
        return WaveSample.from_values(x, psi, dpsi)


def wavefunction(p, energy, x, asymptotic=True):
    return ScatteringState(p, energy, asymptotic)(x)


def wavefunction_with_derivative(p, energy, x, asymptotic=True):
    """(psi(x), psi'(x)); the derivative uses the contiguous 2F1 shift, not differencing."""
    return ScatteringState(p, energy, asymptotic).evaluate(x)


def match_below(p, energy):
    """
    B and D below the step from continuity of psi and psi' at the origin.

    Independent of the Gamma-ratio route: only 2F1 values and derivatives at
    z = -1 enter.
    """
    kin = kinematics(p, energy)
    if kin.above:
        raise ValueError("match_below needs E < v0")
    inc, dinc = psi_inc(kin, 0.0)
    ref, dref = psi_ref(kin, 0.0)
    kap, dkap = psi_trans(kin, 0.0)
    den_d = kap * dref - dkap * ref
    if abs(den_d) < WRONSKIAN_TOL:
        raise SingularWronskian(f"denominator {den_d!r} at E = {energy}")
    d = (inc * dref - dinc * ref) / den_d
    b = (kap * dinc - dkap * inc) / -den_d
    return AmplitudeSet(1 + 0j, b, d, kin.regime)


def density_scan(p, energy, x_min, x_max, n):
    """psi, |psi|^2 and current on a uniform grid of n points, A = 1."""
    if not x_min < x_max:
        raise ValueError("x_min must be < x_max")
    if n < 2:
        raise ValueError("need at least 2 samples")
    return ScatteringState(p, energy).sample(np.linspace(x_min, x_max, int(n)))
