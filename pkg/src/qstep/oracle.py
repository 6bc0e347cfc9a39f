"""
Brute-force Numerov integration of psi'' = (V(x) - E) psi.

Shares nothing with the analytic module except the potential: no Gamma or
hypergeometric functions are used. The solution is seeded at the right edge
with the single outgoing wave exp(i ell x) (or exp(-kappa x) below the step),
integrated leftward, and projected onto exp(+-i k x) in the flat left region.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .analytic import AmplitudeSet, ScatteringState, WaveSample, coefficients
from .errors import IllConditioned, InvalidConfig, UnstableGrowth
from .model import Regime, kinematics, potential_value

__all__ = [
    "IntegrationConfig",
    "ComparisonReport",
    "integrate",
    "extract_amplitudes",
    "compare",
]

ASYMPTOTIC_MARGIN = 15.0
MAX_NODES = 10 ** 7
GROWTH_LIMIT = 1e12


@dataclass(frozen=True)
class IntegrationConfig:
    x_left: float
    x_right: float
    step: float = 1e-3

    def __post_init__(self):
        if not self.x_left < 0 < self.x_right:
            raise InvalidConfig("need x_left < 0 < x_right")
        if not self.step > 0:
            raise InvalidConfig("step must be positive")
        if (self.x_right - self.x_left) / self.step > MAX_NODES:
            raise InvalidConfig(f"more than {MAX_NODES} grid intervals")

    @classmethod
    def for_potential(cls, p, step=1e-3, margin=ASYMPTOTIC_MARGIN):
        """Symmetric window reaching delta*|x| = margin on both sides."""
        edge = margin / p.delta
        return cls(-edge, edge, step)

    def check(self, p):
        reach = p.delta * min(-self.x_left, self.x_right)
        # small slack so that for_potential() windows pass despite rounding
        if reach < ASYMPTOTIC_MARGIN * (1 - 1e-12):
            raise InvalidConfig(
                f"delta*|x| = {reach:.3g} at the window edge; need >= {ASYMPTOTIC_MARGIN}"
            )

    def grid(self):
        n = int(math.ceil((self.x_right - self.x_left) / self.step))
        # anchored at x_right so both seed nodes sit exactly on the right edge
        return self.x_right - self.step * np.arange(n, -1, -1)


def _fourth_order_derivative(y, h):
    # needs at least 6 nodes; one-sided five-point stencils at both ends
    d = np.empty_like(y)
    d[2:-2] = (y[:-4] - 8 * y[1:-3] + 8 * y[3:-1] - y[4:]) / (12 * h)
    for i in (0, 1):
        s = y[i:i + 5]
        d[i] = (-25 * s[0] + 48 * s[1] - 36 * s[2] + 16 * s[3] - 3 * s[4]) / (12 * h)
        s = y[len(y) - 1 - i - 4:len(y) - i][::-1]
        d[-1 - i] = -(-25 * s[0] + 48 * s[1] - 36 * s[2] + 16 * s[3] - 3 * s[4]) / (12 * h)
    return d


def integrate(p, energy, cfg):
    """
    Numerov solution on ``cfg.grid()``, seeded with unit transmitted amplitude.

    Returns
    -------
    WaveSample
        Ascending grid; the current uses a fourth-order central difference.

    Raises
    ------
    UnstableGrowth
        max|psi| exceeds 1e12 times the larger of 1 and the seed magnitude.
    """
    cfg.check(p)
    kin = kinematics(p, energy)
    x = cfg.grid()
    h = x[1] - x[0]
    f = potential_value(p, x) - kin.energy
    w = 1.0 - h * h * f / 12.0
    g = 2.0 + 10.0 * h * h * f / 12.0

    psi = np.empty(len(x), dtype=complex)
    if kin.above:
        psi[-2:] = np.exp(1j * kin.ell * x[-2:])
    else:
        psi[-2:] = np.exp(-kin.kappa * x[-2:])
    limit = GROWTH_LIMIT * max(1.0, float(np.max(np.abs(psi[-2:]))))

    wl = w.tolist()
    gl = g.tolist()
    out = psi.tolist()
    cur, nxt = out[-2], out[-1]
    for n in range(len(x) - 2, 0, -1):
        prev = (gl[n] * cur - wl[n + 1] * nxt) / wl[n - 1]
        if abs(prev) > limit:
            raise UnstableGrowth(f"|psi| = {abs(prev):.3g} at x = {x[n - 1]:.6g}")
        out[n - 1] = prev
        nxt, cur = cur, prev
    psi = np.array(out, dtype=complex)
    return WaveSample.from_values(x, psi, _fourth_order_derivative(psi, h))


def extract_amplitudes(sample, k, regime=Regime.ABOVE):
    """
    Project the left end of ``sample`` onto exp(i k x) and exp(-i k x).

    Uses the leftmost node and the node closest to a quarter wavelength to its
    right, then rescales to A = 1. D is the reciprocal of the raw incident
    amplitude, i.e. relative to the unit seed of ``integrate``.
    """
    x, psi = sample.x, sample.psi
    target = x[0] + 0.5 * math.pi / k
    j = int(np.clip(np.searchsorted(x, target), 1, len(x) - 1))
    x1, x2 = x[0], x[j]
    if abs(math.sin(k * (x2 - x1))) < 1e-3:
        raise IllConditioned(f"nodes {x1}, {x2} separated by a multiple of pi/k")
    m = np.array(
        [
            [cmath.exp(1j * k * x1), cmath.exp(-1j * k * x1)],
            [cmath.exp(1j * k * x2), cmath.exp(-1j * k * x2)],
        ]
    )
    a, b = np.linalg.solve(m, np.array([psi[0], psi[j]]))
    return AmplitudeSet(1 + 0j, complex(b / a), complex(1 / a), regime)


@dataclass(frozen=True)
class ComparisonReport:
    R_analytic: float
    R_numeric: float
    T_analytic: float
    T_numeric: float
    max_psi_deviation: float

    @property
    def dR(self):
        return abs(self.R_analytic - self.R_numeric)

    @property
    def dT(self):
        return abs(self.T_analytic - self.T_numeric)


def compare(p, energy, cfg, psi_points=201):
    """
    Numerov versus analytic R, T and psi.

    ``max_psi_deviation`` is max|psi_num - psi_exact| / max|psi_exact| over
    ``psi_points`` nodes spread across the integration window, both normalized
    to A = 1.
    """
    kin = kinematics(p, energy)
    sample = integrate(p, energy, cfg)
    amps = extract_amplitudes(sample, kin.k, kin.regime)
    r_num = abs(amps.B) ** 2
    t_num = kin.ell / kin.k * abs(amps.D) ** 2 if kin.above else 0.0
    exact = coefficients(kin)

    idx = np.unique(np.linspace(0, len(sample.x) - 1, psi_points).astype(int))
    state = ScatteringState(p, energy)
    ref = np.array([state(xi) for xi in sample.x[idx]])
    num = sample.psi[idx] * amps.D
    dev = float(np.max(np.abs(num - ref)) / np.max(np.abs(ref)))
    return ComparisonReport(exact.R, r_num, exact.T, t_num, dev)
