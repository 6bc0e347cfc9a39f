"""
Smooth step potential V(x) = (v0/2)(1 + tanh(delta x)) in units where hbar^2/2m = 1.

Energies and the barrier height are the reduced quantities 2mE/hbar^2 and
2mV0/hbar^2, so the Schrodinger equation reads psi'' = (V(x) - E) psi.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidPotential, NonPositiveEnergy

__all__ = [
    "Regime",
    "StepPotential",
    "Kinematics",
    "HypMapping",
    "potential_value",
    "kinematics",
    "hyp_mapping",
]


class Regime(enum.Enum):
    ABOVE = "above"
    BELOW = "below"


@dataclass(frozen=True)
class StepPotential:
    """Barrier height ``v0`` and deformation ``delta``; both strictly positive."""

    v0: float = 1.0
    delta: float = 1.0

    def __post_init__(self):
        for name in ("v0", "delta"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidPotential(f"{name} must be finite and > 0, got {value!r}")

    def __call__(self, x):
        return potential_value(self, x)


def potential_value(p, x):
    """(v0/2)(1 + tanh(delta x)); accepts floats or numpy arrays."""
    if np.ndim(x) == 0:
        return 0.5 * p.v0 * (1.0 + math.tanh(p.delta * float(x)))
    return 0.5 * p.v0 * (1.0 + np.tanh(p.delta * np.asarray(x, dtype=float)))


@dataclass(frozen=True)
class Kinematics:
    """
    Wavenumbers and reduced parameters at one energy.

    ``k = sqrt(E)`` on the left and ``mu = k / (2 delta)``. Above the step
    ``ell = sqrt(E - v0)`` and ``nu = ell / (2 delta)`` are set and ``kappa`` is 0;
    below the step only ``kappa = sqrt(v0 - E)`` is set.
    """

    energy: float
    delta: float
    regime: Regime
    k: float
    mu: float
    ell: float = 0.0
    nu: float = 0.0
    kappa: float = 0.0

    @property
    def above(self):
        return self.regime is Regime.ABOVE

    @property
    def i_nu(self):
        """
        The combination i*nu that enters every hypergeometric parameter.

        Below the step the decaying solution corresponds to i*nu = -kappa/(2 delta).
        """
        if self.above:
            return 1j * self.nu
        return complex(-self.kappa / (2.0 * self.delta))


def kinematics(p, energy):
    """
    Classify ``energy`` against the step and derive k, mu and ell, nu or kappa.

    ``energy == p.v0`` is treated as above the step with ``ell = nu = 0``.
    """
    energy = float(energy)
    if not (energy > 0 and math.isfinite(energy)):
        raise NonPositiveEnergy(f"energy must be finite and > 0, got {energy!r}")
    k = math.sqrt(energy)
    mu = k / (2.0 * p.delta)
    if energy >= p.v0:
        ell = math.sqrt(energy - p.v0)
        return Kinematics(energy, p.delta, Regime.ABOVE, k, mu, ell=ell, nu=ell / (2.0 * p.delta))
    kappa = math.sqrt(p.v0 - energy)
    return Kinematics(energy, p.delta, Regime.BELOW, k, mu, kappa=kappa)


@dataclass(frozen=True)
class HypMapping:
    """Exponents and 2F1 parameters of psi(y) = y^alpha (1-y)^beta F(y), y = -exp(-2 delta x)."""

    alpha: complex
    a: complex
    b: complex
    c: complex
    beta: float = 1.0


def hyp_mapping(kin):
    """
    Parameter bundle for the right-moving (or decaying) solution.

    Above: alpha = -i nu, a = 1 + i(mu - nu), b = 1 - i(mu + nu), c = 1 - 2 i nu.
    Below: alpha = kappa/(2 delta), a, b = 1 + kappa/(2 delta) +- i mu, c = 1 + kappa/delta.
    """
    alpha = -kin.i_nu
    imu = 1j * kin.mu
    return HypMapping(
        alpha=alpha,
        a=1.0 + alpha + imu,
        b=1.0 + alpha - imu,
        c=1.0 + 2.0 * alpha,
    )
