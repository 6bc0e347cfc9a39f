"""Scattering off the deformable tanh step potential, exact and numerical."""

from .analytic import (
    AmplitudeSet,
    Coefficients,
    ScatteringState,
    WaveSample,
    amplitudes,
    coefficients,
    coefficients_gamma_form,
    density_scan,
    match_below,
    step_limit_amplitudes,
    step_limit_coefficients,
    wavefunction,
    wavefunction_with_derivative,
)
from .model import HypMapping, Kinematics, Regime, StepPotential, hyp_mapping, kinematics, potential_value
from .oracle import IntegrationConfig, compare, extract_amplitudes, integrate
from .special import gamma_abs_sq_one_plus_i_eta, hyp2f1, hyp2f1_deriv, hyp2f1_series, log_gamma

__version__ = "0.1.0"
