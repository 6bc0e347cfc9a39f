"""
Complex log-Gamma and the Gauss hypergeometric function on the negative real axis.

Only what the tanh-step scattering solutions need is provided: ``log_gamma`` for
arbitrary complex arguments and ``hyp2f1`` for complex parameters with real
``z <= 0``. The continuation strategy is staged by ``z``:

* ``-0.5 <= z <= 0``  direct power series
* ``-1 <= z < -0.5``  Pfaff transformation to ``w = z/(z-1)`` in ``[1/3, 1/2]``
* ``z < -1``          connection formula to ``1/z``, then one of the above
"""

import cmath
import math

from .errors import (
    DegenerateParameters,
    DomainError,
    InvalidC,
    NoConvergence,
    NonFiniteResult,
    PoleError,
)

__all__ = [
    "log_gamma",
    "gamma",
    "gamma_abs_sq_one_plus_i_eta",
    "hyp2f1_series",
    "hyp2f1",
    "hyp2f1_deriv",
]

POLE_TOL = 1e-12
SERIES_RTOL = 1e-16
SERIES_MAX_TERMS = 10000
DEGENERATE_TOL = 1e-10

# Lanczos approximation, g = 7, nine coefficients
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def _near_nonpositive_integer(z, tol=POLE_TOL):
    z = complex(z)
    if abs(z.imag) > tol or z.real > tol:
        return False
    return abs(z.real - round(z.real)) <= tol


def _check_finite(value, what):
    if not cmath.isfinite(value):
        raise NonFiniteResult(f"{what} evaluated to {value!r}")
    return value


def _lanczos_log_gamma(z):
    # valid for Re(z) >= 0.5
    w = z - 1.0
    s = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        s += _LANCZOS_COEFFS[i] / (w + i)
    t = w + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (w + 0.5) * cmath.log(t) - t + cmath.log(s)


def log_gamma(z):
    """
    Principal branch of log Gamma(z) for complex z.

    The branch is the one analytic in the plane cut along the negative real
    axis, matching ``scipy.special.loggamma``. Arguments with Re(z) < 0.5 are
    shifted upward with ``log Gamma(z) = log Gamma(z + n) - sum log(z + j)``,
    which preserves that branch.

    Parameters
    ----------
    z : complex

    Returns
    -------
    complex

    Raises
    ------
    PoleError
        If z lies within 1e-12 of 0, -1, -2, ...
    """
    z = complex(z)
    if not cmath.isfinite(z):
        raise NonFiniteResult(f"log_gamma argument {z!r} is not finite")
    if _near_nonpositive_integer(z):
        raise PoleError(f"Gamma has a pole at {z!r}")
    if z.real >= 0.5:
        return _check_finite(_lanczos_log_gamma(z), "log_gamma")
    n = math.ceil(0.5 - z.real)
    shift = 0j
    for j in range(n):
        shift += cmath.log(z + j)
    return _check_finite(_lanczos_log_gamma(z + n) - shift, "log_gamma")


def gamma(z):
    """Gamma(z) as exp(log_gamma(z))."""
    return _check_finite(cmath.exp(log_gamma(z)), "gamma")


def gamma_abs_sq_one_plus_i_eta(eta):
    """
    |Gamma(1 + i*eta)|^2 = pi*eta / sinh(pi*eta) for real eta.

    Returns 1 at eta = 0 and stays finite for large |eta|.
    """
    x = math.pi * abs(float(eta))
    if x == 0.0:
        return 1.0
    if x < 1e-4:
        # sinh(x)/x series; avoids 0/0 style cancellation for tiny x
        return 1.0 / (1.0 + x * x / 6.0 + x ** 4 / 120.0)
    # x / sinh(x) = 2x e^{-x} / (1 - e^{-2x})
    return 2.0 * x * math.exp(-x) / -math.expm1(-2.0 * x)


def _check_c(c):
    if _near_nonpositive_integer(c):
        raise InvalidC(f"c = {c!r} is zero or a negative integer")


def hyp2f1_series(a, b, c, z):
    """
    Gauss series sum_n (a)_n (b)_n / ((c)_n n!) z^n.

    Intended for |z| <= 0.75; the caller enforces the convergence region.
    Terms come from the ratio recurrence and summation stops once a term drops
    below 1e-16 of the partial sum while the terms are shrinking.

    Raises
    ------
    InvalidC
        c is zero or a negative integer.
    NoConvergence
        10000 terms were summed without meeting the tolerance.
    """
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    _check_c(c)
    total = 1.0 + 0j
    term = 1.0 + 0j
    for n in range(SERIES_MAX_TERMS):
        ratio = (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
        term *= ratio
        total += term
        if term == 0 or (abs(term) < SERIES_RTOL * abs(total) and abs(ratio) < 1.0):
            return _check_finite(total, "hyp2f1_series")
    raise NoConvergence(
        f"2F1({a}, {b}; {c}; {z}) did not converge in {SERIES_MAX_TERMS} terms"
    )


def _pfaff(a, b, c, z):
    # 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1))
    w = z / (z - 1.0)
    return cmath.exp(-a * cmath.log(1.0 - z)) * hyp2f1_series(a, c - b, c, w)


def _log_rgamma_terms(den):
    # None if any denominator Gamma sits on a pole (reciprocal is zero)
    acc = 0j
    for arg in den:
        if _near_nonpositive_integer(arg):
            return None
        acc += log_gamma(arg)
    return acc


def _connection(a, b, c, z):
    """Continuation of 2F1 to z < -1 through 1/z."""
    d = a - b
    if abs(d.imag) <= DEGENERATE_TOL and abs(d.real - round(d.real)) <= DEGENERATE_TOL:
        raise DegenerateParameters(f"a - b = {d!r} is an integer")
    log_minus_z = math.log(-z.real)
    zinv = 1.0 / z
    log_gc = log_gamma(c)
    result = 0j
    for p, q in ((a, b), (b, a)):
        den = _log_rgamma_terms((q, c - p))
        if den is None:
            continue
        log_pref = log_gc + log_gamma(q - p) - den - p * log_minus_z
        result += cmath.exp(log_pref) * _hyp2f1_unit(p, 1.0 + p - c, 1.0 + p - q, zinv)
    return result


def _hyp2f1_unit(a, b, c, z):
    # -1 <= z <= 0
    if z >= -0.5:
        return hyp2f1_series(a, b, c, z)
    return _pfaff(a, b, c, z)


def _real_nonpositive(z):
    z = complex(z)
    if z.imag != 0.0 or not math.isfinite(z.real) or z.real > 0.0:
        raise DomainError(f"hyp2f1 supports real z <= 0 only, got {z!r}")
    return z.real


def hyp2f1(a, b, c, z):
    """
    Gauss hypergeometric function 2F1(a, b; c; z) for complex a, b, c and real z <= 0.

    Parameters
    ----------
    a, b, c : complex
        Parameters; c must not be zero or a negative integer.
    z : float
        Real argument, z <= 0.

    Returns
    -------
    complex

    Raises
    ------
    DegenerateParameters
        z < -1 and a - b is within 1e-10 of an integer.
    InvalidC, NoConvergence, DomainError
    """
    a, b, c = complex(a), complex(b), complex(c)
    x = _real_nonpositive(z)
    _check_c(c)
    if x >= -1.0:
        value = _hyp2f1_unit(a, b, c, x)
    else:
        value = _connection(a, b, c, x)
    return _check_finite(value, "hyp2f1")


def hyp2f1_deriv(a, b, c, z):
    """d/dz 2F1(a, b; c; z) = (a b / c) 2F1(a+1, b+1; c+1; z)."""
    a, b, c = complex(a), complex(b), complex(c)
    _check_c(c)
    ab = a * b
    if ab == 0:
        _real_nonpositive(z)
        return 0j
    return ab / c * hyp2f1(a + 1.0, b + 1.0, c + 1.0, z)
