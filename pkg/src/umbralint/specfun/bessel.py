"""Bessel-type functions from their power series.

Every evaluator takes a scalar or an ndarray ``x`` and returns the same
shape. These are small-to-moderate argument routines: the series loses
roughly ``exp(x) * eps`` absolute accuracy to cancellation, so callers that
need large arguments (the quadrature oracle) switch to asymptotics.
"""
from __future__ import annotations

import math

import numpy as np

from ..errors import DomainError, IntegerOrderError
from .gamma import EULER_GAMMA, harmonic, is_integer, pole_order, rgamma
from .series import DEFAULT_CONFIG, inv_factorial, power_series

#: orders closer than this to an integer are refused by the noninteger formulas
INTEGER_ORDER_TOL = 1e-8


def _out(x, value):
    value = np.real(value)
    return float(value) if np.ndim(x) == 0 else value


def _check_positive(x, name):
    if np.any(np.asarray(x) <= 0):
        raise DomainError(f"{name} needs x > 0")


def _start(nu):
    m = pole_order(nu + 1)
    return 0 if m is None else m + 1


def _bessel_series(nu, x, sign, cfg):
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise DomainError("Bessel series need x >= 0")
    if nu < 0 and not is_integer(nu) and np.any(x == 0):
        raise DomainError(f"order {nu} is singular at x = 0")
    half = x / 2
    total, _ = power_series(
        lambda k: sign**k * rgamma(k + nu + 1) * inv_factorial(k), half**2, cfg, _start(nu)
    )
    with np.errstate(divide="ignore"):
        return np.real(total) * half**nu


def bessel_i(nu, x, cfg=DEFAULT_CONFIG):
    """Modified Bessel function of the first kind, sum (x/2)^(2k+nu) / (k! Gamma(k+nu+1))."""
    return _out(x, _bessel_series(nu, x, 1, cfg))


def bessel_j(nu, x, cfg=DEFAULT_CONFIG):
    """Bessel function of the first kind; the alternating twin of :func:`bessel_i`."""
    return _out(x, _bessel_series(nu, x, -1, cfg))


def bessel_k0(x, cfg=DEFAULT_CONFIG):
    """Macdonald function of order zero from its harmonic-number series.

    K_0(x) = -(gamma + ln(x/2)) I_0(x) + sum_{k>=1} h_k (x/2)^(2k) / (k!)^2
    """
    _check_positive(x, "bessel_k0")
    x = np.asarray(x, dtype=float)
    t = (x / 2) ** 2
    tail, _ = power_series(lambda k: harmonic(k) * inv_factorial(k) ** 2, t, cfg)
    i0 = _bessel_series(0, x, 1, cfg)
    return _out(x, -(EULER_GAMMA + np.log(x / 2)) * i0 + np.real(tail))


def _noninteger(nu, name):
    if abs(nu - round(nu)) <= INTEGER_ORDER_TOL:
        raise IntegerOrderError(
            f"{name} needs a noninteger order, got {nu}; use the order-zero routine "
            f"or the epsilon-limit helper"
        )


def bessel_k(nu, x, cfg=DEFAULT_CONFIG):
    """Macdonald function of noninteger order, (pi/2) (I_{-nu} - I_nu) / sin(nu pi)."""
    _noninteger(nu, "bessel_k")
    _check_positive(x, "bessel_k")
    value = _bessel_series(-nu, x, 1, cfg) - _bessel_series(nu, x, 1, cfg)
    return _out(x, 0.5 * math.pi * value / math.sin(nu * math.pi))


def bessel_y(nu, x, cfg=DEFAULT_CONFIG):
    """Neumann function of noninteger order, (cos(nu pi) J_nu - J_{-nu}) / sin(nu pi)."""
    _noninteger(nu, "bessel_y")
    _check_positive(x, "bessel_y")
    value = math.cos(nu * math.pi) * _bessel_series(nu, x, -1, cfg) - _bessel_series(-nu, x, -1, cfg)
    return _out(x, value / math.sin(nu * math.pi))


def bessel_y0(x, cfg=DEFAULT_CONFIG):
    """Neumann function of order zero through the logarithmic umbral action.

    Y_0(x) = (2/pi) [ln(x/2) J_0(x) + sum_k (-1)^k (x/2)^(2k)/k! * (c^k ln c) phi(0)]
    """
    from ..umbral import umbral_exp_eval

    _check_positive(x, "bessel_y0")
    x = np.asarray(x, dtype=float)
    t = (x / 2) ** 2
    log_part = np.real(umbral_exp_eval(0, 1, -1, t, cfg))
    return _out(x, 2 / math.pi * (np.log(x / 2) * _bessel_series(0, x, -1, cfg) + log_part))


def bessel_k_limit(n, x, eps=1e-6, cfg=DEFAULT_CONFIG):
    """Integer-order K_n as the mean of the noninteger formula at n - eps and n + eps."""
    return _out(x, 0.5 * (np.asarray(bessel_k(n - eps, x, cfg)) + bessel_k(n + eps, x, cfg)))


def bessel_y_limit(n, x, eps=1e-6, cfg=DEFAULT_CONFIG):
    """Integer-order Y_n as the mean of the noninteger formula at n - eps and n + eps."""
    return _out(x, 0.5 * (np.asarray(bessel_y(n - eps, x, cfg)) + bessel_y(n + eps, x, cfg)))


def tricomi_c(nu, x, cfg=DEFAULT_CONFIG):
    """Tricomi-Bessel function C_nu(x) = sum (-x)^k / (k! Gamma(nu+k+1)), entire in x.

    For x > 0 it equals J_nu(2 sqrt(x)) / x^(nu/2).
    """
    total, _ = power_series(
        lambda k: rgamma(k + nu + 1) * inv_factorial(k),
        -np.asarray(x, dtype=float), cfg, _start(nu),
    )
    return _out(x, total)
