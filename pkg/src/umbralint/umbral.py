r"""Umbral operators acting on their vacua.

The operator ``c`` acts on the vacuum ``phi(0)`` through

    c**mu phi(0) = 1 / Gamma(mu + 1)

and a single logarithm is handled as a derivative in the exponent,

    (c**mu ln c) phi(0) = d/dmu [1 / Gamma(mu + 1)] = -psi(mu + 1) / Gamma(mu + 1).

Bessel-type functions become formal exponentials in ``c`` whose expansion
is summed numerically here. The two-index vacuum used for products of two
Bessel functions lives here as well.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .specfun.gamma import digamma, pole_order, rgamma
from .specfun.series import DEFAULT_CONFIG, EvalConfig, inv_factorial, power_series


@dataclass(frozen=True)
class UmbralAction:
    """``c**power (ln c)**log_power`` applied to ``phi(0)``."""

    power: complex
    log_power: int = 0

    def __post_init__(self):
        if self.log_power not in (0, 1):
            raise ValueError("log_power must be 0 or 1")

    def value(self):
        return phi_action(self.power, self.log_power)


def phi_action(power, log_power=0):
    """Evaluate ``(c**power (ln c)**log_power) phi(0)``."""
    if isinstance(power, UmbralAction):
        power, log_power = power.power, power.log_power
    z = power + 1
    if log_power == 0:
        return rgamma(z)
    if log_power != 1:
        raise ValueError("log_power must be 0 or 1")
    m = pole_order(z)
    if m is not None:
        # finite limit of -psi(z)/Gamma(z) as z -> -m
        value = (-1) ** m * math.factorial(m)
        return complex(value) if isinstance(z, complex) else float(value)
    return -digamma(z) * rgamma(z)


def _leading_zeros(nu):
    """Number of leading terms killed by ``rgamma(k + nu + 1)`` when nu is a negative integer."""
    m = pole_order(nu + 1)
    return 0 if m is None else m + 1


def umbral_exp_eval(nu, log_power, sign, t, cfg=DEFAULT_CONFIG, info=None):
    """Expand ``c**nu (ln c)**log_power exp(sign * c * t) phi(0)``.

    Returns ``sum_k (sign t)**k / k! * phi_action(nu + k, log_power)``. With
    ``log_power=0`` and ``sign=-1`` this is ``J_nu(x) / (x/2)**nu`` at
    ``t = (x/2)**2``. ``t`` may be an array.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    start = _leading_zeros(nu) if log_power == 0 else 0

    def coef(k):
        return phi_action(nu + k, log_power) * inv_factorial(k)

    total, n = power_series(coef, sign * np.asarray(t, dtype=complex), cfg, start)
    if info is not None:
        info["terms"] = n
    return total[()] if total.ndim == 0 else total


def ratio_coefficients(first, start, step):
    """Coefficient callable for :func:`power_series` built from ``c_k = c_{k-1} * step(k)``.

    Must be called with consecutive ``k`` starting at ``start``.
    """
    cache = {start: first}

    def coef(k):
        if k not in cache:
            cache[k] = coef(k - 1) * step(k)
            cache.pop(k - 2, None)
        return cache[k]

    return coef


def falling_factorial(lam, k):
    """``lam (lam - 1) ... (lam - k + 1)``; equals Gamma(lam+1)/Gamma(lam-k+1) off the poles."""
    if k < 0 or int(k) != k:
        raise ValueError(f"falling_factorial needs a nonnegative integer k, got {k}")
    out = 1
    for j in range(int(k)):
        out *= lam - j
    return out


@dataclass(frozen=True)
class TwoIndexPhi:
    """Arguments of the two-index vacuum ``phi_{mu,nu}(lam; a, b)``."""

    lam: complex
    mu: complex
    nu: complex
    a: complex
    b: complex
    cfg: EvalConfig = field(default=DEFAULT_CONFIG)

    def value(self, info=None):
        return phi_two_index(self.lam, self.mu, self.nu, self.a, self.b, self.cfg, info)


def phi_two_index(lam, mu, nu, a, b, cfg=DEFAULT_CONFIG, info=None):
    """``phi_{mu,nu}(lam; a, b)``, the coefficient function of J_mu(a x) J_nu(b x).

    The Gamma(lam+1)/Gamma(lam-k+1) pair is carried as a falling factorial so
    that negative integer ``lam`` stays finite and nonnegative integer ``lam``
    terminates the sum. The series runs in ``(b/a)**2`` and needs ``|b| < |a|``;
    ``a`` and ``b`` may be complex (principal powers).
    """
    if not abs(b) < abs(a):
        raise DomainError(f"phi_two_index needs |b| < |a|, got a={a}, b={b}")
    ratio = (b / a) ** 2
    start = _leading_zeros(nu)
    first = falling_factorial(lam, start) * inv_factorial(start) * rgamma(lam - start + mu + 1) \
        * rgamma(start + nu + 1)
    # each Gamma factor alone overflows long before the terms get small near |b| = |a|,
    # so coefficients are grown by their ratio instead
    coef = ratio_coefficients(first, start, lambda k: (lam - k + 1) * (lam - k + mu + 1) / (k * (k + nu)))

    total, n = power_series(coef, ratio, cfg, start)
    if info is not None:
        info["phi_terms"] = n
    return complex(a ** (2 * lam) * total[()])
