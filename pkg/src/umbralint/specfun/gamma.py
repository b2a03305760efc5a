"""Gamma-family scalar functions.

All of them accept real or complex scalars. Real input that yields a real
value comes back as ``float``; everything else is ``complex``.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache

from scipy import special

from ..errors import NonFiniteError, PoleError

EULER_GAMMA = 0.57721566490153286061

#: absolute distance within which an argument is treated as a nonpositive integer
POLE_SNAP = 1e-12

# B_{2n} / (2n) for the digamma asymptotic series, n = 1..8
_DIGAMMA_ASYMPTOTIC = [
    1 / 12, -1 / 120, 1 / 252, -1 / 240, 1 / 132, -691 / 32760, 1 / 12, -3617 / 8160,
]


def _finite(value, name):
    if not cmath.isfinite(value):
        raise NonFiniteError(f"{name} produced a non-finite value")
    return value


def _shape(z, value):
    """Return ``value`` as float when ``z`` was real and ``value`` is real."""
    if not isinstance(z, complex) and complex(value).imag == 0.0:
        return float(complex(value).real)
    return complex(value)


def pole_order(z):
    """Return ``m`` if ``z`` snaps to the nonpositive integer ``-m``, else ``None``."""
    z = complex(z)
    if abs(z.imag) > POLE_SNAP:
        return None
    n = round(z.real)
    if n <= 0 and abs(z.real - n) <= POLE_SNAP:
        return -n
    return None


def is_integer(z, tol=POLE_SNAP):
    z = complex(z)
    return abs(z.imag) <= tol and abs(z.real - round(z.real)) <= tol


def ln_gamma(z):
    """Principal branch of log Gamma(z)."""
    if pole_order(z) is not None:
        raise PoleError(f"ln_gamma has a pole at z = {z}")
    if not isinstance(z, complex) and z > 0:
        return _finite(float(special.gammaln(z)), "ln_gamma")
    return _finite(complex(special.loggamma(complex(z))), "ln_gamma")


def rgamma(z):
    """Reciprocal Gamma function, entire; exactly zero on the poles of Gamma."""
    if pole_order(z) is not None:
        return 0.0 if not isinstance(z, complex) else 0j
    if not isinstance(z, complex):
        return _finite(float(special.rgamma(float(z))), "rgamma")
    return _finite(complex(special.rgamma(z)), "rgamma")


def gamma(z):
    if pole_order(z) is not None:
        raise PoleError(f"gamma has a pole at z = {z}")
    if not isinstance(z, complex):
        return _finite(float(special.gamma(float(z))), "gamma")
    return _finite(complex(special.gamma(z)), "gamma")


def digamma(z):
    """psi(z) by upward recurrence to Re z > 10 followed by the asymptotic series."""
    if pole_order(z) is not None:
        raise PoleError(f"digamma has a pole at z = {z}")
    w = complex(z)
    shift = 0j
    while w.real <= 10.0:
        shift += 1.0 / w
        w += 1.0
    inv2 = 1.0 / (w * w)
    tail = 0j
    power = inv2
    for c in _DIGAMMA_ASYMPTOTIC:
        tail += c * power
        power *= inv2
    value = cmath.log(w) - 0.5 / w - tail - shift
    return _shape(z, _finite(value, "digamma"))


@lru_cache(maxsize=1024)
def harmonic(k):
    """Harmonic number h_k = 1 + 1/2 + ... + 1/k, with h_0 = 0.

    Summed exactly in rationals then rounded once.
    """
    if k < 0 or int(k) != k:
        raise ValueError(f"harmonic needs a nonnegative integer, got {k}")
    return float(sum((Fraction(1, m) for m in range(1, int(k) + 1)), Fraction(0)))


def gamma_ratio(num, den):
    """Gamma(num) / Gamma(den) without ever dividing by Gamma."""
    return gamma(num) * rgamma(den)


__all__ = [
    "EULER_GAMMA", "POLE_SNAP", "digamma", "gamma", "gamma_ratio",
    "harmonic", "is_integer", "ln_gamma", "pole_order", "rgamma",
]
