"""Scalar special functions: the Gamma family and series-defined Bessel-type functions."""
from .bessel import (
    bessel_i, bessel_j, bessel_k, bessel_k0, bessel_k_limit, bessel_y, bessel_y0,
    bessel_y_limit, tricomi_c,
)
from .gamma import EULER_GAMMA, digamma, gamma, gamma_ratio, harmonic, ln_gamma, rgamma
from .series import DEFAULT_CONFIG, EvalConfig, power_series

__all__ = [
    "DEFAULT_CONFIG", "EULER_GAMMA", "EvalConfig", "bessel_i", "bessel_j", "bessel_k",
    "bessel_k0", "bessel_k_limit", "bessel_y", "bessel_y0", "bessel_y_limit", "digamma",
    "gamma", "gamma_ratio", "harmonic", "ln_gamma", "power_series", "rgamma", "tricomi_c",
]
