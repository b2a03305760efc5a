"""Truncation policy and the power-series summation loop shared by all evaluators."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import TruncationError

#: consecutive negligible terms required before a series is declared converged
QUIET_RUN = 3


@dataclass(frozen=True)
class EvalConfig:
    """Series truncation policy.

    A series stops once ``QUIET_RUN`` consecutive terms are no larger than
    ``rel_tol`` times the running sum; reaching ``max_terms`` first raises
    :class:`~umbralint.errors.TruncationError`.
    """

    rel_tol: float = 1e-12
    max_terms: int = 500

    def __post_init__(self):
        if not 0.0 < self.rel_tol < 1.0:
            raise ValueError(f"rel_tol must lie in (0, 1), got {self.rel_tol}")
        if int(self.max_terms) != self.max_terms or self.max_terms < 1:
            raise ValueError(f"max_terms must be a positive integer, got {self.max_terms}")


DEFAULT_CONFIG = EvalConfig()


def inv_factorial(k):
    """1/k! correctly rounded; 0.0 once it underflows."""
    return 1 / math.factorial(k) if k <= 170 else 0.0


def power_series(coef, t, cfg=DEFAULT_CONFIG, start=0):
    """Sum ``coef(k) * t**k`` for ``k = start, start+1, ...``.

    ``t`` may be a scalar or an array; the stopping rule must hold for every
    element at once. Returns ``(total, n_terms)`` with ``total`` a complex
    ndarray shaped like ``t``.
    """
    t = np.asarray(t, dtype=complex)
    power = t**start if start else np.ones_like(t)
    total = np.zeros_like(t)
    quiet = 0
    for n, k in enumerate(range(start, start + cfg.max_terms), 1):
        term = coef(k) * power
        total = total + term
        if np.all(np.abs(term) <= cfg.rel_tol * np.abs(total)):
            quiet += 1
            if quiet >= QUIET_RUN:
                return total, n
        else:
            quiet = 0
        power = power * t
    raise TruncationError(
        f"series not converged to rel_tol={cfg.rel_tol:g} within {cfg.max_terms} terms"
    )
