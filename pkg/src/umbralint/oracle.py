"""Independent numerical quadrature for semi-infinite Bessel-type integrals.

Two strategies:

* exponentially decaying integrands are integrated panel by panel over
  ``[0, 1], [1, 2], [2, 4], ...`` with tanh-sinh quadrature until a fitted
  exponential tail bound drops below the tolerance;
* oscillatory integrands are cut into half-period panels, the partial
  integrals at panel ends are collected, and the Wynn epsilon algorithm
  extrapolates their limit.

Bessel factors come from :mod:`umbralint.specfun` for moderate arguments
and from Hankel-type asymptotic expansions beyond that, so the oracle never
touches the closed forms or the umbral machinery.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from numpy.polynomial.legendre import leggauss

from . import specfun
from .closed_forms import check_domain
from .errors import ConvergenceError, DomainError, UnsupportedError

DECAY_CLASSES = ("exponential", "oscillatory", "oscillatory_with_power_decay")

DECAYING_TOL = 1e-8
OSCILLATORY_TOL = 1e-6

MAX_PANELS = 64
#: successive extrapolated values must agree to this fraction of the requested tolerance
SETTLE_FACTOR = 1e-2
#: ...over this many consecutive estimates; two-frequency integrands plateau in short runs
SETTLE_WINDOW = 8
MAX_EXTENT = 1e4

# series are used up to these arguments, asymptotic expansions beyond
SERIES_LIMIT_J = 17.0
SERIES_LIMIT_K = 10.0


@dataclass(frozen=True)
class Integrand:
    """A vectorised real integrand on ``(0, inf)`` with a hint about its tail."""

    evaluator: Callable[[np.ndarray], np.ndarray]
    decay_class: str = "exponential"
    asymptotic_period: Optional[float] = None
    onset: float = 0.0

    def __post_init__(self):
        if self.decay_class not in DECAY_CLASSES:
            raise ValueError(f"unknown decay class {self.decay_class!r}")
        if self.decay_class != "exponential" and not (self.asymptotic_period or 0) > 0:
            raise ValueError("oscillatory integrands need a positive asymptotic_period")

    def __call__(self, x):
        return self.evaluator(x)


@dataclass(frozen=True)
class OracleResult:
    value: float
    abs_error_estimate: float
    subintervals_used: int
    acceleration_steps: int
    partial_sums: tuple = field(default=(), repr=False)


# ---------------------------------------------------------------------------
# panel rules

def _evaluate(f, x, a, b):
    with np.errstate(all="ignore"):
        y = np.asarray(f(x), dtype=float)
    bad = ~np.isfinite(y)
    if bad.any():
        # overflow is tolerated only at nodes squeezed against a panel end
        edge = np.minimum(x - a, b - x) <= 1e-100 * (b - a)
        if not edge[bad].all():
            raise ConvergenceError(f"integrand is not finite at x = {x[bad & ~edge][0]:g}")
        y = np.where(bad, 0.0, y)
    return y


def tanh_sinh(f, a, b, tol=1e-12, max_level=9, t_max=6.1):
    """Double-exponential quadrature on ``[a, b]``; copes with endpoint singularities.

    Returns ``(value, error_estimate, n_evaluations)``.
    """
    width = b - a

    def nodes(t):
        s = math.pi * np.sinh(t)
        g_lo = 1.0 / (1.0 + np.exp(s))
        g_hi = 1.0 / (1.0 + np.exp(-s))
        # measure each node from its nearer end so tiny offsets survive rounding
        x = np.where(t < 0, a + width * g_hi, b - width * g_lo)
        w = width * math.pi * np.cosh(t) * g_lo * g_hi
        return x, w

    h = 1.0
    t = np.arange(-int(t_max / h), int(t_max / h) + 1) * h
    x, w = nodes(t)
    total = np.dot(w, _evaluate(f, x, a, b))
    value = h * total
    used = t.size
    err = math.inf
    for _ in range(max_level):
        h /= 2
        t = (2 * np.arange(-int(t_max / (2 * h)) - 1, int(t_max / (2 * h)) + 1) + 1) * h
        t = t[np.abs(t) <= t_max]
        x, w = nodes(t)
        total += np.dot(w, _evaluate(f, x, a, b))
        used += t.size
        new = h * total
        err = abs(new - value)
        value = new
        if err <= tol:
            break
    return float(value), float(err), used


_GL_LO = leggauss(20)
_GL_HI = leggauss(40)


def _gauss_panels(f, edges):
    """Gauss-Legendre integrals over consecutive panels, all in one evaluation.

    Returns per-panel values (40 nodes) and error estimates (|40 - 20 nodes|).
    """
    lo, hi = edges[:-1, None], edges[1:, None]
    half, mid = (hi - lo) / 2, (hi + lo) / 2
    x_lo, w_lo = _GL_LO
    x_hi, w_hi = _GL_HI
    pts = np.concatenate([mid + half * x_lo, mid + half * x_hi], axis=1)
    vals = _evaluate(f, pts.ravel(), edges[0], edges[-1]).reshape(pts.shape)
    coarse = (vals[:, :20] @ w_lo) * half[:, 0]
    fine = (vals[:, 20:] @ w_hi) * half[:, 0]
    return fine, np.abs(fine - coarse)


# ---------------------------------------------------------------------------
# sequence acceleration

def wynn_epsilon(seq):
    """Limit estimate of a sequence from the deepest even column of its epsilon table."""
    cur = np.asarray(seq, dtype=float)
    prev = np.zeros(cur.size + 1)
    best = cur[-1]
    col = 0
    while cur.size > 1:
        diff = np.diff(cur)
        if not np.all(diff != 0) or not np.all(np.isfinite(diff)):
            break
        prev, cur = cur, prev[1:cur.size] + 1.0 / diff
        col += 1
        if col % 2 == 0:
            best = cur[-1]
    return float(best)


# ---------------------------------------------------------------------------
# strategies

def integrate_decaying(f, tol=DECAYING_TOL):
    """Integrate an exponentially decaying integrand over ``(0, inf)``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    min_extent = 4 * (f.asymptotic_period or 1.0) if isinstance(f, Integrand) else 4.0
    value, err, _ = tanh_sinh(f, 0.0, 1.0, tol / 16)
    panels = 1
    lo, hi = 1.0, 2.0
    tail = math.inf
    while hi <= MAX_EXTENT:
        v, e, _ = tanh_sinh(f, lo, hi, tol / 16)
        value += v
        err += e
        panels += 1
        if hi >= min_extent:
            probe = np.abs(_evaluate(f, np.linspace(hi / 2, hi, 129), hi / 2, hi))
            m1, m2 = probe[:64].max(), probe[64:].max()
            if m2 == 0.0:
                tail = 0.0
            elif m1 > m2:
                tail = m2 / (math.log(m1 / m2) / (hi / 4))
            if tail < tol / 2:
                return OracleResult(value, err + tail, panels, 0)
        lo, hi = hi, 2 * hi
    raise ConvergenceError(f"decaying integrand not negligible by x = {MAX_EXTENT:g} (tail {tail:.3g})")


def integrate_oscillatory(f, tol=OSCILLATORY_TOL, panel_scale=1.0):
    """Integrate a conditionally convergent oscillatory integrand over ``(0, inf)``.

    Panels are ``panel_scale`` times the asymptotic half period long;
    partial sums from ``f.onset`` on are extrapolated with :func:`wynn_epsilon`
    until the last ``SETTLE_WINDOW`` estimates agree to
    ``SETTLE_FACTOR * tol * max(1, |value|)``. All raw partial sums computed
    (one per panel, ``MAX_PANELS / panel_scale`` of them) are kept on the result.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    period = f.asymptotic_period * panel_scale
    head, head_err, _ = tanh_sinh(f, 0.0, period, tol / 100)
    n_lead = max(0, math.ceil(f.onset / period) - 1)
    budget = math.ceil(MAX_PANELS / panel_scale)
    edges = period * np.arange(1, n_lead + budget + 2)
    values, errs = _gauss_panels(f, edges)
    sums = head + np.concatenate([[0.0], np.cumsum(values)])
    seq = sums[n_lead:]
    history = []
    for n in range(6, seq.size + 1):
        history.append(wynn_epsilon(seq[:n]))
        if len(history) < SETTLE_WINDOW:
            continue
        recent = history[-SETTLE_WINDOW:]
        spread = max(recent) - min(recent)
        if spread < SETTLE_FACTOR * tol * max(1.0, abs(recent[-1])):
            panel_err = head_err + float(errs[: n_lead + n - 1].sum())
            return OracleResult(recent[-1], spread + panel_err, n_lead + n, n, tuple(seq))
    raise ConvergenceError(f"epsilon extrapolation did not settle within {budget} panels")


def integrate(f, tol=None):
    if f.decay_class == "exponential":
        return integrate_decaying(f, DECAYING_TOL if tol is None else tol)
    return integrate_oscillatory(f, OSCILLATORY_TOL if tol is None else tol)


# ---------------------------------------------------------------------------
# Bessel factors over the whole half line

def _asymptotic_coefficients(nu, x):
    """Yield the Hankel asymptotic terms a_k(nu) / x^k while they keep shrinking."""
    mu4 = 4.0 * nu * nu
    term = np.ones_like(x)
    yield 0, term
    active = np.ones(x.shape, dtype=bool)
    for k in range(1, 80):
        nxt = term * (mu4 - (2 * k - 1) ** 2) / (8.0 * k * x)
        active &= np.abs(nxt) < np.abs(term)
        term = np.where(active, nxt, 0.0)
        if not active.any() or np.max(np.abs(term)) < 1e-18:
            break
        yield k, term


def _hankel_jy(nu, x):
    p = np.zeros_like(x)
    q = np.zeros_like(x)
    for k, term in _asymptotic_coefficients(nu, x):
        sign = -1.0 if (k // 2) % 2 else 1.0
        if k % 2:
            q += sign * term
        else:
            p += sign * term
    chi = x - (nu / 2 + 0.25) * math.pi
    amp = np.sqrt(2 / (math.pi * x))
    return amp * (p * np.cos(chi) - q * np.sin(chi)), amp * (p * np.sin(chi) + q * np.cos(chi))


def _asymptotic_k(nu, x):
    s = np.zeros_like(x)
    for _, term in _asymptotic_coefficients(nu, x):
        s += term
    return np.sqrt(math.pi / (2 * x)) * np.exp(-x) * s


def _split(x, limit, small, large):
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    lo = x <= limit
    if lo.any():
        out[lo] = small(x[lo])
    if (~lo).any():
        out[~lo] = large(x[~lo])
    return out


def bessel_j(nu, x):
    return _split(x, SERIES_LIMIT_J, lambda s: specfun.bessel_j(nu, s), lambda s: _hankel_jy(nu, s)[0])


def bessel_y(nu, x):
    if nu == 0:
        small = specfun.bessel_y0
    else:
        small = lambda s: specfun.bessel_y(nu, s)  # noqa: E731
    return _split(x, SERIES_LIMIT_J, small, lambda s: _hankel_jy(nu, s)[1])


def bessel_k(nu, x):
    if nu == 0:
        small = specfun.bessel_k0
    else:
        small = lambda s: specfun.bessel_k(nu, s)  # noqa: E731
    return _split(x, SERIES_LIMIT_K, small, lambda s: _asymptotic_k(nu, s))


def tricomi_sqr(nu, z):
    """C_nu(z^2) = J_nu(2 z) / z^nu for z >= 0."""
    return _split(
        z, SERIES_LIMIT_J / 2,
        lambda s: specfun.tricomi_c(nu, s * s),
        lambda s: _hankel_jy(nu, 2 * s)[0] * s ** (-nu),
    )


# ---------------------------------------------------------------------------
# family integrands

def _real(v, name):
    if isinstance(v, complex):
        if v.imag != 0:
            raise UnsupportedError(f"the oracle needs a real {name}, got {v}")
        return v.real
    return v


def _onset(scale, *orders):
    return (8.0 + 2.0 * max((o * o for o in orders), default=0.0)) / scale


def build_integrand(inv):
    """The left-hand side of the family's defining integral as an :class:`Integrand`."""
    p = {k: (_real(v, k) if not isinstance(v, bool) else v) for k, v in inv.params.items()}
    fam = inv.family
    if fam == "E":
        mu, a, b = p["mu"], p["a"], p["b"]
        return Integrand(lambda x: x**mu * np.exp(-a * x * x) * np.log(b * x))
    if fam == "I":
        mu, lam, s = p["mu"], p["lambda"], p["p"]
        return Integrand(lambda x: x**mu * bessel_j(lam, s * x), "oscillatory_with_power_decay",
                         math.pi / s, _onset(s, lam))
    if fam == "A":
        lam, s, b = p["lambda"], p["p"], p["b"]
        return Integrand(lambda x: bessel_j(lam, s * x) * np.log(b * x), "oscillatory_with_power_decay",
                         math.pi / s, _onset(s, lam))
    if fam == "Theta":
        mu = p["mu"]
        return Integrand(lambda x: x**mu * bessel_k(0, x))
    if fam == "Upsilon":
        mu = p["mu"]
        return Integrand(lambda x: x**mu * bessel_y(0, x), "oscillatory_with_power_decay", math.pi, _onset(1.0))
    if fam in ("Omega", "Xi"):
        al, mu, nu, a, b = (p[k] for k in ("alpha", "mu", "nu", "a", "b"))
        if fam == "Xi" and abs(nu - round(nu)) <= specfun.bessel.INTEGER_ORDER_TOL:
            raise UnsupportedError(f"Xi integrand needs a noninteger nu, got {nu}")
        second = bessel_j if fam == "Omega" else bessel_y
        return Integrand(lambda x: x**al * bessel_j(mu, a * x) * second(nu, b * x),
                         "oscillatory_with_power_decay", math.pi / (a + b), _onset(min(a, b), mu, nu))
    if fam == "TricomiInt":
        nu = p["nu"]
        if p["squared"]:
            return Integrand(lambda x: tricomi_sqr(nu, x), "oscillatory_with_power_decay",
                             math.pi / 2, _onset(2.0, nu))
        # x = u^2 turns C_nu(x) dx into 2 u C_nu(u^2) du
        return Integrand(lambda u: 2 * u * tricomi_sqr(nu, u), "oscillatory_with_power_decay",
                         math.pi / 2, _onset(2.0, nu))
    if fam == "TricomiMoment":
        mu, nu = p["mu"], p["nu"]
        return Integrand(lambda x: x**mu * tricomi_sqr(nu, x), "oscillatory_with_power_decay",
                         math.pi / 2, _onset(2.0, nu))
    if fam == "Psi":
        lam, mu, nu, a, b = (p[k] for k in ("lambda", "mu", "nu", "a", "b"))
        if abs(nu - round(nu)) <= specfun.bessel.INTEGER_ORDER_TOL:
            raise UnsupportedError(f"Psi integrand needs a noninteger nu, got {nu}")
        return Integrand(lambda x: x**lam * tricomi_sqr(mu, a * x / 2) * bessel_k(nu, b * x),
                         "exponential", math.pi / a)
    raise UnsupportedError(f"no integrand for family {fam!r}")


def oracle_for(inv, tol=None):
    """Numerically integrate the family's defining integral."""
    integrand = build_integrand(inv)
    dc = check_domain(inv)
    if not dc.ok:
        raise DomainError(f"{inv.family}: " + "; ".join(dc.violations), dc.violations)
    return integrate(integrand, tol)
