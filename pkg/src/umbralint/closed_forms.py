"""Closed forms for the catalogue of semi-infinite Bessel-type integrals.

Each family is an integral over ``(0, inf)``:

========== ===================================================== ==================
family     integrand                                             parameters
========== ===================================================== ==================
E          x^mu exp(-a x^2) ln(b x)                              mu, a, b
I          x^mu J_lambda(p x)                                    mu, lambda, p
A          J_lambda(p x) ln(b x)                                 lambda, p, b
Theta      x^mu K_0(x)                                           mu
Upsilon    x^mu Y_0(x)                                           mu
Omega      x^alpha J_mu(a x) J_nu(b x)                           alpha, mu, nu, a, b
Xi         x^alpha J_mu(a x) Y_nu(b x)                           alpha, mu, nu, a, b
TricomiInt C_nu(x), or C_nu(x^2) when squared                    nu, squared
TricomiMoment x^mu C_nu(x^2)                                     mu, nu
Psi        x^lambda C_mu(a^2 x^2 / 4) K_nu(b x)                  lambda, mu, nu, a, b
========== ===================================================== ==================

Evaluation refuses parameters outside the convergence region of each
formula (:class:`~umbralint.errors.DomainError`) instead of continuing
analytically.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import DomainError, IntegerOrderError, ResidualError
from .specfun.bessel import INTEGER_ORDER_TOL
from .specfun.gamma import digamma, gamma, rgamma
from .specfun.series import DEFAULT_CONFIG, EvalConfig, inv_factorial, power_series
from .umbral import _leading_zeros, phi_two_index, ratio_coefficients

SQRT_PI = math.sqrt(math.pi)

#: imaginary residual allowed in Psi before the value is rejected
PSI_REL_RESIDUAL = 1e-8
PSI_ABS_RESIDUAL = 1e-12

FAMILY_PARAMS = {
    "E": ("mu", "a", "b"),
    "I": ("mu", "lambda", "p"),
    "A": ("lambda", "p", "b"),
    "Theta": ("mu",),
    "Upsilon": ("mu",),
    "Omega": ("alpha", "mu", "nu", "a", "b"),
    "Xi": ("alpha", "mu", "nu", "a", "b"),
    "TricomiInt": ("nu", "squared"),
    "TricomiMoment": ("mu", "nu"),
    "Psi": ("lambda", "mu", "nu", "a", "b"),
}


@dataclass(frozen=True)
class FamilyInvocation:
    """A named integral family with its parameter values."""

    family: str
    params: dict
    cfg: EvalConfig = field(default=DEFAULT_CONFIG, compare=False)

    def __post_init__(self):
        if self.family not in FAMILY_PARAMS:
            raise ValueError(
                f"unknown family {self.family!r}; known: {', '.join(FAMILY_PARAMS)}"
            )
        names = FAMILY_PARAMS[self.family]
        if set(self.params) != set(names):
            raise ValueError(
                f"{self.family} takes parameters ({', '.join(names)}), got ({', '.join(self.params)})"
            )
        # canonical order, so equality and printing are stable
        object.__setattr__(self, "params", {n: self.params[n] for n in names})

    def __str__(self):
        args = ", ".join(f"{k}={format_number(v)}" for k, v in self.params.items())
        return f"{self.family}({args})"

    def evaluate(self, info=None):
        return evaluate(self, info)


def format_number(v):
    """Shortest text that parses back to exactly ``v``."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, complex):
        if v.imag != 0:
            raise ValueError("complex parameters have no text form")
        v = v.real
    v = float(v)
    if v.is_integer() and abs(v) < 1e16:
        return str(int(v))
    return repr(v)


@dataclass(frozen=True)
class DomainCheck:
    ok: bool
    violations: tuple = ()

    @classmethod
    def from_violations(cls, violations):
        return cls(not violations, tuple(violations))


def _re(z):
    return complex(z).real


def _is_int(nu):
    return abs(_re(nu) - round(_re(nu))) <= INTEGER_ORDER_TOL and abs(complex(nu).imag) <= INTEGER_ORDER_TOL


def _positive(v, name):
    if complex(v).imag != 0 or _re(v) <= 0:
        return [f"{name} > 0 (got {v})"]
    return []


def _constraints_E(mu, a, b):
    out = []
    if not _re(mu) > -1:
        out.append(f"Re mu > -1 (got {mu})")
    if not _re(a) > 0:
        out.append(f"Re a > 0 (got {a})")
    return out + _positive(b, "b")


def _constraints_I(mu, lam, p):
    out = []
    if not _re(lam) >= 0:
        out.append(f"lambda >= 0 (got {lam})")
    if not -_re(lam) - 1 < _re(mu):
        out.append(f"-Re lambda - 1 < Re mu (got mu={mu}, lambda={lam})")
    if not _re(mu) < 0.5:
        out.append(f"Re mu < 1/2 (got {mu})")
    return out + _positive(p, "p")


def _constraints_A(lam, p, b):
    out = []
    if not _re(lam) > -1:
        out.append(f"Re lambda > -1 (got {lam})")
    return out + _positive(p, "p") + _positive(b, "b")


def _constraints_Theta(mu):
    return [] if _re(mu) > -1 else [f"Re mu > -1 (got {mu})"]


def _constraints_Upsilon(mu):
    return [] if -1 < _re(mu) < 0.5 else [f"-1 < Re mu < 1/2 (got {mu})"]


def _constraints_Omega(alpha, mu, nu, a, b):
    out = []
    if not _re(alpha + mu + nu) > -1:
        out.append(f"Re(alpha + mu + nu) > -1 (got {alpha + mu + nu})")
    if not _re(alpha) < 1:
        out.append(f"Re alpha < 1 (got {alpha})")
    out += _positive(a, "a") + _positive(b, "b")
    if a == b:
        out.append("a != b required")
    return out


def _constraints_Xi(alpha, mu, nu, a, b):
    out = _constraints_Omega(alpha, mu, nu, a, b)
    if not _re(alpha + mu - nu) > -1:
        out.append(f"Re(alpha + mu - nu) > -1 (got {alpha + mu - nu})")
    if _is_int(nu):
        out.append(f"nu must be noninteger (got {nu})")
    return out


def _constraints_TricomiInt(nu, squared):
    if squared:
        return [] if _re(nu) > -0.5 else [f"Re nu > -1/2 (got {nu})"]
    return [] if _re(nu) > 0.5 else [f"Re nu > 1/2 (got {nu})"]


def _constraints_TricomiMoment(mu, nu):
    out = []
    if not -1 < _re(mu) < 0.5:
        out.append(f"-1 < Re mu < 1/2 (got {mu})")
    if not _re(mu - nu) < 0.5:
        out.append(f"Re(mu - nu) < 1/2 (got {mu - nu})")
    return out


def _constraints_Psi(lam, mu, nu, a, b):
    out = _positive(a, "a")
    if not _re(b) > abs(complex(a).imag) or not _re(b) > 0:
        out.append(f"Re(b +- i a) > 0 (got a={a}, b={b})")
    if not _re(2 * mu - lam + 1) > abs(_re(nu)):
        out.append(f"Re(2 mu - lambda + 1) > |Re nu| (got {2 * mu - lam + 1}, nu={nu})")
    if not _re(lam + 1) > abs(_re(nu)):
        out.append(f"Re(lambda + 1) > |Re nu| (got {lam + 1}, nu={nu})")
    if _is_int(nu):
        out.append(f"nu must be noninteger (got {nu})")
    if a == b:
        out.append("a != b required")
    return out


_CONSTRAINTS = {
    "E": _constraints_E,
    "I": _constraints_I,
    "A": _constraints_A,
    "Theta": _constraints_Theta,
    "Upsilon": _constraints_Upsilon,
    "Omega": _constraints_Omega,
    "Xi": _constraints_Xi,
    "TricomiInt": _constraints_TricomiInt,
    "TricomiMoment": _constraints_TricomiMoment,
    "Psi": _constraints_Psi,
}


def check_domain(inv):
    """Evaluate every convergence constraint of the invocation's family."""
    return DomainCheck.from_violations(_CONSTRAINTS[inv.family](*inv.params.values()))


def _enforce(family, *args):
    violations = _CONSTRAINTS[family](*args)
    if violations:
        cls = IntegerOrderError if any("noninteger" in v for v in violations) else DomainError
        raise cls(f"{family}: " + "; ".join(violations), violations)


def eval_E(mu, a, b, cfg=DEFAULT_CONFIG):
    """int x^mu exp(-a x^2) ln(b x) dx."""
    _enforce("E", mu, a, b)
    s = (mu + 1) / 2
    bracket = 2 * math.log(b) - cmath.log(a) + digamma(s)
    return complex(gamma(s) * a ** (-s) / 4 * bracket)


def eval_I(mu, lam, p, cfg=DEFAULT_CONFIG):
    """int x^mu J_lambda(p x) dx."""
    _enforce("I", mu, lam, p)
    return complex(0.5 * (2 / p) ** (mu + 1) * gamma((lam + mu + 1) / 2) * rgamma((lam - mu + 1) / 2))


def eval_A(lam, p, b, cfg=DEFAULT_CONFIG):
    """int J_lambda(p x) ln(b x) dx."""
    _enforce("A", lam, p, b)
    return complex((math.log(2 * b / p) + digamma((lam + 1) / 2)) / p)


def eval_Theta(mu, cfg=DEFAULT_CONFIG):
    """int x^mu K_0(x) dx."""
    _enforce("Theta", mu)
    return complex(2 ** (mu - 1) * gamma((mu + 1) / 2) ** 2)


def eval_Upsilon(mu, cfg=DEFAULT_CONFIG):
    """int x^mu Y_0(x) dx; exactly zero at mu = 0."""
    _enforce("Upsilon", mu)
    sine = cmath.sin(mu * math.pi / 2) if isinstance(mu, complex) else math.sin(mu * math.pi / 2)
    return complex(2**mu / math.pi * gamma((mu + 1) / 2) ** 2 * sine)


def _ordered(mu, nu, a, b, info):
    if abs(a) == abs(b):
        raise DomainError(f"a and b must differ in modulus (a={a}, b={b})", ["a != b required"])
    if abs(b) > abs(a):
        if info is not None:
            info["swap"] = True
        return nu, mu, b, a
    if info is not None:
        info["swap"] = False
    return mu, nu, a, b


def omega_series(alpha, mu, nu, a, b, cfg=DEFAULT_CONFIG, info=None):
    """Gamma-times-phi closed form of Omega with no domain check.

    ``a`` and ``b`` may be complex; the larger modulus goes first using the
    symmetry Omega_{alpha,mu,nu}(a, b) = Omega_{alpha,nu,mu}(b, a).
    """
    mu, nu, a, b = _ordered(mu, nu, a, b, info)
    s = (alpha + mu + nu + 1) / 2
    phi = phi_two_index(-s, mu, nu, a, b, cfg, info)
    return complex(2**alpha * a**mu * b**nu * gamma(s) * phi)


def omega_secant(alpha, mu, nu, a, b, cfg=DEFAULT_CONFIG):
    """Secant form of Omega, an independent cross-check of :func:`omega_series`.

    Infinite where alpha + mu + nu is an odd integer even though Omega is
    finite there.
    """
    _enforce("Omega", alpha, mu, nu, a, b)
    mu, nu, a, b = _ordered(mu, nu, a, b, None)
    A, B = (1 - alpha - mu - nu) / 2, (1 - alpha + mu - nu) / 2
    start = _leading_zeros(nu)
    first = rgamma(A - start) * rgamma(B - start) * rgamma(start + nu + 1) * inv_factorial(start)
    coef = ratio_coefficients(first, start, lambda k: (A - k) * (B - k) / (k * (k + nu)))
    total, _ = power_series(coef, (b / a) ** 2, cfg, start)
    pref = math.pi * 2**alpha * a ** (-alpha - nu - 1) * b**nu
    return complex(pref / cmath.cos((alpha + mu + nu) * math.pi / 2) * total[()])


def eval_Omega(alpha, mu, nu, a, b, cfg=DEFAULT_CONFIG, info=None):
    """int x^alpha J_mu(a x) J_nu(b x) dx (Weber-Schafheitlin)."""
    _enforce("Omega", alpha, mu, nu, a, b)
    return omega_series(alpha, mu, nu, a, b, cfg, info)


def eval_Xi(alpha, mu, nu, a, b, cfg=DEFAULT_CONFIG, info=None):
    """int x^alpha J_mu(a x) Y_nu(b x) dx for noninteger nu."""
    _enforce("Xi", alpha, mu, nu, a, b)
    plus = omega_series(alpha, mu, nu, a, b, cfg, info)
    minus = omega_series(alpha, mu, -nu, a, b, cfg)
    return (math.cos(nu * math.pi) * plus - minus) / math.sin(nu * math.pi)


def eval_tricomi_int(nu, squared=False, cfg=DEFAULT_CONFIG):
    """int C_nu(x) dx = 1/Gamma(nu), or int C_nu(x^2) dx = (sqrt(pi)/2)/Gamma(nu + 1/2)."""
    _enforce("TricomiInt", nu, squared)
    if squared:
        return complex(SQRT_PI / 2 * rgamma(nu + 0.5))
    return complex(rgamma(nu))


def eval_tricomi_moment(mu, nu, cfg=DEFAULT_CONFIG):
    """int x^mu C_nu(x^2) dx, i.e. the I family at (mu - nu, nu, p = 2)."""
    _enforce("TricomiMoment", mu, nu)
    return complex(0.5 * gamma((mu + 1) / 2) * rgamma(nu - (mu - 1) / 2))


def eval_Psi(lam, mu, nu, a, b, cfg=DEFAULT_CONFIG, info=None):
    """int x^lambda C_mu(a^2 x^2 / 4) K_nu(b x) dx for noninteger nu.

    Built from two Omega values at the imaginary scale ``i b`` with
    i^nu = exp(i pi nu / 2) and (-1)^nu = exp(i pi nu). The integral is real,
    so the real part is returned; the imaginary residual goes to ``info`` and
    raises :class:`ResidualError` when it is not negligible.
    """
    _enforce("Psi", lam, mu, nu, a, b)
    ib = 1j * b
    alpha = lam - mu
    sub = {} if info is None else info
    minus = omega_series(alpha, mu, -nu, a, ib, cfg, sub)
    plus = omega_series(alpha, mu, nu, a, ib, cfg)
    pref = 2 ** (mu - 1) * math.pi / (cmath.exp(0.5j * math.pi * nu) * a**mu * math.sin(nu * math.pi))
    value = pref * (cmath.exp(1j * math.pi * nu) * minus - plus)
    residual = abs(value.imag)
    sub["imag_residual"] = residual
    if residual > max(PSI_REL_RESIDUAL * abs(value), PSI_ABS_RESIDUAL):
        raise ResidualError(f"Psi imaginary residual {residual:.3g} exceeds tolerance (value {value})")
    return value.real


_EVALUATORS = {
    "E": eval_E,
    "I": eval_I,
    "A": eval_A,
    "Theta": eval_Theta,
    "Upsilon": eval_Upsilon,
    "Omega": eval_Omega,
    "Xi": eval_Xi,
    "TricomiInt": eval_tricomi_int,
    "TricomiMoment": eval_tricomi_moment,
    "Psi": eval_Psi,
}

_TAKES_INFO = {"Omega", "Xi", "Psi"}


def evaluate(inv, info=None):
    """Closed-form value of a :class:`FamilyInvocation`."""
    fn = _EVALUATORS[inv.family]
    if inv.family in _TAKES_INFO:
        return complex(fn(*inv.params.values(), cfg=inv.cfg, info=info))
    return complex(fn(*inv.params.values(), cfg=inv.cfg))
