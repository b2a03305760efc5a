import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from umbralint.errors import DomainError
from umbralint.specfun import EULER_GAMMA, bessel_i, bessel_j, bessel_k0, digamma, rgamma
from umbralint.umbral import (
    UmbralAction, falling_factorial, phi_action, phi_two_index, umbral_exp_eval,
)


def test_phi_action_examples():
    assert phi_action(0, 0) == 1
    assert phi_action(0, 1) == pytest.approx(EULER_GAMMA, abs=1e-14)
    for k in range(8):
        assert phi_action(k, 1) == pytest.approx(-digamma(k + 1) / math.factorial(k), rel=1e-13)
    assert UmbralAction(2, 0).value() == 0.5


def test_phi_action_integers_are_inverse_factorials():
    for k in range(21):
        assert phi_action(k, 0) == pytest.approx(1 / math.factorial(k), rel=1e-14)


@pytest.mark.parametrize("mu", [0.3, 1.7, 2.5])
def test_log_action_is_derivative(mu):
    h = 1e-5
    fd = (phi_action(mu + h) - phi_action(mu - h)) / (2 * h)
    assert abs(fd - phi_action(mu, 1)) < 1e-6
    assert abs(fd + digamma(mu + 1) * rgamma(mu + 1)) < 1e-6


@pytest.mark.parametrize("m", [0, 1, 2, 3, 5])
def test_log_action_pole_limit(m):
    # at mu + 1 = -m the product -psi/Gamma tends to (-1)^m m!
    exact = phi_action(-m - 1, 1)
    assert exact == (-1) ** m * math.factorial(m)
    for eps in (1e-6, -1e-6):
        assert phi_action(-m - 1 + eps, 1) == pytest.approx(exact, rel=1e-4)


def test_umbral_exp_examples():
    assert umbral_exp_eval(0, 0, -1, 0.0) == 1
    assert umbral_exp_eval(1, 0, -1, 1.0) == pytest.approx(bessel_j(1, 2.0), rel=1e-12)
    # K0(1) = -(ln(1/2) I0(1) + umbral log sum) rearranged
    expected = -(bessel_k0(1.0) + math.log(0.5) * bessel_i(0, 1.0))
    assert umbral_exp_eval(0, 1, +1, 0.25) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("nu", [0, 0.5, 1, 2])
@pytest.mark.parametrize("x", [0.5, 1, 2])
def test_umbral_exponential_reproduces_j(nu, x):
    v = umbral_exp_eval(nu, 0, -1, (x / 2) ** 2) * (x / 2) ** nu
    assert v == pytest.approx(bessel_j(nu, x), rel=1e-10)


def test_umbral_exp_reports_terms():
    info = {}
    umbral_exp_eval(0, 0, -1, 4.0, info=info)
    assert info["terms"] > 5


def test_falling_factorial_examples():
    assert falling_factorial(7.3, 0) == 1
    assert falling_factorial(-1, 3) == -6
    assert falling_factorial(2.5, 2) == 3.75


@given(st.complex_numbers(max_magnitude=8, allow_nan=False, allow_infinity=False), st.integers(0, 12))
@settings(max_examples=200, deadline=None)
def test_falling_factorial_gamma_identity(lam, k):
    if abs(lam - round(lam.real)) < 1e-9:
        return  # arguments this close to an integer snap onto the Gamma pole
    lhs = falling_factorial(lam, k) * rgamma(lam + 1)
    rhs = rgamma(lam - k + 1)
    # forming lam - k + 1 already costs a few ulps, amplified by |rgamma'| <~ k! near the poles
    slack = 1e-14 * (abs(lam) + k + 1) * math.factorial(k)
    assert abs(lhs - rhs) <= 1e-10 * max(abs(rhs), abs(lhs)) + slack


def test_phi_two_index_examples():
    assert phi_two_index(-1, 1, 0, 2, 1) == pytest.approx(0.25, rel=1e-14)
    assert phi_two_index(0, 0, 0, 1, 0.5) == pytest.approx(1.0, rel=1e-14)
    assert phi_two_index(1, 0, 0, 1, 0.5) == pytest.approx(1.25, rel=1e-14)


def _finite_sum(n, mu, nu, a, b):
    # integer-order coefficient of the product series, written out term by term
    total = 0.0
    for k in range(n + 1):
        total += (math.comb(n, k) * a ** (2 * (n - k)) * b ** (2 * k)
                  / (math.gamma(n - k + mu + 1) * math.gamma(k + nu + 1)))
    return total


@pytest.mark.parametrize("n", [0, 1, 2, 3])
@pytest.mark.parametrize("mu, nu", [(0, 0), (0, 1), (1, 0), (1, 1)])
def test_phi_two_index_integer_case(n, mu, nu):
    v = phi_two_index(n, mu, nu, 1, 0.5)
    assert v == pytest.approx(_finite_sum(n, mu, nu, 1.0, 0.5), rel=1e-12)


def test_phi_two_index_requires_b_below_a():
    with pytest.raises(DomainError):
        phi_two_index(-1.5, 0, 0, 1, 1)
    with pytest.raises(DomainError):
        phi_two_index(-1.5, 0, 0, 1, 2)


def test_phi_two_index_complex_b():
    v = phi_two_index(-1.25, 0.5, 0.3, 2.0, 1.0j)
    assert isinstance(v, complex) and cmath.isfinite(v)
    # b only enters squared, so b -> -b leaves the value unchanged
    assert abs(phi_two_index(-1.25, 0.5, 0.3, 2.0, -1.0j) - v) < 1e-14 * abs(v)
