import math

import numpy as np
import pytest
import scipy.special as sp
from hypothesis import given, settings, strategies as st

from umbralint.errors import IntegerOrderError, PoleError, TruncationError
from umbralint.specfun import (
    EULER_GAMMA, EvalConfig, bessel_i, bessel_j, bessel_k, bessel_k0, bessel_k_limit, bessel_y,
    bessel_y0, digamma, gamma, harmonic, ln_gamma, rgamma, tricomi_c,
)

G = EULER_GAMMA


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


# -- gamma family ----------------------------------------------------------

@pytest.mark.parametrize("z, expected", [(1, 0.0), (0.5, 0.5723649429247001), (5, math.log(24))])
def test_ln_gamma_examples(z, expected):
    assert ln_gamma(z) == pytest.approx(expected, abs=1e-14)


def test_ln_gamma_pole():
    with pytest.raises(PoleError):
        ln_gamma(-3)


@pytest.mark.parametrize("z, expected", [(0, 0.0), (3, 0.5), (-2, 0.0)])
def test_rgamma_examples(z, expected):
    assert rgamma(z) == expected


@pytest.mark.parametrize("z, expected", [(1, -G), (2, 1 - G), (0.5, -G - 2 * math.log(2))])
def test_digamma_examples(z, expected):
    assert digamma(z) == pytest.approx(expected, abs=1e-13)


def test_digamma_pole():
    with pytest.raises(PoleError):
        digamma(0)


@pytest.mark.parametrize("k, expected", [(0, 0.0), (1, 1.0), (4, 25 / 12)])
def test_harmonic_examples(k, expected):
    assert harmonic(k) == pytest.approx(expected, rel=1e-15)


@given(st.complex_numbers(min_magnitude=0.05, max_magnitude=30, allow_nan=False, allow_infinity=False))
@settings(max_examples=200, deadline=None)
def test_rgamma_times_exp_lngamma_is_one(z):
    if abs(z - round(z.real)) < 1e-3 and round(z.real) <= 0:
        return
    assert abs(rgamma(z) * np.exp(ln_gamma(z)) - 1) < 1e-12


def test_digamma_recurrence_grid():
    for z in np.arange(0.1, 10.01, 0.1):
        assert abs(digamma(z + 1) - digamma(z) - 1 / z) < 1e-12


def test_digamma_harmonic_relation():
    for k in range(31):
        assert abs(digamma(k + 1) + G - harmonic(k)) < 1e-12


@given(st.complex_numbers(min_magnitude=0.1, max_magnitude=50, allow_nan=False, allow_infinity=False))
@settings(max_examples=200, deadline=None)
def test_digamma_matches_scipy(z):
    if z.real < 0 and abs(z.imag) < 0.1:
        return
    ref = sp.digamma(z)
    assert abs(digamma(z) - ref) <= 1e-11 * max(1, abs(ref))


def test_gamma_small_integers():
    for n in range(1, 15):
        assert gamma(n) == pytest.approx(math.factorial(n - 1), rel=1e-14)


# -- Bessel-type series ----------------------------------------------------

def test_bessel_i_examples():
    assert bessel_i(0, 0) == 1
    assert bessel_i(0.5, 1) == pytest.approx(math.sqrt(2 / math.pi) * math.sinh(1), rel=1e-12)
    assert bessel_i(0, 2) == pytest.approx(2.2795853023360673, rel=1e-12)


def test_bessel_j_examples():
    assert bessel_j(0, 0) == 1
    assert bessel_j(0.5, math.pi / 2) == pytest.approx(2 / math.pi, rel=1e-12)
    assert abs(bessel_j(0, 2.4048255577)) < 1e-9


def test_bessel_k0_examples():
    assert bessel_k0(1) == pytest.approx(0.4210244382, abs=1e-10)
    assert bessel_k0(2) == pytest.approx(0.1138938727, abs=1e-10)
    x = 1e-6
    assert abs(bessel_k0(x) - (-math.log(x / 2) - G)) < 1e-9


def test_bessel_k_examples():
    ref = math.sqrt(math.pi / 4) * math.exp(-2)
    assert bessel_k(0.5, 2) == pytest.approx(ref, rel=1e-12)
    assert bessel_k(-0.5, 2) == pytest.approx(ref, rel=1e-12)
    assert bessel_k(0.3, 1) == pytest.approx(sp.kv(0.3, 1), rel=1e-9)
    with pytest.raises(IntegerOrderError):
        bessel_k(1, 1)


def test_bessel_y0_examples():
    assert bessel_y0(1) == pytest.approx(0.0882569642, abs=1e-10)
    assert abs(bessel_y0(0.8935769663)) < 1e-8
    x = 1e-6
    assert abs(bessel_y0(x) - (2 / math.pi) * (math.log(x / 2) + G)) < 1e-9


def test_bessel_y_examples():
    assert bessel_y(0.5, math.pi) == pytest.approx(math.sqrt(2) / math.pi, rel=1e-12)
    x = math.pi / 2
    assert bessel_y(-0.5, x) == pytest.approx(math.sqrt(2 / (math.pi * x)) * math.sin(x), rel=1e-12)
    assert abs(bessel_y(0.5 + 1e-9, 2.0) - bessel_y(0.5, 2.0)) < 1e-6
    with pytest.raises(IntegerOrderError):
        bessel_y(2, 1)


def test_tricomi_examples():
    assert tricomi_c(0, 0) == 1
    assert tricomi_c(1, 1) == pytest.approx(0.5767248077568734, rel=1e-12)
    assert tricomi_c(0, 1) == pytest.approx(0.22389077914123567, rel=1e-12)


@pytest.mark.parametrize("nu", [0, 1, 2, 3])
@pytest.mark.parametrize("x", [0.3, 1.0, 4.0, 9.0])
def test_j_is_i_at_imaginary_argument(nu, x):
    # J_n(x) = i^-n I_n(ix): the alternating series is the I series with a sign-folded argument
    ix = sum((-1) ** k * (x / 2) ** (2 * k + nu) / (math.factorial(k) * math.factorial(k + nu))
             for k in range(80))
    assert bessel_j(nu, x) == pytest.approx(ix, rel=1e-10, abs=1e-14)
    assert bessel_i(nu, x) == pytest.approx(sp.iv(nu, x), rel=1e-12)


@pytest.mark.parametrize("x", [0.5, 1, 2, 5])
def test_k0_series_vs_epsilon_limit(x):
    eps = 1e-6
    lim = (math.pi / 2) * (bessel_i(-eps, x) - bessel_i(eps, x)) / math.sin(eps * math.pi)
    assert abs(bessel_k0(x) - lim) < 1e-6
    assert abs(bessel_k_limit(0, x) - bessel_k0(x)) < 1e-6


@given(st.floats(-3, 3).filter(lambda n: abs(n - round(n)) > 1e-3), st.floats(0.05, 12))
@settings(max_examples=150, deadline=None)
def test_bessel_against_scipy(nu, x):
    assert bessel_j(nu, x) == pytest.approx(sp.jv(nu, x), rel=1e-8, abs=1e-11)
    assert bessel_i(nu, x) == pytest.approx(sp.iv(nu, x), rel=1e-9, abs=1e-12)
    assert bessel_y(nu, x) == pytest.approx(sp.yv(nu, x), rel=1e-7, abs=1e-9)
    if x < 8:
        assert bessel_k(nu, x) == pytest.approx(sp.kv(nu, x), rel=1e-6)


@given(st.floats(-0.9, 4), st.floats(0.05, 10), st.floats(0.1, 3))
@settings(max_examples=100, deadline=None)
def test_tricomi_definition_consistency(nu, x, a):
    z = a * x
    lhs = tricomi_c(nu, (z / 2) ** 2) * (z / 2) ** nu
    assert lhs == pytest.approx(bessel_j(nu, z), rel=1e-9, abs=1e-12)


def test_vectorised_input():
    xs = np.array([0.5, 1.0, 2.0])
    out = bessel_j(0, xs)
    assert out.shape == (3,)
    np.testing.assert_allclose(out, sp.j0(xs), rtol=1e-12)


@pytest.mark.parametrize("fn, args", [
    (bessel_i, (0.3, 4.0)), (bessel_j, (1.5, 7.0)), (bessel_k0, (3.0,)),
    (bessel_y0, (6.0,)), (bessel_y, (0.7, 5.0)), (tricomi_c, (0.5, 9.0)),
])
def test_truncation_stationarity(fn, args):
    base = EvalConfig(rel_tol=1e-12, max_terms=200)
    doubled = EvalConfig(rel_tol=1e-12, max_terms=400)
    v1, v2 = fn(*args, cfg=base), fn(*args, cfg=doubled)
    assert abs(v1 - v2) <= 1e-12 * max(abs(v1), 1)


def test_truncation_error_when_terms_run_out():
    with pytest.raises(TruncationError):
        bessel_j(0, 30.0, cfg=EvalConfig(max_terms=10))


def test_eval_config_validation():
    with pytest.raises(ValueError):
        EvalConfig(rel_tol=0)
    with pytest.raises(ValueError):
        EvalConfig(max_terms=0)
