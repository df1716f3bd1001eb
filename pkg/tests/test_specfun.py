import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from smoothconst import specfun as sf

mp.mp.dps = 40


def test_gamma_values():
    np.testing.assert_allclose(sf.gamma(0.5), math.sqrt(math.pi), rtol=1e-15)
    assert sf.gamma(5) == 24.0


@pytest.mark.parametrize("x", [0.3, 1.7, 6.2])
def test_duplication(x):
    lhs = 2.0 ** (2 * x - 1) * sf.gamma(x) * sf.gamma(x + 0.5)
    rhs = math.sqrt(math.pi) * sf.gamma(2 * x)
    assert abs(lhs - rhs) / rhs <= 1e-13


@settings(max_examples=200, deadline=None)
@given(st.floats(0.001, 0.999))
def test_reflection(x):
    assert abs(sf.gamma(x) * sf.gamma(1 - x) * math.sin(math.pi * x) / math.pi - 1) <= 1e-12


def test_gamma_pole_raises():
    with pytest.raises(sf.GammaPoleError):
        sf.gamma(-2.0)


def test_gamma_ratio_large_arguments():
    # Gamma(200.5)/Gamma(200) overflows as a plain quotient
    want = float(mp.gamma(mp.mpf("200.5")) / mp.gamma(200))
    np.testing.assert_allclose(sf.gamma_ratio([200.5], [200.0]), want, rtol=1e-13)


def test_bessel_j_half_integer_values():
    assert abs(sf.bessel_j(0.5, math.pi)) < 1e-16
    np.testing.assert_allclose(sf.bessel_j(0.5, math.pi / 2), 2 / math.pi, rtol=1e-14)
    np.testing.assert_allclose(sf.bessel_j(1.5, math.pi), math.sqrt(2) / math.pi, rtol=1e-14)
    assert sf.bessel_j(3.5, 0.0) == 0.0


@pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 2.5, 7.5, 20.0, 35.5])
def test_bessel_j_against_mpmath(nu):
    x = np.concatenate([np.geomspace(1e-3, 1e3, 41), [nu, 1.5 * nu, 2 * nu + 0.1]])
    x = x[x > 0]
    got = sf.bessel_j(nu, x)
    want = np.array([float(mp.besselj(nu, xi)) for xi in x])
    # absolute error relative to the envelope, which is what squares of J need
    env = np.maximum(np.abs(want), np.sqrt(2 / (np.pi * np.maximum(x, 1.0))) * 1e-3)
    np.testing.assert_array_less(np.abs(got - want) / env, 1e-12)


@pytest.mark.parametrize("nu", [0.5, 1.5, 2.5, 4.0])
def test_bessel_j_asymptotic_sandwich(nu):
    def scaled_gap(r):
        lead = np.sqrt(2 / (np.pi * r)) * np.cos(r - np.pi * nu / 2 - np.pi / 4)
        return np.max(np.abs(sf.bessel_j(nu, r) - lead) * r ** 1.5)

    # the first correction term has coefficient |4 nu^2 - 1| / 8 * (2/pi)^(1/2)
    first = abs(4 * nu ** 2 - 1) / 8 * math.sqrt(2 / math.pi)
    c = scaled_gap(np.linspace(1, 200, 4000))
    assert c <= 1.1 * first + 1e-10
    # extending the range to r = 2000 does not raise the constant beyond rounding
    assert scaled_gap(np.linspace(200, 2000, 4000)) <= max(c, first) + 1e-9


def test_bessel_ik_half_order():
    np.testing.assert_allclose(sf.bessel_i(0.5, 1.0), math.sqrt(2 / math.pi) * math.sinh(1), rtol=1e-14)
    np.testing.assert_allclose(sf.bessel_k(0.5, 1.0), math.sqrt(math.pi / 2) * math.exp(-1), rtol=1e-14)
    np.testing.assert_allclose(1.0 * sf.bessel_ik_product(0.5, 1.0), 0.5 * (1 - math.exp(-2)), rtol=1e-14)


def test_bessel_ik_three_halves_closed_form():
    r = 2.0
    i32 = math.sqrt(2 / (math.pi * r)) * (math.cosh(r) - math.sinh(r) / r)
    k32 = math.sqrt(math.pi / (2 * r)) * (1 + 1 / r) * math.exp(-r)
    np.testing.assert_allclose(2 * sf.bessel_i(1.5, r) * sf.bessel_k(1.5, r), 2 * i32 * k32, rtol=1e-14)


@pytest.mark.parametrize("nu", [0.0, 0.5, 1.5, 3.0, 10.5, 35.5])
def test_ik_product_against_mpmath(nu):
    x = np.geomspace(1e-3, 1e4, 29)
    got = sf.bessel_ik_product(nu, x)
    want = np.array([float(mp.besseli(nu, xi) * mp.besselk(nu, xi)) for xi in x])
    np.testing.assert_allclose(got, want, rtol=1e-12)


@pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 2.5, 6.0, 10.0])
def test_wronskian(nu):
    x = np.geomspace(1e-2, 1e3, 31)
    # scaled functions: the exponentials cancel and nothing overflows
    lhs = sf.bessel_ie(nu, x) * sf.bessel_ke(nu + 1, x) + sf.bessel_ie(nu + 1, x) * sf.bessel_ke(nu, x)
    np.testing.assert_allclose(lhs * x, 1.0, rtol=1e-11)


def test_scaled_variants_large_argument():
    x = 5e3
    want_i = float(mp.besseli(2.5, x) * mp.exp(-x))
    want_k = float(mp.besselk(2.5, x) * mp.exp(x))
    np.testing.assert_allclose(sf.bessel_ie(2.5, x), want_i, rtol=1e-13)
    np.testing.assert_allclose(sf.bessel_ke(2.5, x), want_k, rtol=1e-13)


def test_hankel_pq_reproduces_j():
    nu, z = 3.5, 60.0
    p, q, err = sf.hankel_pq(nu, z)
    c, s = math.cos(z - (nu / 2 + 0.25) * math.pi), math.sin(z - (nu / 2 + 0.25) * math.pi)
    j = math.sqrt(2 / (math.pi * z)) * (p * c - q * s)
    np.testing.assert_allclose(j, float(mp.besselj(nu, z)), rtol=1e-13)
    assert 0 <= err < 1e-14


def test_bessel_j_rejects_bad_input():
    with pytest.raises(sf.SpecialFunctionError):
        sf.bessel_j(-1.0, 1.0)
    with pytest.raises(sf.SpecialFunctionError):
        sf.bessel_j(1.0, -1.0)


def test_gegenbauer_values():
    t = np.linspace(-1, 1, 11)
    for d in (3, 5, 8):
        np.testing.assert_array_equal(sf.gegenbauer(d, 0, t), 1.0)
    np.testing.assert_allclose(sf.gegenbauer(4, 1, 0.5), 1.0, rtol=1e-15)
    with pytest.raises(sf.SpecialFunctionError):
        sf.gegenbauer(2, 1, 0.5)


@pytest.mark.parametrize("d", [3, 4, 5, 6, 9])
@pytest.mark.parametrize("k", [1, 2, 5, 12, 30])
def test_gegenbauer_at_one_and_mpmath(d, k):
    at_one = sf.gamma_ratio([d - 2 + k], [k + 1, d - 2])
    np.testing.assert_allclose(sf.gegenbauer(d, k, 1.0), at_one, rtol=1e-12)
    t = np.linspace(-0.95, 0.95, 9) + 0.013
    want = np.array([float(mp.gegenbauer(k, (d - 2) / 2, ti)) for ti in t])
    np.testing.assert_allclose(sf.gegenbauer(d, k, t), want, rtol=1e-11, atol=1e-12 * at_one)


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 9), st.integers(0, 25), st.floats(-1, 1))
def test_gegenbauer_parity(d, k, t):
    a, b = sf.gegenbauer(d, k, -t), (-1) ** k * sf.gegenbauer(d, k, t)
    assert abs(a - b) <= 1e-12 * max(1.0, abs(b))
