import math

import mpmath as mp
import numpy as np
import pytest
from scipy.special import roots_jacobi

from smoothconst._quadrature import QuadratureError, gauss_jacobi, gauss_kronrod, gauss_kronrod_batch


@pytest.mark.parametrize("f, a, b, want", [
    (np.exp, 0.0, 1.0, math.e - 1),
    (np.sin, 0.0, math.pi, 2.0),
    (lambda x: 1 / (1 + x ** 2), 0.0, 1e3, math.atan(1e3)),
    (lambda x: 1 / np.sqrt(x), 0.0, 1.0, 2.0),
    (lambda x: np.log(x), 0.0, 1.0, -1.0),
])
def test_gauss_kronrod_scalar(f, a, b, want):
    value, err = gauss_kronrod(f, a, b, tol=1e-12)
    assert abs(value - want) <= max(err, 1e-14) + 1e-15
    assert err <= 1e-12


def test_gauss_kronrod_breakpoints():
    value, _ = gauss_kronrod(np.abs, -1.0, 2.0, tol=1e-14, breakpoints=(0.0,))
    np.testing.assert_allclose(value, 2.5, rtol=1e-15)


def test_batch_owners_are_independent():
    # three integrals of x^n on [0, 1], the first split into two pieces
    lo = np.array([0.0, 0.5, 0.0, 0.0])
    hi = np.array([0.5, 1.0, 1.0, 1.0])
    owner = np.array([0, 0, 1, 2])
    powers = np.array([1.0, 5.0, 40.0])
    value, err = gauss_kronrod_batch(lambda x, o: x ** powers[o], lo, hi, 1e-13, owner=owner)
    np.testing.assert_allclose(value, 1 / (powers + 1), rtol=1e-13)
    assert np.all(err <= 1e-13)


def test_batch_complex_integrand():
    value, _ = gauss_kronrod_batch(lambda x, o: np.exp(1j * x), [0.0], [math.pi], 1e-13)
    np.testing.assert_allclose(value[0], 2j, atol=1e-13)


def test_batch_empty_integrals_are_zero():
    value, err = gauss_kronrod_batch(lambda x, o: x, [0.0], [1.0], 1e-12, owner=[1], n_integrals=3)
    np.testing.assert_allclose(value, [0.0, 0.5, 0.0], atol=1e-16)


def test_batch_interval_cap():
    with pytest.raises(QuadratureError):
        gauss_kronrod_batch(lambda x, o: np.sin(1 / x), [1e-8], [1.0], 1e-15, max_intervals=200)


@pytest.mark.parametrize("alpha, beta", [(0.0, 0.0), (-0.5, 0.0), (-0.95, 0.5), (0.4, 1.5), (-0.5, -0.5)])
@pytest.mark.parametrize("n", [1, 4, 13, 30])
def test_gauss_jacobi_against_scipy(n, alpha, beta):
    x, w = gauss_jacobi(n, alpha, beta)
    xs, ws = roots_jacobi(n, alpha, beta)
    np.testing.assert_allclose(x, xs, atol=1e-13)
    np.testing.assert_allclose(w, ws, rtol=1e-11, atol=1e-15)


def test_gauss_jacobi_moments():
    # exact up to degree 2n - 1; oracle is 30-digit quadrature
    a, b, n = -0.3, 1.0, 6
    x, w = gauss_jacobi(n, a, b)
    with mp.workdps(30):
        for m in range(2 * n):
            want = mp.quad(lambda t: (1 - t) ** a * (1 + t) ** b * t ** m, [-1, 0, 1])
            np.testing.assert_allclose(np.dot(w, x ** m), float(want), rtol=1e-13, atol=1e-15)


def test_gauss_jacobi_rejects_bad_exponents():
    with pytest.raises(ValueError):
        gauss_jacobi(4, -1.0, 0.0)
