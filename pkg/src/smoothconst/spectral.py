r"""Spectrum of the sphere operator with kernel :math:`\tfrac12|\theta - \omega|^{-(d+2a-2)}`.

The operator acts diagonally on spherical harmonics of degree ``k`` with
eigenvalue :math:`\lambda_k`. Two independent routes are provided: a
closed form (``lambda_0`` times a ratio recurrence in ``k``) and direct
Funk-Hecke quadrature against the Gegenbauer polynomial ``C_{d,k}``.

Rescaling by the Riesz-potential constant turns :math:`\lambda_k` into the
eigenvalues of :math:`S^*S` for the homogeneous smoothing problem; the
largest of those (``k = 0``) is :math:`(2\pi)^d C_d^2`.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import specfun
from ._quadrature import gauss_jacobi
from .errors import ToleranceNotMetError

__all__ = [
    "SpectralDomainError",
    "riesz_gamma",
    "sphere_area",
    "lambda_k_closed",
    "lambda_sequence",
    "funk_hecke_eigenvalue_quad",
    "sstars_eigenvalue",
    "operator_norm_constant",
    "EigenvalueEntry",
    "EigenvalueTable",
    "eigenvalue_table",
    "table_csv",
]


class SpectralDomainError(ValueError):
    """Parameters outside the range where the spectrum is defined."""


def _check_da(d, a):
    if isinstance(d, bool) or not isinstance(d, (int, np.integer)) or d < 2:
        raise SpectralDomainError(f"d must be an integer >= 2, got {d!r}")
    if not (1.0 - 0.5 * d < a < 0.5):
        raise SpectralDomainError(f"a must lie in ({1 - 0.5 * d}, 0.5) for d={d}, got {a!r}")


def riesz_gamma(d, lam):
    r""":math:`\gamma(\lambda) = \pi^{d/2} 2^\lambda \Gamma(\lambda/2) / \Gamma((d-\lambda)/2)` for ``0 < lam < d``."""
    if not 0 < lam < d:
        raise SpectralDomainError(f"riesz_gamma needs 0 < lambda < d, got lambda={lam}, d={d}")
    return math.pi ** (0.5 * d) * 2.0 ** lam * specfun.gamma_ratio([0.5 * lam], [0.5 * (d - lam)])


def sphere_area(n):
    """Surface measure of the unit sphere ``S^n`` in ``R^{n+1}``."""
    return 2.0 * math.pi ** (0.5 * (n + 1)) / specfun.gamma(0.5 * (n + 1))


def lambda_sequence(d, a, k_max):
    """``[lambda_0, ..., lambda_{k_max}]`` by the ratio recurrence."""
    _check_da(d, a)
    lam = [math.pi ** (0.5 * (d - 1)) * 2.0 ** (-2.0 * a)
           * specfun.gamma_ratio([0.5 - a], [0.5 * d - a])]
    for k in range(k_max):
        h = 0.5 * d + k
        lam.append(lam[-1] * (a - 1.0 + h) / (h - a))
    return lam


def lambda_k_closed(d, a, k):
    r"""Eigenvalue :math:`\lambda_k` from the closed form.

    Evaluated as ``lambda_0`` followed by
    ``lambda_{j+1} = lambda_j (a - 1 + d/2 + j) / (d/2 + j - a)``, which stays
    finite when the Gamma-function form has cancelling poles
    (``a + d/2`` an integer).
    """
    if k < 0:
        raise SpectralDomainError("k must be >= 0")
    return lambda_sequence(d, a, k)[k]


def funk_hecke_eigenvalue_quad(d, a, k, tol=1e-10):
    """Eigenvalue from the Funk-Hecke integral against ``C_{d,k}``.

    The integrand is ``(1-t)^(-(1+2a)/2) (1+t)^((d-3)/2)`` times a polynomial of
    degree ``k``, so Gauss-Jacobi with those exponents is exact up to
    rounding. Two rule sizes are compared and their relative gap is checked
    against ``tol``.
    """
    _check_da(d, a)
    if d < 3:
        raise SpectralDomainError("Funk-Hecke quadrature needs d >= 3")
    alpha_j = -0.5 * (1.0 + 2.0 * a)
    beta_j = 0.5 * (d - 3)

    def integral(n):
        t, wts = gauss_jacobi(n, alpha_j, beta_j)
        return float(np.dot(wts, specfun.gegenbauer(d, k, t)))

    n = k // 2 + 8
    i1, i2 = integral(n), integral(n + 8)
    c1 = specfun.gamma_ratio([d - 2 + k], [k + 1, d - 2])
    pref = 2.0 ** (-0.5 * (d + 2 * a)) * sphere_area(d - 2) / c1
    value = pref * i2
    if abs(i1 - i2) > tol * abs(i2):
        raise ToleranceNotMetError(f"Funk-Hecke rules disagree by {abs(i1 - i2) / abs(i2):.3g}")
    return value


def sstars_eigenvalue(d, a, k):
    """Eigenvalue of ``S*S`` on degree-``k`` harmonics: ``2 pi gamma(d + 2a - 2) lambda_k``."""
    _check_da(d, a)
    return 2.0 * math.pi * riesz_gamma(d, d + 2.0 * a - 2.0) * lambda_k_closed(d, a, k)


def operator_norm_constant(d, a):
    """Optimal constant of the homogeneous problem ``(r^(-2(1-a)), r^a, r^2)``."""
    _check_da(d, a)
    ratio = specfun.gamma_ratio([1.0 - 2.0 * a, 0.5 * d + a - 1.0],
                                [1.0 - a, 1.0 - a, 0.5 * d - a])
    return math.sqrt(math.pi * 2.0 ** (2.0 * a - 1.0) * ratio)


@dataclass(frozen=True)
class EigenvalueEntry:
    k: int
    lambda_closed: float
    lambda_quad: float  # None when d = 2
    sstars: float
    rel_diff: float  # None when d = 2
    method: str


@dataclass(frozen=True)
class EigenvalueTable:
    d: int
    a: float
    entries: tuple

    def to_dict(self):
        return {
            "d": self.d,
            "a": self.a,
            "entries": [e.__dict__.copy() for e in self.entries],
        }


def eigenvalue_table(d, a, k_max, threads=1):
    """Closed-form and quadrature eigenvalues for ``k = 0..k_max``, ordered by ``k``."""
    lam = lambda_sequence(d, a, k_max)
    scale = 2.0 * math.pi * riesz_gamma(d, d + 2.0 * a - 2.0)

    def entry(k):
        if d < 3:
            return EigenvalueEntry(k, lam[k], None, scale * lam[k], None, "closed_form")
        q = funk_hecke_eigenvalue_quad(d, a, k)
        return EigenvalueEntry(k, lam[k], q, scale * lam[k], abs(q - lam[k]) / lam[k],
                               "closed_form+quadrature")

    ks = range(k_max + 1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            entries = tuple(ex.map(entry, ks))
    else:
        entries = tuple(entry(k) for k in ks)
    return EigenvalueTable(d, a, entries)


def _csv_num(x):
    return "" if x is None else repr(float(x))


def table_csv(table: EigenvalueTable):
    """CSV text with columns ``k,lambda_closed,lambda_quad,sstars,rel_diff``."""
    lines = ["k,lambda_closed,lambda_quad,sstars,rel_diff"]
    for e in table.entries:
        lines.append(",".join([str(e.k), _csv_num(e.lambda_closed), _csv_num(e.lambda_quad),
                               _csv_num(e.sstars), _csv_num(e.rel_diff)]))
    return "\n".join(lines) + "\n"
