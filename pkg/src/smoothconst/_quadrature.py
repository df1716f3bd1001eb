"""Quadrature rules shared by the alpha and spectral modules.

``gauss_kronrod_batch`` integrates many independent integrals at once: every
interval carries the index of the integral it belongs to, so one vectorized
integrand call serves a whole batch of radii. The error estimate per interval
is ``|K15 - G7|``, which bounds the error of the 7-point rule and is therefore
very pessimistic for the 15-point value that is returned.
"""

import math

import numpy as np
from scipy.linalg import eigh_tridiagonal

__all__ = ["QuadratureError", "gauss_kronrod_batch", "gauss_kronrod", "gauss_jacobi"]


class QuadratureError(ArithmeticError):
    """Adaptive refinement hit its interval cap before reaching the tolerance."""


# Kronrod abscissae on [0, 1] (the rule is symmetric); odd positions are Gauss points.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])  # 15 nodes in [-1, 1]
_WK = np.concatenate([_WGK[:-1], _WGK[::-1]])
_WG15 = np.zeros(15)
_WG15[[1, 3, 5, 7, 9, 11, 13]] = np.concatenate([_WG[:-1], _WG[::-1]])


def _kronrod(f, lo, hi, owner):
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    x = mid[:, None] + half[:, None] * _NODES[None, :]
    vals = f(x, np.broadcast_to(owner[:, None], x.shape))
    k = half * (vals @ _WK)
    g = half * (vals @ _WG15)
    # roundoff floor so flat integrands do not split forever
    floor = 50.0 * np.finfo(float).eps * np.abs(half) * (np.abs(vals) @ _WK)
    diff = np.abs(k - g)
    return k, np.maximum(diff, floor), diff <= floor


def gauss_kronrod_batch(f, lo, hi, tol, owner=None, n_integrals=None, max_intervals=200000):
    """Adaptively integrate ``f`` over each ``[lo[i], hi[i]]``.

    Parameters
    ----------
    f : callable
        ``f(x, owner)`` evaluated elementwise on arrays of equal shape; ``owner``
        holds the integral index of each abscissa. May return complex values.
    lo, hi : array_like
        Interval endpoints, one row per initial piece.
    tol : array_like
        Absolute tolerance per integral.
    owner : array_like of int, optional
        Integral index of each initial piece; defaults to ``arange(len(lo))``.
    n_integrals : int, optional
        Number of integrals; integrals without pieces evaluate to zero.

    Returns
    -------
    value, error : ndarray
        Per-integral sums and error estimates, indexed by owner.
    """
    lo = np.atleast_1d(np.asarray(lo, dtype=float))
    hi = np.atleast_1d(np.asarray(hi, dtype=float))
    owner = np.arange(lo.size) if owner is None else np.atleast_1d(np.asarray(owner))
    if n_integrals is None:
        n_integrals = int(owner.max()) + 1 if owner.size else 0
    n_int = n_integrals
    tol = np.broadcast_to(np.asarray(tol, dtype=float), (n_int,))
    span = np.zeros(n_int)
    np.add.at(span, owner, np.abs(hi - lo))
    span[span == 0] = 1.0

    value = None
    error = np.zeros(n_int)
    count = 0
    while lo.size:
        k, err, at_floor = _kronrod(f, lo, hi, owner)
        if value is None:
            value = np.zeros(n_int, dtype=k.dtype)
        count += lo.size
        share = tol[owner] * np.abs(hi - lo) / span[owner]
        total = error.copy()
        np.add.at(total, owner, err)
        # a piece is final once it meets its share or its integral as a whole is converged
        done = (err <= share) | at_floor | (total[owner] <= tol[owner])
        np.add.at(value, owner[done], k[done])
        np.add.at(error, owner[done], err[done])
        if done.all():
            break
        if count > max_intervals:
            np.add.at(value, owner[~done], k[~done])
            np.add.at(error, owner[~done], err[~done])
            raise QuadratureError(
                f"adaptive quadrature did not converge; error estimate {error.max():.3g}"
            )
        lo, hi, owner = lo[~done], hi[~done], owner[~done]
        mid = 0.5 * (lo + hi)
        lo, hi = np.concatenate([lo, mid]), np.concatenate([mid, hi])
        owner = np.concatenate([owner, owner])
    if value is None:
        value = np.zeros(n_int)
    return value, error


def gauss_kronrod(f, a, b, tol=1e-12, breakpoints=(), max_intervals=200000):
    """Scalar convenience wrapper; ``f`` takes one array argument."""
    pts = np.unique(np.concatenate([[a, b], [p for p in breakpoints if a < p < b]]))
    value, error = gauss_kronrod_batch(
        lambda x, _: f(x), pts[:-1], pts[1:], tol, owner=np.zeros(pts.size - 1, dtype=int),
        max_intervals=max_intervals,
    )
    return value[0], error[0]


def gauss_jacobi(n, alpha, beta):
    """Nodes and weights for ``int_{-1}^{1} (1-t)**alpha (1+t)**beta f(t) dt``.

    Golub-Welsch on the Jacobi matrix of the monic Jacobi recurrence; exact for
    polynomials of degree ``2n - 1``.
    """
    if alpha <= -1 or beta <= -1:
        raise ValueError("Jacobi exponents must exceed -1")
    k = np.arange(n, dtype=float)
    s = alpha + beta
    denom = (2 * k + s) * (2 * k + s + 2)
    with np.errstate(invalid="ignore", divide="ignore"):
        diag = np.where(denom != 0, (beta ** 2 - alpha ** 2) / denom, 0.0)
    if n and s == 0:
        diag[0] = (beta - alpha) / (s + 2)
    j = k[1:]
    with np.errstate(invalid="ignore", divide="ignore"):
        off_sq = (4 * j * (j + alpha) * (j + beta) * (j + s)
                  / ((2 * j + s) ** 2 * (2 * j + s + 1) * (2 * j + s - 1)))
    if n > 1:
        # j = 1 with the removable factor (1 + s)/(1 + s) cancelled
        off_sq[0] = 4 * (1 + alpha) * (1 + beta) / ((2 + s) ** 2 * (3 + s))
    nodes, vecs = eigh_tridiagonal(diag, np.sqrt(off_sq))
    mu0 = math.exp((s + 1) * math.log(2.0) + math.lgamma(alpha + 1) + math.lgamma(beta + 1)
                   - math.lgamma(s + 2))
    weights = mu0 * vecs[0, :] ** 2
    return nodes, weights
