r"""The sector profiles :math:`\alpha_k(\rho)` and their auxiliary integrals.

For a canonical problem ``(d, w, sigma)`` and harmonic degree ``k``

.. math::

    \alpha_k(\rho) = \rho\,\sigma(\rho) \int_0^\infty J_\nu(r\rho)^2\, r\, w(r)\, dr,
    \qquad \nu = d/2 + k - 1 .

Catalogued families have exact expressions (:func:`alpha_k_closed`); every
integrable weight can also be integrated numerically (:func:`alpha_k_quad`),
which keeps a certificate of the error it commits.

The quadrature works in the variable ``u = r rho``, where the integral reads
``int u J_nu(u)**2 W(u) du`` with ``W(u) = w(u/rho)/rho``. Bounded supports
are covered exactly by adaptive Gauss-Kronrod. For the analytic weight
``1/(1 + r**2)`` the range ``u > U`` uses the Hankel expansion
``u J_nu(u)**2 = (|H|**2 + Re(H**2 e^{2i(u - l)}))/pi`` with ``H = P + iQ``:
the first part is smooth and is integrated after ``u = U/s``, and the
oscillating part is rotated onto the vertical ray ``U + it`` where it decays
like ``e^{-2t}``.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import specfun
from ._quadrature import QuadratureError, gauss_kronrod_batch
from .errors import ToleranceNotMetError
from .model import (
    CanonicalProblem,
    HomogeneousPower,
    InverseOnePlusR2,
    OnePlusRhoOverTwoRho,
    PowerSymbol,
    ScaledIndicator,
    SqrtOnePlusR2OverTwoRho,
    TabulatedWeight,
    TrigModulated,
    nu as bessel_order,
    weight_l1_norm,
)

__all__ = [
    "CLOSED_FORM",
    "QUADRATURE",
    "AlphaDomainError",
    "ToleranceNotMetError",
    "QuadratureCertificate",
    "AlphaProfile",
    "beta_k",
    "jl2_integral",
    "jl2_integral_quad",
    "alpha_k_closed",
    "alpha_k_quad",
    "alpha_k_quad_many",
    "alpha_limit_at_zero",
    "alpha_limit_at_infinity",
    "bound_alpha_k",
    "index_monotone",
    "homogeneous_exponent",
    "make_profile",
    "profile_csv",
]

CLOSED_FORM = "closed_form"
QUADRATURE = "quadrature"
DEFAULT_TOL = 1e-9

# radii per quadrature batch; fixed so results never depend on the thread count
_CHUNK = 64


class AlphaDomainError(ValueError):
    """The requested evaluation path does not apply to this problem."""


@dataclass(frozen=True)
class QuadratureCertificate:
    """Bookkeeping for one quadrature value of ``alpha_k(rho)``.

    ``interior`` and ``tail`` are the contributions from ``r < R`` and
    ``r > R`` (already multiplied by ``sigma``); ``error_bound`` is the
    absolute error bound of their sum.
    """

    interior: float
    tail: float
    error_bound: float
    split_radius: float


def beta_k(d, k, rho):
    r""":math:`\beta_k(\rho) = \rho I_\nu(\rho) K_\nu(\rho)`, with the limits 0 at 0 and 1/2 at infinity."""
    nuv = bessel_order(d, k)
    rho_arr = np.asarray(rho, dtype=float)
    out = np.empty(rho_arr.shape)
    zero = rho_arr == 0
    inf = np.isinf(rho_arr)
    pos = ~(zero | inf)
    out[zero] = 0.0
    out[inf] = 0.5
    if np.any(pos):
        out[pos] = rho_arr[pos] * specfun.bessel_ik_product(nuv, rho_arr[pos])
    return float(out) if np.ndim(rho) == 0 else out


def jl2_integral(nuv, lam):
    r""":math:`\int_0^\infty J_\nu(r)^2 r^{-\lambda} dr` for :math:`0 < \lambda < 2\nu + 1`."""
    if not 0 < lam < 2 * nuv + 1:
        raise specfun.SpecialFunctionError(
            f"integral of J_nu^2 r^-lambda diverges unless 0 < lambda < 2 nu + 1 (nu={nuv}, lambda={lam})"
        )
    h = 0.5 * lam + 0.5
    return specfun.gamma_ratio([lam, nuv - 0.5 * lam + 0.5], [h, h, nuv + h]) / 2.0 ** lam


# ------------------------------------------------------------ closed forms


def homogeneous_exponent(p):
    """Exponent ``e`` with ``alpha_k(rho) = const * rho**e`` for homogeneous weights and power symbols.

    Rounded to 12 decimals so that matched problems give exactly zero.
    """
    return round(p.sigma.exponent + p.w.mu - 1.0, 12) + 0.0


def _one_minus_sinc(b):
    small = np.abs(b) < 0.1
    bs = np.where(small, b, 0.0)
    b2 = bs * bs
    series = b2 / 6.0 * (1.0 - b2 / 20.0 * (1.0 - b2 / 42.0 * (1.0 - b2 / 72.0)))
    bd = np.where(small, 1.0, b)
    return np.where(small, series, 1.0 - np.sin(bd) / bd)


def _indicator_k0(N, rho):
    # 2 pi alpha_0 = 1 - cos(2 rho) sinc(2 rho / N) for sigma = 1/2
    a = 2.0 * rho
    b = a / N
    val = 2.0 * np.sin(0.5 * a) ** 2 + np.cos(a) * _one_minus_sinc(b)
    return val / (2.0 * math.pi)


def _xi_squared_antiderivative(u):
    # G(u) = int_0^u (sin v/v - cos v)^2 dv
    u = np.asarray(u, dtype=float)
    small = u < 1.0
    us = np.where(small, u, 0.0)
    coeffs = [(-1.0) ** (m + 1) * 2 * m / math.factorial(2 * m + 1) for m in range(1, 10)]
    series = np.zeros_like(us)
    for i, am in enumerate(coeffs, start=1):
        for j, an in enumerate(coeffs, start=1):
            p = 2 * (i + j) + 1
            series = series + am * an * us ** p / p
    ud = np.where(small, 1.0, u)
    direct = 0.5 * ud + 0.25 * np.sin(2.0 * ud) - np.sin(ud) ** 2 / ud
    return np.where(small, series, direct)


def _indicator_k1(N, rho):
    # (N / (2 pi rho)) int_{rho(1-1/N)}^{rho(1+1/N)} (sin u/u - cos u)^2 du for sigma = 1/2
    rho = np.asarray(rho, dtype=float)
    lo, hi = rho * (1.0 - 1.0 / N), rho * (1.0 + 1.0 / N)
    diff = _xi_squared_antiderivative(hi) - _xi_squared_antiderivative(lo)
    safe = np.where(rho > 0, rho, 1.0)
    return np.where(rho > 0, N * diff / (2.0 * math.pi * safe), 0.0)


def _tent(r):
    r = np.abs(r)
    return np.where(r <= 2.0, 2.0 - r, 0.0)


def _closed_form(p, k):
    """Vectorized ``rho -> alpha_k(rho)`` valid for ``rho > 0``, or None."""
    w, sigma, d = p.w, p.sigma, p.d
    nuv = bessel_order(d, k)
    if isinstance(w, HomogeneousPower):
        if not isinstance(sigma, PowerSymbol):
            return None
        const = sigma.coeff * jl2_integral(nuv, w.mu - 1.0)
        power = homogeneous_exponent(p)
        if power == 0:
            return lambda rho: np.full(np.shape(rho), const)
        return lambda rho: const * np.asarray(rho, dtype=float) ** power
    if isinstance(w, InverseOnePlusR2):
        return lambda rho: sigma.rho_sigma(rho) * specfun.bessel_ik_product(nuv, rho)
    if isinstance(w, ScaledIndicator) and d == 3 and k in (0, 1):
        base = _indicator_k0 if k == 0 else _indicator_k1
        return lambda rho: 2.0 * sigma(rho) * base(w.N, np.asarray(rho, dtype=float))
    if isinstance(w, TrigModulated) and d == 3 and k == 0:
        mu = w.mu
        return lambda rho: (2.0 * sigma.rho_sigma(rho)
                            * (0.5 * mu - 0.25 * _tent(1.0 / np.asarray(rho, dtype=float))))
    return None


def _apply_with_zero(p, k, f, rho):
    rho_arr = np.asarray(rho, dtype=float)
    if np.any(rho_arr < 0) or np.any(~np.isfinite(rho_arr)):
        raise AlphaDomainError("alpha_k is defined for finite rho >= 0")
    out = np.empty(rho_arr.shape)
    zero = rho_arr == 0
    if np.any(zero):
        lim = alpha_limit_at_zero(p, k)
        out[zero] = math.nan if lim is None else lim
    if np.any(~zero):
        out[~zero] = f(rho_arr[~zero])
    return float(out) if np.ndim(rho) == 0 else out


def alpha_k_closed(p: CanonicalProblem, k: int, rho):
    """Exact ``alpha_k(rho)`` for catalogued families; ``None`` otherwise.

    Catalogued: homogeneous weights with power symbols (any ``d, k``),
    ``1/(1 + r**2)`` with any symbol (any ``d, k``), the scaled indicator for
    ``d = 3, k <= 1`` and the trigonometric weight for ``d = 3, k = 0``.
    ``rho`` may be an array; ``rho = 0`` returns the limit from the right.
    """
    f = _closed_form(p, k)
    if f is None:
        return None
    return _apply_with_zero(p, k, f, rho)


# ------------------------------------------------------------------ limits


def alpha_limit_at_zero(p: CanonicalProblem, k: int):
    """``lim alpha_k(rho)`` as ``rho -> 0+``; ``math.inf`` when it diverges, None if unknown."""
    w, sigma = p.w, p.sigma
    nuv = bessel_order(p.d, k)
    s0 = sigma.rho_sigma_at_zero()
    if isinstance(w, HomogeneousPower):
        if not isinstance(sigma, PowerSymbol):
            return None
        power = homogeneous_exponent(p)
        const = sigma.coeff * jl2_integral(nuv, w.mu - 1.0)
        if power == 0 or const == 0:
            return const
        return 0.0 if power > 0 else math.inf
    if isinstance(w, InverseOnePlusR2):
        # rho sigma(rho) I_nu K_nu(rho), and I_nu K_nu -> 1/(2 nu)
        if s0 == 0:
            return 0.0
        if nuv == 0 or math.isinf(s0):
            return math.inf
        return s0 / (2.0 * nuv)
    if isinstance(w, TrigModulated):
        # Riemann-Lebesgue removes the cosine, leaving s0 * mu * jl2(nu, 1)
        if s0 == 0:
            return 0.0
        if nuv == 0 or math.isinf(s0):
            return math.inf
        return s0 * w.mu / (2.0 * nuv)
    if isinstance(w, (ScaledIndicator, TabulatedWeight)):
        # alpha ~ rho sigma(rho) rho^(2 nu) (1/2)^(2 nu) / Gamma(nu+1)^2 int r^(2 nu + 1) w dr
        if not isinstance(sigma, PowerSymbol):
            return 0.0
        power = sigma.exponent + 1.0 + 2.0 * nuv
        if sigma.coeff == 0 or power > 0:
            return 0.0
        if power < 0:
            return math.inf
        lo, hi = w.support
        r = np.linspace(lo, hi, 2001) if isinstance(w, ScaledIndicator) else np.asarray(w.r)
        vals = w(r) if isinstance(w, TabulatedWeight) else np.full(r.shape, 0.5 * w.N)
        moment = float(np.trapezoid(r ** (2 * nuv + 1) * vals, r))
        return sigma.coeff * moment / (4.0 ** nuv * math.gamma(nuv + 1.0) ** 2)
    return None


def alpha_limit_at_infinity(p: CanonicalProblem, k: int):
    """``sigma_inf * ||w||_1 / pi`` for integrable weights; None otherwise.

    The value does not depend on ``k``.
    """
    if not p.w.integrable:
        return None
    s_inf = p.sigma.limit_at_infinity()
    if not math.isfinite(s_inf):
        return None
    return s_inf * weight_l1_norm(p.w) / math.pi


# ------------------------------------------------------------------ bounds


def bound_alpha_k(p: CanonicalProblem, k: int):
    """Catalogued upper bound for ``sup_rho alpha_k(rho)``, or None.

    Every catalogued bound is non-increasing in ``k``, so a bound at ``k``
    also covers every larger degree.
    """
    w, sigma = p.w, p.sigma
    nuv = bessel_order(p.d, k)
    if isinstance(w, TrigModulated):
        # sigma = c/rho: alpha_k <= c (mu + 1) int J_nu^2 / u du = c (mu + 1)/(2 nu)
        if isinstance(sigma, PowerSymbol) and sigma.exponent == -1.0 and nuv > 0:
            return sigma.coeff * (w.mu + 1.0) / (2.0 * nuv)
        return None
    if isinstance(w, HomogeneousPower):
        if isinstance(sigma, PowerSymbol) and homogeneous_exponent(p) == 0:
            return sigma.coeff * jl2_integral(nuv, w.mu - 1.0)
        return None
    if isinstance(w, InverseOnePlusR2):
        # I_nu K_nu(rho) <= min(1/(2 nu), 1/(2 rho)); maximise rho sigma(rho) times that
        if isinstance(sigma, PowerSymbol):
            e = sigma.exponent
            if e == 0:
                return 0.5 * sigma.coeff
            if nuv > 0 and -1.0 <= e < 0:
                return 0.5 * sigma.coeff * nuv ** e
            return None
        if nuv == 0:
            return None
        if isinstance(sigma, OnePlusRhoOverTwoRho):
            return (1.0 + nuv) / (4.0 * nuv)
        if isinstance(sigma, SqrtOnePlusR2OverTwoRho):
            return math.hypot(1.0, nuv) / (4.0 * nuv)
    return None


def index_monotone(p: CanonicalProblem):
    """True when ``alpha_{k+1}(rho) <= alpha_k(rho)`` holds pointwise for every ``k``.

    Holds for ``1/(1 + r**2)`` (``I_nu K_nu`` decreases in ``nu``) and for
    matched homogeneous problems (constant profiles decreasing in ``k``).
    """
    if isinstance(p.w, InverseOnePlusR2):
        return True
    if isinstance(p.w, HomogeneousPower) and isinstance(p.sigma, PowerSymbol):
        return homogeneous_exponent(p) == 0
    return False


# -------------------------------------------------------------- quadrature


def _tail_start(nuv):
    return max(40.0, 0.5 * nuv * nuv)


def _sigma_at(sigma, rho):
    return np.asarray(sigma(rho), dtype=float)


def _quad_chunk(p, k, rho, tol):
    """Quadrature for a 1-d array of positive radii; returns values and certificate columns."""
    w, sigma = p.w, p.sigma
    nuv = bessel_order(p.d, k)
    n = rho.size
    sig = _sigma_at(sigma, rho)
    # tolerance on the u-integral, so that sigma times its error stays below tol
    tol_u = np.where(sig > 0, tol / np.where(sig > 0, sig, 1.0), 1.0)

    def interior_f(u, owner):
        r = rho[owner]
        return u * specfun.bessel_j(nuv, u) ** 2 * w(u / r) / r

    if isinstance(w, InverseOnePlusR2):
        U = _tail_start(nuv)
        edges = [np.zeros(n), np.minimum(rho, U), np.full(n, U)]
    else:
        lo_s, hi_s = w.support
        pts = [lo_s, hi_s] if not isinstance(w, TabulatedWeight) else list(w.r)
        edges = [rho * s for s in pts]
        U = None
    lo = np.concatenate(edges[:-1])
    hi = np.concatenate(edges[1:])
    owner = np.tile(np.arange(n), len(edges) - 1)
    keep = hi > lo
    interior, e_int = gauss_kronrod_batch(interior_f, lo[keep], hi[keep], 0.5 * tol_u,
                                          owner=owner[keep], n_integrals=n)

    tail = np.zeros(n)
    e_tail = np.zeros(n)
    if U is not None:
        tail, e_tail = _analytic_tail(nuv, rho, U, tol_u)

    values = sig * (interior + tail)
    # rounding in the Bessel values is relative, below the quadrature estimates except near eps
    err = sig * (e_int + e_tail) + 1e-14 * np.abs(values)
    # bounded supports need no tail: report the support edge as the split
    R = np.full(n, w.support[1]) if U is None else U / rho
    return values, sig * interior, sig * tail, err, R


def _hankel_tail(nuv, W, U, tol_u, w_tail):
    """``int_U^inf u J_nu(u)^2 W(u) du`` for ``W`` analytic and decaying in ``Re z >= U``.

    ``W(z, owner)`` must accept complex ``z``; ``w_tail[i]`` bounds
    ``int_U^inf |W| du`` for integral ``i``.
    """
    n = tol_u.size
    idx = np.arange(n)
    t_max = 20.0

    def smooth_f(s, owner):
        u = U / s
        P, Q, _ = specfun.hankel_pq(nuv, u)
        return np.real(W(u, owner)) * (P * P + Q * Q) * U / (s * s)

    def rotated_f(t, owner):
        z = U + 1j * t
        P, Q, _ = specfun.hankel_pq(nuv, z)
        H = P + 1j * Q
        return W(z, owner) * H * H * np.exp(-2.0 * t)

    def rotated_abs(t, owner):
        return np.abs(W(U + 1j * t, owner)) * np.exp(-2.0 * t)

    zeros, ones = np.zeros(n), np.ones(n)
    smooth, e_smooth = gauss_kronrod_batch(smooth_f, zeros, ones, 0.125 * math.pi * tol_u, owner=idx)
    rot, e_rot = gauss_kronrod_batch(rotated_f, zeros, np.full(n, t_max), 0.125 * math.pi * tol_u,
                                     owner=idx)
    path_abs, _ = gauss_kronrod_batch(rotated_abs, zeros, np.full(n, t_max), 1e-3, owner=idx)
    cphi, sphi = specfun._phase_cos_sin(nuv)
    # e^{2i(U - l)} with l = (nu/2 + 1/4) pi
    phase = np.exp(2j * U) * (cphi - 1j * sphi) ** 2
    oscill = np.real(1j * phase * rot)
    _, _, eps_pq = specfun.hankel_pq(nuv, np.array([U]))
    eps_pq = float(eps_pq[0])
    tail = (smooth + oscill) / math.pi
    err = (e_smooth + np.abs(e_rot)) / math.pi
    if eps_pq > 0:
        # |H|^2 and Re(H^2 ...) each move by at most 2 eps (1 + eps) + eps^2 per unit weight
        delta = 4.0 * eps_pq * (1.0 + eps_pq) + 2.0 * eps_pq ** 2
        err = err + delta * (w_tail + 1.1 * path_abs) / math.pi
    # truncation of the rotated ray at t_max
    err = err + 1.1 * path_abs * math.exp(-2.0 * t_max) / math.pi
    return tail, err


def _analytic_tail(nuv, rho, U, tol_u):
    def W(z, owner):
        r = rho[owner]
        return r / (r * r + z * z)

    return _hankel_tail(nuv, W, U, tol_u, 0.5 * math.pi - np.arctan(U / rho))


def jl2_integral_quad(nuv, lam, tol=1e-12):
    r"""Quadrature value of :math:`\int_0^\infty J_\nu(r)^2 r^{-\lambda} dr` and its error bound.

    An independent route to :func:`jl2_integral`.
    """
    if not 0 < lam < 2 * nuv + 1:
        raise specfun.SpecialFunctionError("integral diverges outside 0 < lambda < 2 nu + 1")
    U = _tail_start(nuv)
    pts = np.array([0.0, 1.0, U])
    head, e_head = gauss_kronrod_batch(
        lambda u, _: specfun.bessel_j(nuv, u) ** 2 * u ** (-lam), pts[:-1], pts[1:], 0.5 * tol,
        owner=np.zeros(2, dtype=int),
    )
    # u J^2 u^(-1-lam): the tail weight is z^(-1-lam)
    tail, e_tail = _hankel_tail(nuv, lambda z, _: z ** (-1.0 - lam), U, np.array([tol]),
                                np.array([U ** (-lam) / lam]))
    return float(head[0] + tail[0]), float(e_head[0] + e_tail[0])


def _check_quadrature_domain(p):
    if not p.w.integrable:
        raise AlphaDomainError(
            f"weight {p.w.kind!r} is not integrable; use alpha_k_closed for it"
        )


def alpha_k_quad_many(p: CanonicalProblem, k: int, rho, tol=DEFAULT_TOL, threads=1):
    """Quadrature for an array of radii.

    Returns
    -------
    values, interior, tail, error_bound, split_radius : ndarray
        One entry per radius; ``rho = 0`` rows hold the limit and zero error.
    """
    _check_quadrature_domain(p)
    rho = np.atleast_1d(np.asarray(rho, dtype=float))
    if np.any(rho < 0) or np.any(~np.isfinite(rho)):
        raise AlphaDomainError("alpha_k is defined for finite rho >= 0")
    n = rho.size
    cols = [np.zeros(n) for _ in range(5)]
    pos = np.flatnonzero(rho > 0)
    zero = rho == 0
    if np.any(zero):
        cols[0][zero] = alpha_limit_at_zero(p, k)
        cols[4][zero] = math.inf
    chunks = [pos[i:i + _CHUNK] for i in range(0, pos.size, _CHUNK)]

    def run(ix):
        return ix, _quad_chunk(p, k, rho[ix], tol)

    try:
        if threads > 1 and len(chunks) > 1:
            with ThreadPoolExecutor(max_workers=threads) as ex:
                results = list(ex.map(run, chunks))
        else:
            results = [run(ix) for ix in chunks]
    except QuadratureError as exc:
        raise ToleranceNotMetError(str(exc)) from exc
    for ix, res in results:
        for c, v in zip(cols, res):
            c[ix] = v
    return tuple(cols)


def alpha_k_quad(p: CanonicalProblem, k: int, rho: float, tol=DEFAULT_TOL):
    """``alpha_k(rho)`` by certified quadrature.

    Raises
    ------
    AlphaDomainError
        For non-integrable weights.
    ToleranceNotMetError
        When the certified bound exceeds ``tol``.
    """
    values, interior, tail, err, R = alpha_k_quad_many(p, k, [rho], tol)
    cert = QuadratureCertificate(float(interior[0]), float(tail[0]), float(err[0]), float(R[0]))
    if cert.error_bound > tol:
        raise ToleranceNotMetError(
            f"certified bound {cert.error_bound:.3g} exceeds tol {tol:.3g} at rho={rho}"
        )
    return float(values[0]), cert


# ----------------------------------------------------------------- profile


@dataclass(frozen=True)
class AlphaProfile:
    """Callable view of ``rho -> alpha_k(rho)`` for one problem and degree."""

    problem: CanonicalProblem
    k: int
    path: str
    limit_at_zero: float
    limit_at_infinity: float
    tol: float = DEFAULT_TOL
    threads: int = 1

    @property
    def d(self):
        return self.problem.d

    def eval(self, rho):
        return self.eval_with_error(rho)[0]

    def eval_with_error(self, rho):
        """Values and absolute error bounds (zero on the closed-form path)."""
        scalar = np.ndim(rho) == 0
        rho = np.atleast_1d(np.asarray(rho, dtype=float))
        if self.path == CLOSED_FORM:
            vals = np.atleast_1d(alpha_k_closed(self.problem, self.k, rho))
            errs = np.zeros(rho.shape)
        else:
            vals, _, _, errs, _ = alpha_k_quad_many(self.problem, self.k, rho, self.tol,
                                                     threads=self.threads)
        if scalar:
            return float(vals[0]), float(errs[0])
        return vals, errs


def make_profile(p: CanonicalProblem, k: int, path=None, tol=DEFAULT_TOL, threads=1):
    """Build an :class:`AlphaProfile`, preferring the closed form when one exists."""
    if path is None:
        path = CLOSED_FORM if _closed_form(p, k) is not None else QUADRATURE
    if path == CLOSED_FORM and _closed_form(p, k) is None:
        raise AlphaDomainError(f"no closed form for {p.w.kind!r} with d={p.d}, k={k}")
    if path == QUADRATURE:
        _check_quadrature_domain(p)
    if path not in (CLOSED_FORM, QUADRATURE):
        raise ValueError(f"unknown evaluation path {path!r}")
    return AlphaProfile(p, k, path, alpha_limit_at_zero(p, k), alpha_limit_at_infinity(p, k),
                        tol, threads)


def profile_csv(profile: AlphaProfile, rho):
    """CSV text with columns ``k,rho,alpha,path,err_bound``."""
    rho = np.atleast_1d(np.asarray(rho, dtype=float))
    vals, errs = profile.eval_with_error(rho)
    lines = ["k,rho,alpha,path,err_bound"]
    for r, v, e in zip(rho, vals, errs):
        lines.append(f"{profile.k},{float(r)!r},{float(v)!r},{profile.path},{float(e)!r}")
    return "\n".join(lines) + "\n"
