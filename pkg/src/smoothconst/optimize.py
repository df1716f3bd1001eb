r"""Suprema of the sector profiles, optimal constants and extremiser verdicts.

The optimal constant is :math:`C = (2\pi\alpha)^{1/2}` with
:math:`\alpha = \sup_k \sup_\rho \alpha_k(\rho)`. The inner supremum is
found by a log-grid scan plus golden-section refinement and compared with
the analytic limits at both ends of the half-line. The outer supremum stops
early only when a catalogued argument covers every remaining degree.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .alpha import (
    CLOSED_FORM,
    DEFAULT_TOL,
    AlphaDomainError,
    AlphaProfile,
    alpha_limit_at_infinity,
    alpha_limit_at_zero,
    bound_alpha_k,
    homogeneous_exponent,
    index_monotone,
    make_profile,
)
from .errors import InternalInvariantError
from .model import (
    CanonicalProblem,
    HomogeneousPower,
    OnePlusRhoOverTwoRho,
    PowerSymbol,
    ScaledIndicator,
    SqrtOnePlusR2OverTwoRho,
    TrigModulated,
)

__all__ = [
    "PLATEAU_TOL",
    "SupResult",
    "ConstantReport",
    "ExtremiserVerdict",
    "RhoZeroSolution",
    "ConjectureResult",
    "CounterexampleReport",
    "sup_alpha_k",
    "optimal_constant",
    "upsilon",
    "solve_rho0",
    "alpha0_d5_one_plus_rho",
    "classify_extremisers",
    "conjecture_check",
    "counterexample_report",
    "smallest_counterexample_n",
    "xi",
]

PLATEAU_TOL = 1e-10
PLATEAU_MIN_POINTS = 5
CONJECTURE_MARGIN = 1e-10

INTERIOR = "interior"
AT_ZERO = "at_zero"
AT_INFINITY = "at_infinity"
PLATEAU = "plateau"


@dataclass(frozen=True)
class SupResult:
    """Supremum of one profile over ``rho`` in ``[0, inf)``.

    ``location`` is one of ``interior`` (attained at ``rho``), ``at_zero``,
    ``at_infinity`` (a one-sided limit) or ``plateau`` (constant on
    ``interval``).
    """

    k: int
    sup: float
    location: str
    rho: float = None
    interval: tuple = None
    uncertainty: float = 0.0
    path: str = CLOSED_FORM

    def to_dict(self):
        return {
            "k": self.k,
            "sup": self.sup,
            "location": self.location,
            "rho": self.rho,
            "interval": None if self.interval is None else list(self.interval),
            "uncertainty": self.uncertainty,
            "path": self.path,
        }


def _diverges_at_infinity(p, k):
    w, sigma = p.w, p.sigma
    if isinstance(w, HomogeneousPower) and isinstance(sigma, PowerSymbol):
        return sigma.coeff > 0 and homogeneous_exponent(p) > 0
    if w.integrable:
        return math.isinf(sigma.limit_at_infinity())
    return False


def _golden_max(f, lo, hi, iters=80):
    """Golden-section search for a maximum of ``f`` on ``[lo, hi]`` in log-rho."""
    g = 0.5 * (math.sqrt(5.0) - 1.0)
    a, b = math.log(lo), math.log(hi)
    c, d = b - g * (b - a), a + g * (b - a)
    fc, fd = f(math.exp(c)), f(math.exp(d))
    best = max((fc, c), (fd, d))
    for _ in range(iters):
        if b - a <= 1e-12 * max(1.0, abs(a)):
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - g * (b - a)
            fc = f(math.exp(c))
            best = max(best, (fc, c))
        else:
            a, c, fc = c, d, fd
            d = a + g * (b - a)
            fd = f(math.exp(d))
            best = max(best, (fd, d))
    return best[0], math.exp(best[1])


def _edge(f, inside, outside, target, iters=100):
    """Bisect in log-rho for the last point where ``f`` stays within tolerance of ``target``."""
    a, b = math.log(inside), math.log(outside)
    for _ in range(iters):
        m = 0.5 * (a + b)
        if abs(f(math.exp(m)) - target) <= PLATEAU_TOL:
            a = m
        else:
            b = m
        if abs(b - a) < 1e-13:
            break
    return math.exp(a)


def sup_alpha_k(profile: AlphaProfile, n_grid=2000, rho_min=1e-3, rho_max=1e3) -> SupResult:
    """Supremum of ``profile`` over ``[0, inf)``.

    Scans a log-spaced grid, detects plateaus (at least five consecutive
    grid values within ``1e-10`` of the maximum), refines isolated maxima by
    golden-section search and compares with the analytic limits. Suprema
    reached only as ``rho -> inf`` are reported as the analytic limit.
    """
    p, k = profile.problem, profile.k
    if _diverges_at_infinity(p, k):
        return SupResult(k, math.inf, AT_INFINITY, path=profile.path)
    lim0 = profile.limit_at_zero
    if lim0 is not None and math.isinf(lim0):
        return SupResult(k, math.inf, AT_ZERO, path=profile.path)
    lim_inf = profile.limit_at_infinity

    rho = np.geomspace(rho_min, rho_max, n_grid)
    vals, errs = profile.eval_with_error(rho)
    unc = float(np.max(errs)) if profile.path != CLOSED_FORM else 0.0
    i = int(np.argmax(vals))
    vmax = float(vals[i])

    def f(r):
        return float(profile.eval(r))

    near = np.abs(vals - vmax) <= PLATEAU_TOL
    start = i
    while start > 0 and near[start - 1]:
        start -= 1
    end = i
    while end < n_grid - 1 and near[end + 1]:
        end += 1
    touches_zero = start == 0 and lim0 is not None and abs(lim0 - vmax) <= PLATEAU_TOL
    touches_inf = end == n_grid - 1 and lim_inf is not None and abs(lim_inf - vmax) <= PLATEAU_TOL
    constant = (isinstance(p.w, HomogeneousPower) and isinstance(p.sigma, PowerSymbol)
                and homogeneous_exponent(p) == 0)

    if constant or (touches_zero and end == n_grid - 1):
        return SupResult(k, vmax, PLATEAU, interval=(0.0, math.inf), uncertainty=unc,
                         path=profile.path)
    if touches_inf:
        return SupResult(k, max(lim_inf, vmax), AT_INFINITY, uncertainty=unc, path=profile.path)
    if end - start + 1 >= PLATEAU_MIN_POINTS:
        lo = 0.0 if touches_zero else (rho[start] if start == 0 else _edge(f, rho[start], rho[start - 1], vmax))
        hi = _edge(f, rho[end], rho[end + 1], vmax) if end < n_grid - 1 else rho[end]
        return SupResult(k, vmax, PLATEAU, interval=(float(lo), float(hi)), uncertainty=unc,
                         path=profile.path)

    # isolated maximum: refine inside the neighbouring grid cells
    vbest, rbest = vmax, float(rho[i])
    if 0 < i < n_grid - 1:
        v, r = _golden_max(f, rho[i - 1], rho[i + 1])
        if v > vbest:
            vbest, rbest = v, r
    candidates = [(vbest, INTERIOR, rbest)]
    if lim0 is not None and i == 0 and lim0 >= vbest:
        candidates.append((lim0, AT_ZERO, None))
    if lim_inf is not None and i == n_grid - 1 and lim_inf >= vbest:
        candidates.append((lim_inf, AT_INFINITY, None))
    # limits can exceed an interior max without the grid edge being the argmax
    if lim0 is not None and lim0 > vbest + PLATEAU_TOL:
        candidates.append((lim0, AT_ZERO, None))
    if lim_inf is not None and lim_inf > vbest + PLATEAU_TOL:
        candidates.append((lim_inf, AT_INFINITY, None))
    order = {AT_INFINITY: 0, AT_ZERO: 1, INTERIOR: 2}
    sup, loc, r = max(candidates, key=lambda c: (c[0], -order[c[1]]))
    if loc == INTERIOR and i in (0, n_grid - 1):
        # monotone on the grid but no analytic limit reached: widen the uncertainty
        unc = max(unc, abs(float(vals[i]) - float(vals[i - 1 if i else 1])))
    return SupResult(k, sup, loc, rho=r, uncertainty=unc, path=profile.path)


# ------------------------------------------------------------ the constant


@dataclass(frozen=True)
class ConstantReport:
    alpha: float
    C: float
    attaining_k: int
    attaining_rho: object  # float, "at_zero", "at_infinity" or {"plateau": [lo, hi]}
    k_max_searched: int
    truncation: dict
    per_k: tuple = field(default_factory=tuple)

    def to_dict(self):
        return {
            "alpha": self.alpha,
            "C": self.C,
            "attaining_k": self.attaining_k,
            "attaining_rho": self.attaining_rho,
            "k_max_searched": self.k_max_searched,
            "truncation": self.truncation,
            "per_k": [s.to_dict() for s in self.per_k],
        }


def _attaining_rho(s: SupResult):
    if s.location == INTERIOR:
        return s.rho
    if s.location == PLATEAU:
        return {"plateau": list(s.interval)}
    return s.location


def optimal_constant(p: CanonicalProblem, k_max=64, n_grid=2000, tol=DEFAULT_TOL, threads=1,
                     path=None) -> ConstantReport:
    """``alpha = sup_k sup_rho alpha_k`` and ``C = (2 pi alpha)**0.5``.

    The scan over ``k`` stops early when the profiles decrease pointwise in
    ``k`` or when a catalogued bound for the next degree (non-increasing in
    ``k``) is at most the current best; otherwise it runs to ``k_max`` and the
    truncation is reported as heuristic. Ties go to the smaller ``k``.
    """
    per_k = []
    best = None
    truncation = {"kind": "heuristic"}
    monotone = index_monotone(p)
    for k in range(k_max + 1):
        prof = make_profile(p, k, path=path, tol=tol, threads=threads)
        s = sup_alpha_k(prof, n_grid=n_grid)
        per_k.append(s)
        if best is None or s.sup > best.sup * (1.0 + 1e-12):
            best = s
        if math.isinf(best.sup):
            truncation = {"kind": "certified", "bound": math.inf, "reason": "divergent"}
            break
        if monotone:
            truncation = {"kind": "certified", "bound": best.sup, "reason": "index_monotone"}
            break
        b = bound_alpha_k(p, k + 1)
        if b is not None and b <= best.sup:
            truncation = {"kind": "certified", "bound": b, "reason": "catalogued_bound"}
            break
        if k < k_max and isinstance(p.w, TrigModulated):
            raise AlphaDomainError(
                "trig-modulated weight: the k >= 1 bound does not certify the k = 0 supremum"
            )
    alpha = best.sup
    C = math.sqrt(2.0 * math.pi * alpha)
    return ConstantReport(alpha, C, best.k, _attaining_rho(best), per_k[-1].k, truncation,
                          tuple(per_k))


# ------------------------------------------------------- the d = 5 root


def upsilon(rho):
    """``(3 + 2r + 2r^2 + r^3) sinh r - r (3 + 2r + r^2) cosh r`` at ``r = rho``."""
    r = float(rho)
    if r < 0:
        raise ValueError("upsilon is defined for rho >= 0")
    A = 3.0 + r * (2.0 + r * (2.0 + r))
    B = r * (3.0 + r * (2.0 + r))
    if r <= 1.0:
        return A * math.sinh(r) - B * math.cosh(r)
    # A sinh - B cosh = (e^r / 2) ((A - B) - (A + B) e^{-2r}) with A - B = 3 - r
    inner = (3.0 - r) - (A + B) * math.exp(-2.0 * r)
    if r > 700.0:
        return math.copysign(math.inf, inner)
    return 0.5 * math.exp(r) * inner


def alpha0_d5_one_plus_rho(rho):
    """``alpha_0`` for ``((1 + r^2)^-1, (1 + r)^(1/2), r^2)`` in ``d = 5``, in elementary form."""
    r = float(rho)
    # rho cosh - sinh = e^r/2 ((r - 1) + (r + 1) e^{-2r})
    inner = 0.5 * ((r - 1.0) + (r + 1.0) * math.exp(-2.0 * r))
    return 0.5 * (1.0 + r) ** 2 * inner / r ** 3


@dataclass(frozen=True)
class RhoZeroSolution:
    rho0: float
    upsilon_residual: float
    bracket: tuple
    alpha0: float
    C: float

    def to_dict(self):
        return {"rho0": self.rho0, "upsilon_residual": self.upsilon_residual,
                "bracket": list(self.bracket), "alpha0": self.alpha0, "C": self.C}


def solve_rho0() -> RhoZeroSolution:
    """Unique positive root of ``upsilon`` and the resulting ``C_5``."""
    lo, hi = 2.0, 3.5
    if not (upsilon(lo) > 0 > upsilon(hi)):
        raise InternalInvariantError("upsilon does not change sign on [2, 3.5]")
    r0 = brentq(upsilon, lo, hi, xtol=1e-15, rtol=4.0 * np.finfo(float).eps, maxiter=200)
    res = abs(upsilon(r0))
    if not (2.0 < r0 < 3.0) or res > 1e-12 * math.cosh(r0):
        raise InternalInvariantError(f"root refinement failed: rho0={r0}, residual={res}")
    a0 = alpha0_d5_one_plus_rho(r0)
    return RhoZeroSolution(r0, res, (lo, hi), a0, math.sqrt(2.0 * math.pi * a0))


# ------------------------------------------------------------ extremisers


@dataclass(frozen=True)
class ExtremiserVerdict:
    kind: str
    k0: int = None
    interval: tuple = None
    rationale: tuple = ()
    heuristic: bool = False

    def to_dict(self):
        return {"kind": self.kind, "k0": self.k0,
                "interval": None if self.interval is None else list(self.interval),
                "rationale": list(self.rationale), "heuristic": self.heuristic}


def _analytic_symbol(sigma):
    return isinstance(sigma, (PowerSymbol, OnePlusRhoOverTwoRho, SqrtOnePlusR2OverTwoRho))


def _every_profile_nonconstant(p, n_grid, k_max, threads):
    """Reason why no ``alpha_k`` is constant, or None if that cannot be shown.

    An ``alpha_k`` whose limits at zero and infinity differ is not constant.
    The catalogued limits at zero are non-increasing in ``k`` and the limit at
    infinity does not depend on ``k``, so once the former drops below the
    latter every larger degree is covered. Degrees whose limits coincide are
    checked on the grid.
    """
    lim_inf = alpha_limit_at_infinity(p, 0)
    if lim_inf is None:
        return None
    on_grid = []
    for k in range(k_max + 1):
        z = alpha_limit_at_zero(p, k)
        if z is not None and z < lim_inf - 1e-12:
            if on_grid:
                return f"limits at 0 and inf differ except k in {on_grid} (non-constant on grid)"
            return "limits at 0 and inf differ for every k"
        if z is not None and abs(z - lim_inf) > 1e-12:
            continue
        vals = make_profile(p, k, threads=threads).eval(np.geomspace(1e-3, 1e3, n_grid))
        if float(np.max(vals) - np.min(vals)) <= 1e-8:
            return None
        on_grid.append(k)
    return None


def classify_extremisers(p: CanonicalProblem, n_grid=2000, k_max=64, threads=1) -> ExtremiserVerdict:
    """Decide whether extremisers exist, by family-specific rules where available."""
    w, sigma = p.w, p.sigma
    if isinstance(w, HomogeneousPower) and isinstance(sigma, PowerSymbol):
        if homogeneous_exponent(p) == 0:
            return ExtremiserVerdict("ExistsAllRadialProfiles", 0, (0.0, math.inf),
                                     ("alpha_k constant in rho", "alpha_k decreasing in k"))
        return ExtremiserVerdict("Unknown", rationale=("constant is infinite",))

    if (isinstance(w, TrigModulated) and p.d == 3 and isinstance(sigma, PowerSymbol)
            and sigma.exponent == -1.0):
        s0 = sup_alpha_k(make_profile(p, 0), n_grid=n_grid)
        b1 = bound_alpha_k(p, 1)
        if s0.location == PLATEAU and b1 < s0.sup:
            # the tent term vanishes exactly for 1/rho >= 2
            return ExtremiserVerdict("ExistsPlateau", 0, (0.0, 0.5),
                                     ("alpha_0 constant on [0, 1/2]",
                                      f"k>=1 bound {b1!r} < sup alpha_0 {s0.sup!r}"))
        return ExtremiserVerdict("Unknown", rationale=("plateau not confirmed",))

    if w.integrable and _analytic_symbol(sigma):
        reason = _every_profile_nonconstant(p, n_grid, k_max, threads)
        if reason is not None:
            return ExtremiserVerdict("NoneByAnalyticity", rationale=(
                "integrable weight", "rho sigma analytic", reason))

    report = optimal_constant(p, k_max=k_max, n_grid=n_grid, threads=threads)
    best = next(s for s in report.per_k if s.k == report.attaining_k)
    tags = ["numeric"]
    if report.truncation["kind"] == "heuristic":
        tags.append("heuristic k truncation")
    if best.location == PLATEAU:
        return ExtremiserVerdict("ExistsPlateau", best.k, best.interval, tuple(tags), True)
    if best.location == INTERIOR:
        return ExtremiserVerdict("NoneIsolatedSupremum", best.k, None,
                                 tuple(tags + ["isolated maximum"]), True)
    if best.location == AT_INFINITY:
        return ExtremiserVerdict("NoneSupremumAtInfinity", best.k, None, tuple(tags), True)
    if best.location == AT_ZERO:
        return ExtremiserVerdict("NoneIsolatedSupremum", best.k, None,
                                 tuple(tags + ["supremum only as rho -> 0"]), True)
    return ExtremiserVerdict("Unknown", rationale=tuple(tags), heuristic=True)


# ------------------------------------------------------ k = 0 conjecture


@dataclass(frozen=True)
class ConjectureResult:
    holds: bool
    sup_alpha0: float
    witness_k: int = None
    witness_rho: float = None
    witness_alpha: float = None
    k_max_searched: int = 0
    reason: str = ""

    def to_dict(self):
        return dict(self.__dict__)


def conjecture_check(p: CanonicalProblem, k_max=8, n_grid=2000, threads=1) -> ConjectureResult:
    """Test whether ``sup_rho alpha_0`` dominates every ``sup_rho alpha_k``, ``k <= k_max``.

    Fails with the smallest ``k`` whose supremum exceeds ``sup alpha_0`` by more
    than ``1e-10``; the witness radius is that profile's argmax.
    """
    s0 = sup_alpha_k(make_profile(p, 0, threads=threads), n_grid=n_grid)
    if index_monotone(p):
        return ConjectureResult(True, s0.sup, k_max_searched=0, reason="index_monotone")
    for k in range(1, k_max + 1):
        b = bound_alpha_k(p, k)
        if b is not None and b <= s0.sup:
            return ConjectureResult(True, s0.sup, k_max_searched=k, reason="catalogued_bound")
        s = sup_alpha_k(make_profile(p, k, threads=threads), n_grid=n_grid)
        if s.sup > s0.sup + CONJECTURE_MARGIN:
            return ConjectureResult(False, s0.sup, k, s.rho, s.sup, k, "exceeds")
    return ConjectureResult(True, s0.sup, k_max_searched=k_max, reason="searched")


def xi(rho):
    """``sin(rho)/rho - cos(rho)``."""
    return math.sin(rho) / rho - math.cos(rho)


@dataclass(frozen=True)
class CounterexampleReport:
    N: float
    sup_alpha0: float
    rho_star: float
    alpha1_at_rho_star: float
    xi_at_rho_star: float
    holds: bool

    def to_dict(self):
        return dict(self.__dict__)


def counterexample_report(N, n_grid=2000) -> CounterexampleReport:
    """Conjecture check for the scaled indicator in ``d = 3`` with ``sigma = 1/2``."""
    p = CanonicalProblem(3, ScaledIndicator(N), PowerSymbol(0.5, 0.0))
    res = conjecture_check(p, k_max=1, n_grid=n_grid)
    if res.holds:
        s1 = sup_alpha_k(make_profile(p, 1), n_grid=n_grid)
        rho_star, a1 = s1.rho, s1.sup
    else:
        rho_star, a1 = res.witness_rho, res.witness_alpha
    xi_star = None if rho_star is None else xi(rho_star)
    return CounterexampleReport(float(N), res.sup_alpha0, rho_star, a1, xi_star, res.holds)


def smallest_counterexample_n(candidates=(10, 100, 1000), n_grid=2000):
    """First ``N`` in ``candidates`` for which ``alpha_1`` exceeds ``1/pi``, with its report."""
    for N in candidates:
        rep = counterexample_report(N, n_grid=n_grid)
        if not rep.holds and rep.alpha1_at_rho_star > 1.0 / math.pi:
            return N, rep
    return None, None
