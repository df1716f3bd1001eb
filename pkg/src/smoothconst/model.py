r"""Problem instances ``(d, w, psi, phi)`` and their canonical form ``(d, w, sigma)``.

Two triples with the same weight and the same
:math:`\sigma = \psi^2/|\phi'|` have the same optimal constant, so every
computation downstream works on :class:`CanonicalProblem`. The grammar of
weights, smoothing functions and dispersions is a closed set of dataclasses;
there is no expression parser.

Dispersions are restricted to powers :math:`\phi(r) = c r^p`. Only
:math:`\phi(r) = r^2` combines with the non-power smoothing functions.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "ProblemError",
    "UnsupportedCombinationError",
    "HomogeneousPower",
    "InverseOnePlusR2",
    "ScaledIndicator",
    "TrigModulated",
    "TabulatedWeight",
    "PowerSymbol",
    "OnePlusRhoOverTwoRho",
    "SqrtOnePlusR2OverTwoRho",
    "TabulatedSymbol",
    "PowerPsi",
    "SqrtOnePlusR",
    "OnePlusR2Quarter",
    "TabulatedPsi",
    "PowerDispersion",
    "SmoothingTriple",
    "CanonicalProblem",
    "nu",
    "canonicalize",
    "weight_l1_norm",
    "triple_from_dict",
    "triple_from_json",
    "triple_to_dict",
]


class ProblemError(ValueError):
    """A problem instance is malformed or outside the supported grammar."""


class UnsupportedCombinationError(ProblemError):
    """The (psi, phi) pair has no representative in the symbol grammar."""


def _canonical_float(x):
    # one representative per class despite rounding in coeff**2/(c*p)
    x = float(f"{float(x):.15g}")
    return 0.0 if x == 0 else x


def _tuple_of_floats(values, name):
    try:
        out = tuple(float(v) for v in values)
    except (TypeError, ValueError) as exc:
        raise ProblemError(f"{name} must be a list of numbers") from exc
    if not all(math.isfinite(v) for v in out):
        raise ProblemError(f"{name} must be finite")
    return out


# ---------------------------------------------------------------- weights


@dataclass(frozen=True)
class HomogeneousPower:
    """``w(r) = r**(-mu)`` with ``1 < mu < d``."""

    mu: float
    kind = "homogeneous_power"
    integrable = False
    support = (0.0, math.inf)

    def __post_init__(self):
        if not (math.isfinite(self.mu) and self.mu > 1):
            raise ProblemError(f"homogeneous weight needs mu > 1, got {self.mu!r}")

    def __call__(self, r):
        return np.asarray(r, dtype=float) ** (-self.mu)

    def to_dict(self):
        return {"kind": self.kind, "mu": self.mu}


@dataclass(frozen=True)
class InverseOnePlusR2:
    """``w(r) = 1/(1 + r**2)``; analytic off the imaginary axis."""

    kind = "inverse_one_plus_r2"
    integrable = True
    support = (0.0, math.inf)
    analytic = True

    def __call__(self, r):
        r = np.asarray(r)
        return 1.0 / (1.0 + r * r)

    def to_dict(self):
        return {"kind": self.kind}


@dataclass(frozen=True)
class ScaledIndicator:
    """``w(r) = (N/2) * indicator(1 - 1/N < r < 1 + 1/N)``, unit mass."""

    N: float
    kind = "scaled_indicator"
    integrable = True
    analytic = False

    def __post_init__(self):
        if not (math.isfinite(self.N) and self.N > 1):
            raise ProblemError(f"scaled indicator needs N > 1, got {self.N!r}")

    @property
    def support(self):
        return (1.0 - 1.0 / self.N, 1.0 + 1.0 / self.N)

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        lo, hi = self.support
        return np.where((r > lo) & (r < hi), 0.5 * self.N, 0.0)

    def to_dict(self):
        return {"kind": self.kind, "N": self.N}


@dataclass(frozen=True)
class TrigModulated:
    """``w(r) = (mu - cos r) / r**2`` with ``mu > 1``; not integrable at 0."""

    mu: float
    kind = "trig_modulated"
    integrable = False
    support = (0.0, math.inf)

    def __post_init__(self):
        if not (math.isfinite(self.mu) and self.mu > 1):
            raise ProblemError(f"trig-modulated weight needs mu > 1, got {self.mu!r}")

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        return (self.mu - np.cos(r)) / (r * r)

    def to_dict(self):
        return {"kind": self.kind, "mu": self.mu}


@dataclass(frozen=True)
class TabulatedWeight:
    """Piecewise-linear weight through ``(r[i], w[i])``, zero outside ``[r[0], r[-1]]``.

    Use :meth:`from_function` to sample a callable on a log-spaced grid.
    """

    r: tuple
    w: tuple
    kind = "tabulated"
    integrable = True
    analytic = False

    def __post_init__(self):
        r = _tuple_of_floats(self.r, "tabulated r")
        w = _tuple_of_floats(self.w, "tabulated w")
        if len(r) != len(w) or len(r) < 2:
            raise ProblemError("tabulated weight needs matching r and w of length >= 2")
        if r[0] <= 0 or any(b <= a for a, b in zip(r, r[1:])):
            raise ProblemError("tabulated r must be positive and strictly increasing")
        if any(v < 0 for v in w):
            raise ProblemError("tabulated weight must be nonnegative")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "w", w)

    @classmethod
    def from_function(cls, f, r_min, r_max, n):
        r = np.geomspace(r_min, r_max, n)
        return cls(tuple(r), tuple(np.asarray(f(r), dtype=float)))

    @property
    def support(self):
        return (self.r[0], self.r[-1])

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        vals = np.interp(r, self.r, self.w)
        return np.where((r >= self.r[0]) & (r <= self.r[-1]), vals, 0.0)

    def to_dict(self):
        return {"kind": self.kind, "r": list(self.r), "w": list(self.w)}


# ---------------------------------------------------------------- symbols


@dataclass(frozen=True)
class PowerSymbol:
    """``sigma(rho) = coeff * rho**exponent``."""

    coeff: float
    exponent: float
    kind = "power"
    analytic = True

    def __call__(self, rho):
        return self.coeff * np.asarray(rho, dtype=float) ** self.exponent

    def rho_sigma(self, rho):
        return self.coeff * np.asarray(rho, dtype=float) ** (self.exponent + 1.0)

    def limit_at_infinity(self):
        if self.coeff == 0 or self.exponent < 0:
            return 0.0
        if self.exponent == 0:
            return self.coeff
        return math.inf

    def rho_sigma_at_zero(self):
        """Limit of ``rho * sigma(rho)`` as ``rho -> 0+``."""
        e = self.exponent + 1.0
        if self.coeff == 0 or e > 0:
            return 0.0
        if e == 0:
            return self.coeff
        return math.inf

    def to_dict(self):
        return {"kind": self.kind, "coeff": self.coeff, "exponent": self.exponent}


@dataclass(frozen=True)
class OnePlusRhoOverTwoRho:
    """``sigma(rho) = (1 + rho) / (2 rho)``."""

    kind = "one_plus_rho_over_two_rho"
    analytic = True

    def __call__(self, rho):
        rho = np.asarray(rho, dtype=float)
        return (1.0 + rho) / (2.0 * rho)

    def rho_sigma(self, rho):
        return 0.5 * (1.0 + np.asarray(rho, dtype=float))

    def limit_at_infinity(self):
        return 0.5

    def rho_sigma_at_zero(self):
        return 0.5

    def to_dict(self):
        return {"kind": self.kind}


@dataclass(frozen=True)
class SqrtOnePlusR2OverTwoRho:
    """``sigma(rho) = sqrt(1 + rho**2) / (2 rho)``."""

    kind = "sqrt_one_plus_rho2_over_two_rho"
    analytic = True

    def __call__(self, rho):
        rho = np.asarray(rho, dtype=float)
        return np.hypot(1.0, rho) / (2.0 * rho)

    def rho_sigma(self, rho):
        return 0.5 * np.hypot(1.0, np.asarray(rho, dtype=float))

    def limit_at_infinity(self):
        return 0.5

    def rho_sigma_at_zero(self):
        return 0.5

    def to_dict(self):
        return {"kind": self.kind}


@dataclass(frozen=True)
class TabulatedSymbol:
    """Piecewise-linear symbol, held constant beyond the sampled range."""

    rho: tuple
    sigma: tuple
    kind = "tabulated"
    analytic = False

    def __post_init__(self):
        rho = _tuple_of_floats(self.rho, "tabulated rho")
        sigma = _tuple_of_floats(self.sigma, "tabulated sigma")
        if len(rho) != len(sigma) or len(rho) < 2:
            raise ProblemError("tabulated symbol needs matching samples of length >= 2")
        if rho[0] <= 0 or any(b <= a for a, b in zip(rho, rho[1:])):
            raise ProblemError("tabulated rho must be positive and strictly increasing")
        if any(v < 0 for v in sigma):
            raise ProblemError("tabulated symbol must be nonnegative")
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "sigma", sigma)

    def __call__(self, rho):
        return np.interp(np.asarray(rho, dtype=float), self.rho, self.sigma)

    def rho_sigma(self, rho):
        rho = np.asarray(rho, dtype=float)
        return rho * self(rho)

    def limit_at_infinity(self):
        return self.sigma[-1]

    def rho_sigma_at_zero(self):
        return 0.0

    def to_dict(self):
        return {"kind": self.kind, "rho": list(self.rho), "sigma": list(self.sigma)}


# ------------------------------------------------- smoothing and dispersion


@dataclass(frozen=True)
class PowerPsi:
    """``psi(r) = coeff * r**a``."""

    a: float
    coeff: float = 1.0
    kind = "power"

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.coeff)):
            raise ProblemError("power psi needs finite a and coeff")
        if self.coeff < 0:
            raise ProblemError("power psi needs coeff >= 0")

    def to_dict(self):
        out = {"kind": self.kind, "a": self.a}
        if self.coeff != 1.0:
            out["coeff"] = self.coeff
        return out


@dataclass(frozen=True)
class SqrtOnePlusR:
    """``psi(r) = (1 + r)**(1/2)``."""

    kind = "sqrt_one_plus_r"

    def to_dict(self):
        return {"kind": self.kind}


@dataclass(frozen=True)
class OnePlusR2Quarter:
    """``psi(r) = (1 + r**2)**(1/4)``."""

    kind = "one_plus_r2_quarter"

    def to_dict(self):
        return {"kind": self.kind}


@dataclass(frozen=True)
class TabulatedPsi:
    r: tuple
    psi: tuple
    kind = "tabulated"

    def __post_init__(self):
        r = _tuple_of_floats(self.r, "tabulated psi r")
        psi = _tuple_of_floats(self.psi, "tabulated psi")
        if len(r) != len(psi) or len(r) < 2:
            raise ProblemError("tabulated psi needs matching samples of length >= 2")
        if r[0] <= 0 or any(b <= a for a, b in zip(r, r[1:])):
            raise ProblemError("tabulated psi r must be positive and strictly increasing")
        if any(v < 0 for v in psi):
            raise ProblemError("tabulated psi must be nonnegative")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "psi", psi)

    def to_dict(self):
        return {"kind": self.kind, "r": list(self.r), "psi": list(self.psi)}


@dataclass(frozen=True)
class PowerDispersion:
    """``phi(r) = coeff * r**exponent``; the default is the Schrödinger case ``r**2``."""

    coeff: float = 1.0
    exponent: float = 2.0

    def __post_init__(self):
        if not (math.isfinite(self.coeff) and math.isfinite(self.exponent)):
            raise ProblemError("dispersion needs finite coeff and exponent")
        if self.coeff == 0 or self.exponent <= 0:
            raise ProblemError("dispersion must be injective: coeff != 0, exponent > 0")

    @property
    def is_r2(self):
        return self.coeff == 1.0 and self.exponent == 2.0

    def to_dict(self):
        if self.is_r2:
            return "r2"
        return {"kind": "power", "coeff": self.coeff, "exponent": self.exponent}


# ---------------------------------------------------------------- problems


@dataclass(frozen=True)
class SmoothingTriple:
    d: int
    w: object
    psi: object
    phi: PowerDispersion = field(default_factory=PowerDispersion)

    def __post_init__(self):
        if isinstance(self.d, bool) or not isinstance(self.d, (int, np.integer)) or self.d < 2:
            raise ProblemError(f"dimension d must be an integer >= 2, got {self.d!r}")
        object.__setattr__(self, "d", int(self.d))
        if isinstance(self.w, HomogeneousPower) and not self.w.mu < self.d:
            raise ProblemError(f"homogeneous weight needs mu < d = {self.d}")


@dataclass(frozen=True)
class CanonicalProblem:
    d: int
    w: object
    sigma: object

    def to_dict(self):
        return {"d": self.d, "weight": self.w.to_dict(), "sigma": self.sigma.to_dict()}


def nu(d, k):
    """Bessel order ``d/2 + k - 1`` attached to harmonic degree ``k``."""
    return 0.5 * d + k - 1.0


def canonicalize(t):
    """Map a triple to its class representative ``(d, w, psi**2/|phi'|)``."""
    phi = t.phi
    scale = abs(phi.coeff * phi.exponent)
    psi = t.psi
    if isinstance(psi, PowerPsi):
        sigma = PowerSymbol(
            _canonical_float(psi.coeff ** 2 / scale),
            _canonical_float(2.0 * psi.a + 1.0 - phi.exponent),
        )
    elif isinstance(psi, TabulatedPsi):
        r = np.asarray(psi.r)
        vals = np.asarray(psi.psi) ** 2 / (scale * r ** (phi.exponent - 1.0))
        sigma = TabulatedSymbol(psi.r, tuple(_canonical_float(v) for v in vals))
    elif isinstance(psi, (SqrtOnePlusR, OnePlusR2Quarter)):
        if not phi.is_r2:
            raise UnsupportedCombinationError(
                f"psi kind {psi.kind!r} is only supported with phi = r^2"
            )
        sigma = OnePlusRhoOverTwoRho() if isinstance(psi, SqrtOnePlusR) else SqrtOnePlusR2OverTwoRho()
    else:
        raise UnsupportedCombinationError(f"unsupported smoothing function {psi!r}")
    return CanonicalProblem(t.d, t.w, sigma)


def weight_l1_norm(w):
    """``int_0^inf w(r) dr``; ``inf`` for non-integrable weights."""
    if isinstance(w, InverseOnePlusR2):
        return 0.5 * math.pi
    if isinstance(w, ScaledIndicator):
        return 1.0
    if isinstance(w, TabulatedWeight):
        # trapezoid is exact for the piecewise-linear interpolant
        return float(np.trapezoid(w.w, w.r))
    if isinstance(w, (HomogeneousPower, TrigModulated)):
        return math.inf
    raise ProblemError(f"unknown weight {w!r}")


# ------------------------------------------------------------------- JSON


def _require(obj, key, ctx):
    if not isinstance(obj, dict) or key not in obj:
        raise ProblemError(f"{ctx}: missing field {key!r}")
    return obj[key]


def _number(obj, key, ctx, default=None):
    if default is not None and key not in obj:
        return default
    v = _require(obj, key, ctx)
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ProblemError(f"{ctx}: field {key!r} must be a number")
    return float(v)


def _weight_from_dict(obj):
    kind = _require(obj, "kind", "weight")
    if kind == "homogeneous_power":
        return HomogeneousPower(_number(obj, "mu", "weight"))
    if kind == "inverse_one_plus_r2":
        return InverseOnePlusR2()
    if kind == "scaled_indicator":
        return ScaledIndicator(_number(obj, "N", "weight"))
    if kind == "trig_modulated":
        return TrigModulated(_number(obj, "mu", "weight"))
    if kind == "tabulated":
        return TabulatedWeight(_require(obj, "r", "weight"), _require(obj, "w", "weight"))
    raise ProblemError(f"unknown weight kind {kind!r}")


def _psi_from_dict(obj):
    kind = _require(obj, "kind", "psi")
    if kind == "power":
        return PowerPsi(_number(obj, "a", "psi"), _number(obj, "coeff", "psi", default=1.0))
    if kind == "sqrt_one_plus_r":
        return SqrtOnePlusR()
    if kind == "one_plus_r2_quarter":
        return OnePlusR2Quarter()
    if kind == "tabulated":
        return TabulatedPsi(_require(obj, "r", "psi"), _require(obj, "psi", "psi"))
    raise ProblemError(f"unknown psi kind {kind!r}")


def _phi_from_value(value):
    if value == "r2":
        return PowerDispersion()
    if isinstance(value, dict) and value.get("kind") == "power":
        return PowerDispersion(_number(value, "coeff", "phi", default=1.0),
                               _number(value, "exponent", "phi"))
    raise ProblemError(f"unsupported phi {value!r}")


def triple_from_dict(obj):
    """Build a :class:`SmoothingTriple` from the problem JSON document."""
    if not isinstance(obj, dict):
        raise ProblemError("problem must be a JSON object")
    d = _require(obj, "d", "problem")
    if isinstance(d, bool) or not isinstance(d, int):
        raise ProblemError("problem: d must be an integer")
    w = _weight_from_dict(_require(obj, "weight", "problem"))
    psi = _psi_from_dict(_require(obj, "psi", "problem"))
    phi = _phi_from_value(obj.get("phi", "r2"))
    return SmoothingTriple(d, w, psi, phi)


def triple_from_json(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemError(f"malformed problem JSON: {exc}") from exc
    return triple_from_dict(obj)


def triple_to_dict(t):
    return {"d": t.d, "weight": t.w.to_dict(), "psi": t.psi.to_dict(), "phi": t.phi.to_dict()}
