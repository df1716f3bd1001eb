"""Optimal constants and extremisers for radial L2 smoothing estimates.

Submodules
----------
specfun
    Gamma, Bessel and Gegenbauer functions.
model
    Problem instances ``(d, w, psi, phi)`` and their canonical form ``(d, w, sigma)``.
alpha
    Sector profiles ``alpha_k(rho)`` in closed form and by certified quadrature.
spectral
    Eigenvalues of the sphere operator behind the homogeneous problems.
optimize
    Suprema, optimal constants, extremiser verdicts and the ``k = 0`` conjecture.
cli
    The ``smoothconst`` command.
"""

from .alpha import alpha_k_closed, alpha_k_quad, make_profile
from .model import CanonicalProblem, SmoothingTriple, canonicalize, triple_from_json
from .optimize import classify_extremisers, conjecture_check, optimal_constant, solve_rho0

__version__ = "0.1.0"

__all__ = [
    "CanonicalProblem",
    "SmoothingTriple",
    "canonicalize",
    "triple_from_json",
    "alpha_k_closed",
    "alpha_k_quad",
    "make_profile",
    "optimal_constant",
    "classify_extremisers",
    "conjecture_check",
    "solve_rho0",
]
