"""Optimal smoothing constants, computed two ways.

For a radial weight w and smoothing function psi, the optimal constant is
C = (2 pi sup_k sup_rho alpha_k(rho))^(1/2). This script walks through
three families: a homogeneous weight, where every profile is flat; the
weight 1/(1 + r^2) with psi = r^(1/2), whose supremum is reached only as
rho -> infinity; and the same weight with psi = (1 + r)^(1/2) in five
dimensions, where the supremum sits at an interior radius.

Run:  python3 demos/constants_tour.py
"""

import math

import numpy as np

from smoothconst import alpha as al
from smoothconst import optimize as opt
from smoothconst import spectral as sp
from smoothconst.model import HomogeneousPower, InverseOnePlusR2, PowerPsi, SmoothingTriple, SqrtOnePlusR, canonicalize


def show(title, report):
    print(f"{title}")
    print(f"    C = {report.C!r}  (alpha = {report.alpha!r})")
    print(f"    attained at k = {report.attaining_k}, rho = {report.attaining_rho}")
    print(f"    k-scan: {report.truncation}")


# Homogeneous weights r^(-2(1-a)) with psi = r^a: each alpha_k is constant
# in rho, so the supremum is a plateau over the whole half-line.
for d, a in [(3, 0.0), (4, 0.2), (6, -0.4)]:
    p = canonicalize(SmoothingTriple(d, HomogeneousPower(2 * (1 - a)), PowerPsi(a)))
    rep = opt.optimal_constant(p)
    show(f"homogeneous, d={d}, a={a}", rep)
    print(f"    Gamma-function formula: {sp.operator_norm_constant(d, a)!r}")

# The weight 1/(1 + r^2) with psi = r^(1/2): alpha_0 = rho I K(rho)/2 rises
# towards 1/4, giving C = (pi/2)^(1/2) in every dimension.
p = canonicalize(SmoothingTriple(3, InverseOnePlusR2(), PowerPsi(0.5)))
show("1/(1+r^2), psi = r^(1/2), d=3, closed form", opt.optimal_constant(p))
show("same problem, by certified quadrature", opt.optimal_constant(p, path=al.QUADRATURE))
print(f"    (pi/2)^(1/2) = {math.sqrt(math.pi / 2)!r}")

# The quadrature path carries an error certificate per radius.
value, cert = al.alpha_k_quad(p, 0, 1.0)
print(f"alpha_0(1) = {value!r}, certified error <= {cert.error_bound:.2e}, "
      f"closed form {al.alpha_k_closed(p, 0, 1.0)!r}")

# psi = (1 + r)^(1/2) in d = 5: the profile peaks at an interior radius,
# which is also the positive root of an elementary transcendental equation.
p5 = canonicalize(SmoothingTriple(5, InverseOnePlusR2(), SqrtOnePlusR()))
rep = opt.optimal_constant(p5)
sol = opt.solve_rho0()
show("1/(1+r^2), psi = (1+r)^(1/2), d=5, sup search", rep)
print(f"    root route: rho0 = {sol.rho0!r}, C = {sol.C!r}, residual {sol.upsilon_residual:.1e}")

rho = np.array([1.0, 2.0, sol.rho0, 3.0, 5.0])
print("    alpha_0 near the peak:", np.round(al.alpha_k_closed(p5, 0, rho), 12))
