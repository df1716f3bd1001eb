"""A weight for which the radial sector is not the worst one.

For many weights the largest sector profile is alpha_0, so radial data
decide the optimal constant. The unit-mass indicator of the thin shell
1 - 1/N < r < 1 + 1/N breaks this once N is large: alpha_0 never exceeds
1/pi, but alpha_1 does, near rho = pi where the spherical Bessel
combination xi(rho) = sin(rho)/rho - cos(rho) exceeds one.

Run:  python3 demos/counterexample.py
"""

import math

import numpy as np

from smoothconst import alpha as al
from smoothconst import optimize as opt
from smoothconst.model import CanonicalProblem, PowerSymbol, ScaledIndicator

print(f"1/pi = {1 / math.pi!r}")
for N in (2, 10, 100, 1000):
    rep = opt.counterexample_report(N)
    verdict = "alpha_0 dominates" if rep.holds else "alpha_1 wins"
    print(f"N = {N:5d}: sup alpha_0 = {rep.sup_alpha0:.12f}, "
          f"sup alpha_1 = {rep.alpha1_at_rho_star:.12f} at rho = {rep.rho_star:.6f}  -> {verdict}")

N, rep = opt.smallest_counterexample_n(candidates=(2, 3, 5, 10, 100))
print(f"smallest N among the candidates where alpha_1 exceeds 1/pi: {N}")
print(f"xi at the witness radius: {rep.xi_at_rho_star!r} (xi(pi) = {opt.xi(math.pi)!r})")

# The two profiles for N = 100 on a coarse grid, ready for plotting.
p = CanonicalProblem(3, ScaledIndicator(100.0), PowerSymbol(0.5, 0.0))
rho = np.linspace(0.5, 6.0, 12)
print("rho, alpha_0, alpha_1")
for r, a0, a1 in zip(rho, al.alpha_k_closed(p, 0, rho), al.alpha_k_closed(p, 1, rho)):
    print(f"{r:.3f}, {a0:.10f}, {a1:.10f}")
