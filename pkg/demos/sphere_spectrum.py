"""The sphere operator behind homogeneous smoothing estimates.

For the homogeneous weights the optimal constant is the top eigenvalue of
an integral operator on the sphere with kernel (1/2)|theta - omega|^-(d+2a-2).
Its eigenvalues on degree-k harmonics have a Gamma-function closed form;
this script compares them with direct Funk-Hecke quadrature, shows the
scaled S*S eigenvalue matching (2 pi)^d C^2, and shows how slowly the
spectrum decays when a is close to 1/2: lambda_k behaves like k^(2a-1).

Run:  python3 demos/sphere_spectrum.py
"""

import math

from smoothconst import spectral as sp

table = sp.eigenvalue_table(5, 0.2, 8)
print("d = 5, a = 0.2")
print(" k   closed form          quadrature           rel. diff")
for e in table.entries:
    print(f"{e.k:2d}   {e.lambda_closed:.15f}   {e.lambda_quad:.15f}   {e.rel_diff:.1e}")

for d, a in [(3, 0.0), (4, 0.2), (6, -0.4)]:
    lhs = sp.sstars_eigenvalue(d, a, 0)
    rhs = (2 * math.pi) ** d * sp.operator_norm_constant(d, a) ** 2
    print(f"d={d}, a={a}: top S*S eigenvalue {lhs!r} vs (2 pi)^d C^2 {rhs!r}")

print("\ndecay of lambda_k / lambda_0")
for a in (-0.4, 0.0, 0.2, 0.45):
    lam = sp.lambda_sequence(5, a, 400)
    ratios = ", ".join(f"k={k}: {lam[k] / lam[0]:.3f}" for k in (10, 40, 400))
    print(f"  d=5, a={a:5}: {ratios}   (rate k^{2 * a - 1:+.1f})")
