"""Build the Laguerre-Sobolev basis and inspect its first members.

The polynomials S_n are produced by one forward recursion from the classical
Laguerre family: S_n = L_n^{(1)} - a_{n-1} S_{n-1}.  The scalar coefficients
a_n come from a two-term recurrence, but they also have a closed form as a
ratio of Laguerre values at -4*lambda -- both are printed side by side.
"""

import numpy as np

from lagsob import (
    connection_asymptotic,
    connection_ratio,
    sobolev_basis,
    sobolev_coeffs,
    sobolev_eval,
)

lam = 1.0
basis = sobolev_basis(lam, 10)

print(f"lambda = {lam}")
print("\nFirst Sobolev polynomials (monomial coefficients, constant term first):")
for n in range(5):
    c = sobolev_coeffs(basis, n).coeffs
    parts = []
    for k, v in enumerate(c):
        body = f"{abs(v):.6g}" + (f"*x^{k}" if k else "")
        parts.append(("- " if v < 0 else "+ " if parts else "") + body)
    print(f"  S_{n}(x) = " + " ".join(parts))

print("\nConnection coefficients, recurrence vs closed ratio form:")
print(f"  {'n':>4} {'a_n (recurrence)':>20} {'a_n (ratio)':>20} {'1 - 2 sqrt(lam/n)':>20}")
for n in range(10):
    a_rec = basis.connection.a[n]
    a_rat = connection_ratio(lam, n)
    asym = connection_asymptotic(lam, n) if n >= 1 else float("nan")
    print(f"  {n:>4} {a_rec:>20.15f} {a_rat:>20.15f} {asym:>20.15f}")

print("\nSquared energy norms s(n) of S_n(x) x e^{-x/2}:")
print("  " + "  ".join(f"{v:.6f}" for v in basis.s[:6]))

print("\nSample values on a small grid:")
xs = np.array([0.0, 1.0, 2.0, 5.0])
for n in (1, 2, 4):
    vals = [sobolev_eval(basis, n, float(x)) for x in xs]
    print(f"  S_{n} at x={xs.tolist()}: " + "  ".join(f"{v:+.6f}" for v in vals))
