"""Contrast spectral convergence against a solution with only algebraic decay.

With u(x) = 10 x cos(x) / (x+1)^3 the data decays like 1/x^2, the quadrature
saturates its size cap (the per-index achieved tolerances below show it), and
the error curve flattens: after 21 terms the squared error is still about
7e-3, five orders above the exponentially decaying case.
"""

from lagsob import builtin_problem, sobolev_error, solve

rational = solve(builtin_problem("rational-decay"), n_max=20)
exponential = solve(builtin_problem("exp-decay"), n_max=20)

print("quadrature report for the rational-decay data:")
print(f"  {'n':>3} {'g(n)':>18} {'m_used':>7} {'achieved tol':>14} {'converged':>10}")
for n, r in enumerate(rational.quad_report):
    print(f"  {n:>3} {rational.g[n]:>18.10e} {r.m_used:>7} {r.achieved_tol:>14.3e} {str(r.converged):>10}")

print("\nsquared errors, rational vs exponential decay:")
print(f"  {'n':>3} {'eps_n (rational)':>18} {'eps_n (exponential)':>20}")
for n in range(21):
    print(f"  {n:>3} {sobolev_error(rational, n):>18.6e} {sobolev_error(exponential, n):>20.6e}")

ratio = sobolev_error(rational, 20) / sobolev_error(exponential, 20)
print(f"\neps_20 ratio (rational / exponential): {ratio:.3e}")
