"""Cross-module identity suites behind the `validate` command.

Each suite checks one family of exact identities at fixed tolerances and
returns (name, passed, detail).  They are intentionally redundant with the
unit tests: this is the runtime self-check a user can execute on their own
installation.
"""

from __future__ import annotations

import math

import numpy as np

from .laguerre import (
    LaguerreFamily,
    laguerre_derivative,
    laguerre_eval,
    laguerre_eval_all,
    laguerre_norm_sq,
)
from .quadrature import gauss_laguerre
from .sobolev import (
    ConnectionSequence,
    SobolevBasis,
    alternating_sum_check,
    connection_ratio,
    connection_recurrence,
    gen_fun_sobolev,
    hardy_hille_check,
    sobolev_basis,
    sobolev_coeffs,
    sobolev_inner_poly,
    sobolev_norm_sq,
)

__all__ = ["run_suites", "SUITE_NAMES"]

_GRID = np.linspace(-10.0, 40.0, 50)
_ALPHAS = (0.0, 0.5, 1.0, 2.0)


def _suite_recurrence(lam):
    worst = 0.0
    for alpha in _ALPHAS:
        fam = LaguerreFamily(alpha)
        vals = laguerre_eval_all(fam, 61, _GRID)
        for n in range(1, 60):
            resid = np.abs(
                (n + 1) * vals[n + 1] - (2 * n + 1 + alpha - _GRID) * vals[n] + (n + alpha) * vals[n - 1]
            )
            scale = np.maximum(1.0, np.abs(vals[n + 1]))
            worst = max(worst, float(np.max(resid / scale)))
    return worst <= 1e-10, f"max residual {worst:.2e} (tol 1e-10)"


def _suite_structure(lam):
    worst = 0.0
    for alpha in _ALPHAS:
        lo = laguerre_eval_all(LaguerreFamily(alpha), 60, _GRID)
        hi = laguerre_eval_all(LaguerreFamily(alpha + 1.0), 60, _GRID)
        for n in range(1, 61):
            resid = np.abs(lo[n] - (hi[n] - hi[n - 1]))
            scale = np.maximum(1.0, np.abs(lo[n]))
            worst = max(worst, float(np.max(resid / scale)))
    return worst <= 1e-10, f"max residual {worst:.2e} (tol 1e-10)"


def _suite_derivative(lam):
    worst = 0.0
    for alpha in (0.0, 1.0, 2.5):
        fam = LaguerreFamily(alpha)
        for n in (1, 3, 7, 12):
            for x in (0.5, 2.0, 8.0):
                exact = laguerre_derivative(fam, n, x)
                h = 1e-4
                fd = (laguerre_eval(fam, n, x + h) - laguerre_eval(fam, n, x - h)) / (2 * h)
                err = abs(fd - exact) / max(1.0, abs(exact))
                worst = max(worst, err)
    return worst <= 1e-6, f"max central-difference mismatch {worst:.2e} (tol 1e-6)"


def _suite_quadrature(lam):
    worst = 0.0
    for alpha in (0.0, 1.0, 2.0):
        prev_nodes = None
        for m in range(1, 41):
            rule = gauss_laguerre(alpha, m)
            if not (np.all(rule.weights > 0.0) and np.all(np.diff(rule.nodes) > 0.0)):
                return False, f"invalid rule alpha={alpha}, m={m}"
            if prev_nodes is not None:
                inter = np.searchsorted(rule.nodes, prev_nodes)
                if not np.array_equal(inter, np.arange(1, m)):
                    return False, f"interlacing failed alpha={alpha}, m={m}"
            prev_nodes = rule.nodes
            ks = sorted(set(range(0, 2 * m, max(1, (2 * m) // 6))) | {2 * m - 1})
            for k in ks:
                exact = math.exp(math.lgamma(k + alpha + 1.0))
                got = float(np.dot(rule.weights, rule.nodes**k))
                worst = max(worst, abs(got - exact) / exact)
    return worst <= 1e-9, f"max moment error {worst:.2e} (tol 1e-9)"


def _suite_gram_laguerre(lam):
    n_max = 25
    fam = LaguerreFamily(1.0)
    rule = gauss_laguerre(1.0, n_max + 1)
    vals = laguerre_eval_all(fam, n_max, rule.nodes)
    gram = (vals * rule.weights) @ vals.T
    diag_err = max(
        abs(gram[n, n] - laguerre_norm_sq(fam, n)) / laguerre_norm_sq(fam, n)
        for n in range(n_max + 1)
    )
    off = gram - np.diag(np.diag(gram))
    off_max = float(np.max(np.abs(off)))
    ok = diag_err <= 1e-9 and off_max <= 1e-9
    return ok, f"diag rel err {diag_err:.2e}, max off-diagonal {off_max:.2e} (tol 1e-9)"


def _suite_connection(lam):
    n_top = 200
    conn = connection_recurrence(lam, n_top + 1)
    worst = 0.0
    for n in range(n_top + 1):
        a_rec = conn.a[n]
        a_rat = connection_ratio(lam, n)
        worst = max(worst, abs(a_rec - a_rat) / a_rat)
        if not (0.0 < a_rec < 1.0 and a_rec < (n + 2) / (4 * lam + n + 2) + 1e-15):
            return False, f"bound violated at n={n}: a={a_rec!r}"
    return worst <= 1e-12, f"max recurrence/ratio mismatch {worst:.2e} (tol 1e-12)"


def _perturbed_basis(lam: float, n_max: int, delta_a0: float) -> SobolevBasis:
    basis = sobolev_basis(lam, n_max)
    if delta_a0 == 0.0:
        return basis
    a = basis.connection.a.copy()
    a[0] += delta_a0
    conn = ConnectionSequence(lam=lam, a=a)
    s = np.empty(n_max + 1)
    s[0] = lam + 0.5
    for n in range(1, n_max + 1):
        s[n] = (n + 1) * (lam + (n + 1) / 2.0) - a[n - 1] ** 2 * s[n - 1]
    return SobolevBasis(lam=lam, connection=conn, s=s)


def _suite_sobolev_gram(lam, delta_a0=0.0):
    n_max = 10
    basis = _perturbed_basis(lam, n_max, delta_a0)
    polys = [sobolev_coeffs(basis, n) for n in range(n_max + 1)]
    m = n_max + 2
    off_max = 0.0
    diag_err = 0.0
    for i in range(n_max + 1):
        for j in range(i, n_max + 1):
            val = sobolev_inner_poly(basis, polys[i], polys[j], m)
            if i == j:
                ref = sobolev_norm_sq(basis, i)
                diag_err = max(diag_err, abs(val - ref) / ref)
            else:
                off_max = max(off_max, abs(val))
    ok = off_max <= 1e-9 and diag_err <= 1e-10
    return ok, f"max off-diagonal {off_max:.2e} (tol 1e-9), diag rel err {diag_err:.2e} (tol 1e-10)"


def _suite_alternating_sum(lam):
    basis = sobolev_basis(lam, 40)
    worst = 0.0
    for n in (0, 1, 5, 10, 20, 40):
        for x in (0.0, 1.0, 5.0, 10.0):
            worst = max(worst, alternating_sum_check(basis, n, x))
    return worst <= 1e-10, f"max residual {worst:.2e} (tol 1e-10)"


def _suite_hardy_hille(lam):
    worst = 0.0
    for alpha, x, y, omega in [
        (1.0, 1.0, 1.0, -0.25),
        (0.0, 1.0, 2.0, -0.4),
        (1.0, 3.0, 0.5, -0.6),
        (2.0, 2.0, 2.0, -0.1),
    ]:
        lhs, rhs = hardy_hille_check(alpha, x, y, omega, 400)
        worst = max(worst, abs(lhs - rhs) / (abs(rhs) + 1e-300))
    return worst <= 1e-8, f"max relative mismatch {worst:.2e} (tol 1e-8)"


def _suite_gen_fun(lam):
    basis = sobolev_basis(lam, 700)
    worst = 0.0
    for x, omega in [(1.0, 0.3), (2.0, 0.5), (0.5, 0.7), (1.5, 0.2)]:
        lhs, rhs = gen_fun_sobolev(basis, x, omega, 700)
        worst = max(worst, abs(lhs - rhs) / (abs(rhs) + 1e-300))
    return worst <= 1e-8, f"max relative mismatch {worst:.2e} (tol 1e-8)"


_SUITES = [
    ("laguerre-recurrence", _suite_recurrence),
    ("laguerre-structure", _suite_structure),
    ("laguerre-derivative", _suite_derivative),
    ("quadrature-exactness", _suite_quadrature),
    ("gram-laguerre", _suite_gram_laguerre),
    ("connection-coefficients", _suite_connection),
    ("sobolev-gram", _suite_sobolev_gram),
    ("alternating-sum", _suite_alternating_sum),
    ("hardy-hille", _suite_hardy_hille),
    ("sobolev-generating-function", _suite_gen_fun),
]

SUITE_NAMES = [name for name, _ in _SUITES]


def run_suites(lam: float = 1.0, perturb_a0: float = 0.0):
    """Run every suite; yields (name, passed, detail).

    perturb_a0 is a fault-injection hook for the Sobolev Gram suite (used by
    tests to confirm the suite actually has teeth); leave it at 0.
    """
    results = []
    for name, fn in _SUITES:
        if name == "sobolev-gram":
            results.append((name, *fn(lam, perturb_a0)))
        else:
            results.append((name, *fn(lam)))
    return results
