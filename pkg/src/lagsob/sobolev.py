"""Laguerre-Sobolev orthogonal polynomials S_n on (0, inf).

The S_n share the leading coefficient (-1)^n/n! of L_n^{(1)} and are
orthogonal for the bilinear form

    <p, q>_S = int p q (1 + lam - x/4) x e^{-x} dx + int p' q' x^2 e^{-x} dx,

equivalently <p x e^{-x/2}, q x e^{-x/2}> in the energy inner product
lam * int u v / x dx + int u' v' dx of the singular-potential operator.

Everything flows from the one-step connection L_n^{(1)} = S_n + a_{n-1} S_{n-1}:
the scalar coefficients a_n carry the whole construction, and they obey both
a forward recurrence and a closed ratio formula at the point -4*lam, which the
module exposes side by side so each can certify the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .laguerre import LaguerreFamily, PolyCoeffs, laguerre_coeffs, laguerre_eval_all
from .quadrature import gauss_laguerre, integrate
from .specfun import bessel_j

__all__ = [
    "ConnectionSequence",
    "SobolevBasis",
    "connection_recurrence",
    "connection_ratio",
    "connection_asymptotic",
    "sobolev_basis",
    "sobolev_eval",
    "sobolev_eval_all",
    "sobolev_coeffs",
    "sobolev_norm_sq",
    "sobolev_inner_poly",
    "alternating_sum_check",
    "gen_fun_sobolev",
    "hardy_hille_check",
]

_L1 = LaguerreFamily(1.0)


def _check_lam(lam: float) -> float:
    if not (lam > 0.0) or math.isinf(lam):
        raise ValueError(f"potential strength must satisfy lam > 0, got {lam!r}")
    return float(lam)


@dataclass(frozen=True)
class ConnectionSequence:
    """Coefficients a_0..a_{N-1} linking the Laguerre and Sobolev bases."""

    lam: float
    a: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.a, dtype=float).copy()
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("connection sequence must hold at least a_0")
        if not np.all((arr > 0.0) & (arr < 1.0)):
            raise RuntimeError("connection coefficients left (0, 1); recurrence is broken")
        arr.setflags(write=False)
        object.__setattr__(self, "a", arr)

    @property
    def n_max(self) -> int:
        return self.a.size


def connection_recurrence(lam: float, n_max: int) -> ConnectionSequence:
    """a_0 = 2/(4 lam + 2), then a_n = (n+2) / (4 lam + 2(n+1) - n a_{n-1})."""
    lam = _check_lam(lam)
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    a = np.empty(n_max)
    a[0] = 2.0 / (4.0 * lam + 2.0)
    for n in range(1, n_max):
        denom = 4.0 * lam + 2.0 * (n + 1) - n * a[n - 1]
        if denom <= 0.0:
            raise RuntimeError(f"nonpositive denominator at n={n}; lam={lam} invalid?")
        a[n] = (n + 2) / denom
    return ConnectionSequence(lam=lam, a=a)


def connection_ratio(lam: float, n: int) -> float:
    """Closed form a_n = (n+2)/(n+1) * L_n^{(1)}(-4 lam) / L_{n+1}^{(1)}(-4 lam).

    At negative arguments every recurrence term is positive, so the direct
    evaluation is well conditioned for any n of practical size.
    """
    lam = _check_lam(lam)
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    vals = laguerre_eval_all(_L1, n + 1, -4.0 * lam)
    return (n + 2.0) / (n + 1.0) * float(vals[n]) / float(vals[n + 1])


def connection_asymptotic(lam: float, n: int) -> float:
    """First-order large-n form 1 - 2 sqrt(lam/n); a test oracle only."""
    lam = _check_lam(lam)
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    return 1.0 - 2.0 * math.sqrt(lam / n)


@dataclass(frozen=True)
class SobolevBasis:
    """Connection coefficients plus squared energy norms s(0)..s(N)."""

    lam: float
    connection: ConnectionSequence
    s: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.s, dtype=float).copy()
        if not np.all(arr > 0.0):
            raise RuntimeError("squared norms must be positive; connection sequence is broken")
        arr.setflags(write=False)
        object.__setattr__(self, "s", arr)

    @property
    def n_max(self) -> int:
        return self.s.size - 1


def sobolev_basis(lam: float, n_max: int) -> SobolevBasis:
    """Build the basis data for S_0..S_{n_max}.

    s(0) = lam + 1/2 and s(n) = (n+1)(lam + (n+1)/2) - a_{n-1}^2 s(n-1).
    """
    lam = _check_lam(lam)
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    conn = connection_recurrence(lam, max(n_max, 1))
    s = np.empty(n_max + 1)
    s[0] = lam + 0.5
    for n in range(1, n_max + 1):
        s[n] = (n + 1) * (lam + (n + 1) / 2.0) - conn.a[n - 1] ** 2 * s[n - 1]
    return SobolevBasis(lam=lam, connection=conn, s=s)


def sobolev_eval_all(basis: SobolevBasis, n: int, x):
    """S_0(x)..S_n(x) by the forward connection recursion, one Laguerre pass."""
    if not 0 <= n <= basis.n_max:
        raise ValueError(f"index must lie in [0, {basis.n_max}], got {n}")
    lag = laguerre_eval_all(_L1, n, x)
    out = np.zeros_like(lag)
    out[0] = 1.0
    a = basis.connection.a
    for k in range(1, n + 1):
        out[k] = lag[k] - a[k - 1] * out[k - 1]
    return out


def sobolev_eval(basis: SobolevBasis, n: int, x):
    """S_n(x) = L_n^{(1)}(x) - a_{n-1} S_{n-1}(x), S_0 = 1."""
    return sobolev_eval_all(basis, n, x)[n]


def sobolev_coeffs(basis: SobolevBasis, n: int) -> PolyCoeffs:
    """Monomial coefficients of S_n; degree capped as in laguerre_coeffs."""
    if not 0 <= n <= basis.n_max:
        raise ValueError(f"index must lie in [0, {basis.n_max}], got {n}")
    coeffs = np.array([1.0])
    a = basis.connection.a
    for k in range(1, n + 1):
        lk = laguerre_coeffs(_L1, k).coeffs
        new = lk.copy()
        new[: coeffs.size] -= a[k - 1] * coeffs
        coeffs = new
    return PolyCoeffs(coeffs)


def sobolev_norm_sq(basis: SobolevBasis, n: int) -> float:
    """s(n) = squared energy norm of S_n(x) x e^{-x/2}."""
    if not 0 <= n <= basis.n_max:
        raise ValueError(f"index must lie in [0, {basis.n_max}], got {n}")
    return float(basis.s[n])


def sobolev_inner_poly(basis: SobolevBasis, p: PolyCoeffs, q: PolyCoeffs, m: int) -> float:
    """<p, q>_S by exact-degree quadrature (alpha=1 and alpha=2 rules of size m)."""
    if p.degree + q.degree + 2 > 2 * m - 1:
        raise ValueError(
            f"rule size m={m} too small for degrees {p.degree} and {q.degree}; "
            f"need deg p + deg q + 2 <= 2m - 1"
        )
    lam = basis.lam
    dp, dq = p.derivative(), q.derivative()
    rule1 = gauss_laguerre(1.0, m)
    rule2 = gauss_laguerre(2.0, m)
    first = integrate(rule1, lambda x: p(x) * q(x) * (1.0 + lam - 0.25 * x))
    second = integrate(rule2, lambda x: dp(x) * dq(x))
    return first + second


def alternating_sum_check(basis: SobolevBasis, n: int, x: float) -> float:
    """Residual of the telescoped connection identity, relative to its left side.

    S_n(x) L_n^{(1)}(-4 lam)/(n+1) telescopes into the alternating sum of
    L_k^{(1)}(x) L_k^{(1)}(-4 lam)/(k+1); returns |lhs - rhs| / |lhs|.
    """
    if not 0 <= n <= basis.n_max:
        raise ValueError(f"index must lie in [0, {basis.n_max}], got {n}")
    lam = basis.lam
    lag_neg = laguerre_eval_all(_L1, n, -4.0 * lam)
    lag_x = laguerre_eval_all(_L1, n, x)
    sn = sobolev_eval(basis, n, x)
    lhs = sn * lag_neg[n] / (n + 1.0)
    rhs = 0.0
    for k in range(n + 1):
        rhs += (-1.0) ** (n - k) * lag_x[k] * lag_neg[k] / (k + 1.0)
    return abs(lhs - rhs) / max(abs(lhs), 1e-300)


def gen_fun_sobolev(basis: SobolevBasis, x: float, omega: float, n_trunc: int):
    """Both sides of the Sobolev generating function; returns (series, closed form).

    sum_n S_n(x) L_n^{(1)}(-4 lam)/(n+1) w^n
        = e^{-(x - 4 lam) w/(1-w)} / (1 - w^2) * J_1(4 sqrt(x lam w)/(1-w)) / (2 sqrt(x lam w)).

    The series side is truncated at n_trunc; callers pick n_trunc so the tail
    is negligible (terms decay geometrically for w <= 0.8).
    """
    if not (0.0 < omega <= 0.8):
        raise ValueError(f"omega must lie in (0, 0.8], got {omega!r}")
    if not (x > 0.0):
        raise ValueError(f"x must be > 0, got {x!r}")
    if not 0 <= n_trunc <= basis.n_max:
        raise ValueError(f"n_trunc must lie in [0, {basis.n_max}], got {n_trunc}")
    lam = basis.lam
    root = math.sqrt(x * lam * omega)
    z = 4.0 * root / (1.0 - omega)

    lag_neg = laguerre_eval_all(_L1, n_trunc, -4.0 * lam)
    sn = sobolev_eval_all(basis, n_trunc, x)
    lhs = 0.0
    wn = 1.0
    for n in range(n_trunc + 1):
        lhs += sn[n] * lag_neg[n] / (n + 1.0) * wn
        wn *= omega
    rhs = (
        math.exp(-(x - 4.0 * lam) * omega / (1.0 - omega))
        / (1.0 - omega**2)
        * bessel_j(1.0, z)
        / (2.0 * root)
    )
    return lhs, rhs


def hardy_hille_check(alpha: float, x: float, y: float, omega: float, n_trunc: int):
    """Both sides of the bilinear Laguerre generating function, real branch.

    sum_n binom(n+alpha, n)^{-1} L_n^{(alpha)}(x) L_n^{(alpha)}(y) w^n
        = Gamma(alpha+1)/(1-w) e^{-(x+y)w/(1-w)} (-xyw)^{-alpha/2}
          * J_alpha(2 sqrt(-xyw)/(1-w)).

    Restricted to w in (-1, 0) so -xyw > 0 and every factor stays real.
    """
    if not (-1.0 < omega < 0.0):
        raise ValueError(f"omega must lie in (-1, 0), got {omega!r}")
    if not (x > 0.0 and y > 0.0):
        raise ValueError("x and y must be > 0")
    fam = LaguerreFamily(alpha)
    lx = laguerre_eval_all(fam, n_trunc, x)
    ly = laguerre_eval_all(fam, n_trunc, y)
    lhs = 0.0
    wn = 1.0
    lga1 = math.lgamma(alpha + 1.0)
    for n in range(n_trunc + 1):
        inv_binom = math.exp(lga1 + math.lgamma(n + 1.0) - math.lgamma(n + alpha + 1.0))
        lhs += inv_binom * lx[n] * ly[n] * wn
        wn *= omega
    prod = -x * y * omega
    z = 2.0 * math.sqrt(prod) / (1.0 - omega)
    rhs = (
        math.exp(lga1)
        / (1.0 - omega)
        * math.exp(-(x + y) * omega / (1.0 - omega))
        * prod ** (-alpha / 2.0)
        * bessel_j(alpha, z)
    )
    return lhs, rhs
