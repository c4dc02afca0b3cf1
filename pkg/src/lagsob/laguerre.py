"""Generalized Laguerre polynomials: evaluation, coefficients, norms, identities.

Everything is driven by the three-term recurrence

    (n+1) L_{n+1}(x) = (2n+1+alpha-x) L_n(x) - (n+alpha) L_{n-1}(x),

which is forward-stable on the negative axis (all terms positive there, no
cancellation) -- exactly the regime the Sobolev connection coefficients need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "LaguerreFamily",
    "PolyCoeffs",
    "laguerre_eval",
    "laguerre_eval_all",
    "laguerre_coeffs",
    "laguerre_norm_sq",
    "laguerre_derivative",
    "ratio_expansion",
]

# Monomial coefficients involve binom(n+alpha, n) ~ Gamma(n+alpha+1)/n!,
# which leaves double range near n = 170 for alpha of order one.
COEFF_MODE_MAX_DEGREE = 170


@dataclass(frozen=True)
class LaguerreFamily:
    """Parameter alpha of the weight x^alpha e^{-x}; requires alpha > -1."""

    alpha: float

    def __post_init__(self):
        if not (self.alpha > -1.0) or math.isinf(self.alpha):
            raise ValueError(f"Laguerre parameter must satisfy alpha > -1, got {self.alpha!r}")


@dataclass(frozen=True)
class PolyCoeffs:
    """Dense monomial coefficients c0..cn, ascending powers."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=float))
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficient vector must be non-empty and one-dimensional")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, x):
        return np.polynomial.polynomial.polyval(x, self.coeffs)

    def derivative(self) -> "PolyCoeffs":
        if self.degree == 0:
            return PolyCoeffs(np.zeros(1))
        return PolyCoeffs(np.polynomial.polynomial.polyder(self.coeffs))


def _check_finite_scalar_or_array(x):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("evaluation point must be finite")
    return arr


def laguerre_eval_all(family: LaguerreFamily, n_max: int, x):
    """All values L_0(x)..L_{n_max}(x) in one recurrence pass.

    Returns an array of shape (n_max+1,) for scalar x, or
    (n_max+1,) + x.shape for array x.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    alpha = family.alpha
    xa = _check_finite_scalar_or_array(x)
    out = np.zeros((n_max + 1,) + xa.shape)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = 1.0 + alpha - xa
    for n in range(1, n_max):
        out[n + 1] = ((2 * n + 1 + alpha - xa) * out[n] - (n + alpha) * out[n - 1]) / (n + 1)
    return out


def laguerre_eval(family: LaguerreFamily, n: int, x):
    """L_n^{(alpha)}(x) by forward recurrence from L_{-1} = 0, L_0 = 1."""
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    return laguerre_eval_all(family, n, x)[n]


def laguerre_coeffs(family: LaguerreFamily, n: int) -> PolyCoeffs:
    """Monomial coefficients of L_n^{(alpha)}.

    c_0 = binom(n+alpha, n) and c_{k+1}/c_k = -(n-k) / ((k+1)(k+alpha+1)),
    so the whole vector follows from one ratio sweep.  Rejected for n > 170
    where binom(n+alpha, n) leaves double range (use the recurrence
    evaluation instead, which has no such limit).
    """
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    if n > COEFF_MODE_MAX_DEGREE:
        raise ValueError(
            f"coefficient mode supports degree <= {COEFF_MODE_MAX_DEGREE}, got {n}"
        )
    alpha = family.alpha
    if alpha == int(alpha) and alpha >= 0:
        c0 = float(math.comb(n + int(alpha), n))
    else:
        c0 = math.exp(math.lgamma(n + alpha + 1) - math.lgamma(alpha + 1) - math.lgamma(n + 1))
    c = np.empty(n + 1)
    c[0] = c0
    for k in range(n):
        c[k + 1] = -c[k] * (n - k) / ((k + 1) * (k + alpha + 1))
    return PolyCoeffs(c)


def laguerre_norm_sq(family: LaguerreFamily, n: int) -> float:
    """Squared weighted L2 norm Gamma(n+alpha+1)/n!, via log-gamma differences."""
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    return math.exp(math.lgamma(n + family.alpha + 1) - math.lgamma(n + 1))


def laguerre_derivative(family: LaguerreFamily, n: int, x):
    """d/dx L_n^{(alpha)}(x) = -L_{n-1}^{(alpha+1)}(x); zero for n = 0."""
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    if n == 0:
        xa = _check_finite_scalar_or_array(x)
        return np.zeros(xa.shape) if xa.shape else 0.0
    shifted = LaguerreFamily(family.alpha + 1.0)
    return -laguerre_eval(shifted, n - 1, x)


def ratio_expansion(alpha: float, beta: float, j: int, z: float, n: int, d: int) -> float:
    """Leading terms of the large-n expansion of L_{n+j}^{(alpha)}(z) / L_n^{(beta)}(z).

    Valid for z < 0 (the only regime used here); d in {1, 2} selects how many
    terms of the n^{-m/2} series to keep:

        (-z/n)^((beta-alpha)/2) * (U_0 + U_1 / sqrt(n)),
        U_0 = 1,
        U_1 = (beta^2 - alpha^2 + 2 z (beta - alpha - 2 j)) / (4 sqrt(-z)).

    Intended as a test oracle against directly computed ratios.
    """
    if not (z < 0.0):
        raise ValueError(f"ratio expansion requires z < 0, got {z!r}")
    if d not in (1, 2):
        raise ValueError(f"only d in {{1, 2}} is supported, got {d}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = 1.0
    if d == 2:
        u1 = (beta**2 - alpha**2 + 2.0 * z * (beta - alpha - 2.0 * j)) / (4.0 * math.sqrt(-z))
        total += u1 / math.sqrt(n)
    return (-z / n) ** ((beta - alpha) / 2.0) * total
