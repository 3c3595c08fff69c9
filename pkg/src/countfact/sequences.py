"""Scalar sequences driving every factorization of the counting matrix.

The counting matrix is the n x n lower-triangular all-ones matrix; its
square root is lower-triangular Toeplitz with the Taylor coefficients of
(1 - x)^(-1/2) on its diagonals.  This module computes those coefficients
r_k, the coefficients rtilde_k of the inverse series (1 - x)^(1/2), the
squared column norms d_j^2 of the square root, and the partial-sum
residuals alpha_n = sum_{j<n} r_j^2 - log(n)/pi that converge to
(euler_gamma + log 16) / pi.

Storage is 0-based throughout.  Quantities that are 1-indexed in the usual
mathematical convention (column norms d_j, residuals alpha_m) sit at
storage index j - 1.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

# Hard-coded at 17 significant digits; no series evaluation needed.
EULER_GAMMA = 0.5772156649015329


def _kahan_cumsum(values: np.ndarray) -> np.ndarray:
    """Running sums with Kahan compensation.

    Plain cumsum drifts by ~n ulp over the 1e5..1e6-term sums the sweeps
    reach; compensation keeps every prefix correctly rounded to ~1 ulp.
    """
    out = np.empty(len(values))
    total = 0.0
    carry = 0.0
    for i, v in enumerate(values):
        y = v - carry
        t = total + y
        carry = (t - total) - y
        total = t
        out[i] = total
    return out


def wallis_coeffs(n: int) -> np.ndarray:
    """First n Taylor coefficients of (1 - x)^(-1/2).

    r_0 = 1 and r_k = binom(2k, k) / 4^k, evaluated by the multiplicative
    recurrence r_k = r_{k-1} (2k - 1) / (2k); raw binomials would overflow
    64-bit integers at k = 33.  Wallis' inequality pins every entry:

        1 / (pi (k + 4/pi - 1)) <= r_k^2 <= 1 / (pi (k + 1/4)),  k >= 1.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    k = np.arange(n, dtype=np.float64)
    factors = np.ones(n)
    factors[1:] = (2.0 * k[1:] - 1.0) / (2.0 * k[1:])
    return np.cumprod(factors)


def inverse_coeffs(n: int) -> np.ndarray:
    """First n Taylor coefficients of (1 - x)^(1/2).

    rtilde_0 = 1 and rtilde_j = -r_j / (2j - 1); these are the Toeplitz
    coefficients of the inverse of the square-root factor, and their prefix
    sums telescope back onto the r_j:  sum_{t<=j} rtilde_t = r_j.
    """
    r = wallis_coeffs(n)
    rtilde = np.empty(n)
    rtilde[0] = 1.0
    if n > 1:
        j = np.arange(1, n, dtype=np.float64)
        rtilde[1:] = -r[1:] / (2.0 * j - 1.0)
    return rtilde


def column_norms_sq(n: int) -> np.ndarray:
    """Squared column norms of the square-root factor, d_j^2 for j = 1..n.

    d_j^2 = sum_{t=0}^{n-j} r_t^2, returned with d_j^2 at index j - 1.
    The sequence is strictly decreasing, ends at exactly 1.0, and adjacent
    differences recover the squared coefficients: d_j^2 - d_{j+1}^2 =
    r_{n-j}^2.
    """
    r = wallis_coeffs(n)
    return _kahan_cumsum(r * r)[::-1].copy()


def landau_alpha(n: int) -> float:
    """Partial-sum residual alpha_n = sum_{j=0}^{n-1} r_j^2 - log(n)/pi.

    Monotonically increasing in n with limit (EULER_GAMMA + log 16) / pi;
    the gap to the limit is positive and at most 1/(5n).
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    r = wallis_coeffs(n)
    return math.fsum(r * r) - math.log(n) / math.pi


@dataclass(frozen=True)
class CoefficientTable:
    """Read-only bundle of all scalar sequences at one matrix size.

    Attributes
    ----------
    n : int
        Matrix size.
    r : ndarray, shape (n,)
        Taylor coefficients of (1 - x)^(-1/2); r[0] = 1, strictly decreasing.
    rtilde : ndarray, shape (n,)
        Taylor coefficients of (1 - x)^(1/2).
    d_sq : ndarray, shape (n,)
        Squared column norms of the square root; the 1-indexed d_j^2 sits at
        index j - 1, so d_sq[-1] == 1.
    alpha : ndarray, shape (n,)
        alpha_m = sum_{j<m} r_j^2 - log(m)/pi at index m - 1; strictly
        increasing within [1, 1.0663].
    """

    n: int
    r: np.ndarray
    rtilde: np.ndarray
    d_sq: np.ndarray
    alpha: np.ndarray


@functools.lru_cache(maxsize=64)
def coefficient_table(n: int) -> CoefficientTable:
    """Build (and memoize) the coefficient table at size n.

    The table is immutable and safe to share across threads; it is built
    once per n and never resized.
    """
    r = wallis_coeffs(n)
    rtilde = inverse_coeffs(n)
    prefix = _kahan_cumsum(r * r)
    d_sq = prefix[::-1].copy()
    m = np.arange(1, n + 1, dtype=np.float64)
    alpha = prefix - np.log(m) / math.pi
    for arr in (r, rtilde, d_sq, alpha):
        arr.setflags(write=False)
    return CoefficientTable(n=n, r=r, rtilde=rtilde, d_sq=d_sq, alpha=alpha)


@dataclass(frozen=True)
class NamedConstants:
    """Closed-form limits of the error-norm residuals (natural log throughout).

    Every residual in this package subtracts log(n)/pi; these are the
    constants the residuals converge to.
    """

    euler_gamma: float
    alpha_infinity: float  # (gamma + log 16) / pi, limit of alpha_n
    nsr_maxse_const: float  # (gamma + log 8) / pi = alpha_infinity - log(2)/pi
    nsr_meanse_const: float  # (gamma + log 16 - 1) / pi = alpha_infinity - 1/pi
    sqrt_meanse_const: float  # alpha_infinity - 1/(2 pi)
    ga_const: float  # 1/2 + (gamma + log(8/pi)) / pi
    lb_const: float  # (gamma + log(16/pi)) / pi
    mathias_lb_const: float  # (gamma + log(8/pi)) / pi


CONSTANTS = NamedConstants(
    euler_gamma=EULER_GAMMA,
    alpha_infinity=(EULER_GAMMA + math.log(16.0)) / math.pi,
    nsr_maxse_const=(EULER_GAMMA + math.log(8.0)) / math.pi,
    nsr_meanse_const=(EULER_GAMMA + math.log(16.0) - 1.0) / math.pi,
    sqrt_meanse_const=(EULER_GAMMA + math.log(16.0)) / math.pi - 0.5 / math.pi,
    ga_const=0.5 + (EULER_GAMMA + math.log(8.0 / math.pi)) / math.pi,
    lb_const=(EULER_GAMMA + math.log(16.0 / math.pi)) / math.pi,
    mathias_lb_const=(EULER_GAMMA + math.log(8.0 / math.pi)) / math.pi,
)
