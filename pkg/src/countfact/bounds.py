"""Lower bounds on the attainable error norms, and the cosecant-sum
asymptotics behind them.

The singular values of the counting matrix are 1 / (2 sin((2j-1) pi / (4n+2)))
for j = 1..n, so its nuclear norm over n is a pure cosecant sum; the same is
true of the older spectral bound it improves on.  All sums here go through
math.fsum, whose result does not depend on term ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .sequences import CONSTANTS, EULER_GAMMA
from .metrics import residual_offset


def nuclear_lower_bound(n: int) -> float:
    """(1/2n) sum_{j=1..n} csc((2j - 1) pi / (4n + 2)): nuclear norm of the
    counting matrix divided by n.  No factorization can beat it on either
    error norm.  Approaches log(n)/pi + (euler_gamma + log(16/pi))/pi.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    j = np.arange(1, n + 1)
    terms = 1.0 / np.sin((2 * j - 1) * np.pi / (4 * n + 2))
    return math.fsum(terms) / (2 * n)


def mathias_lower_bound(n: int) -> float:
    """((n + 1) / 2n^2) sum_{j=1..n} csc((2j - 1) pi / (2n)): the classical
    Hadamard-multiplier bound.  Approaches log(n)/pi + (euler_gamma +
    log(8/pi))/pi, weaker than the nuclear bound for every n >= 2.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    j = np.arange(1, n + 1)
    terms = 1.0 / np.sin((2 * j - 1) * np.pi / (2 * n))
    return (n + 1) / (2.0 * n * n) * math.fsum(terms)


def cosecant_average(n: int) -> tuple[float, float]:
    """G(n) = (1/n) sum_{l=1..n-1} csc(pi l / n), with its prediction.

    Returns (value, predicted) where predicted =
    (2/pi) (log n + euler_gamma + log(2/pi)); the two agree up to a
    vanishing term as n grows.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    l = np.arange(1, n)
    value = math.fsum(1.0 / np.sin(np.pi * l / n)) / n
    predicted = (2.0 / math.pi) * (math.log(n) + EULER_GAMMA + math.log(2.0 / math.pi))
    return value, predicted


def log_product_average(n: int) -> tuple[float, float]:
    """(1/n) sum_{j=1..n} log(j) log(n + 1 - j), with its prediction.

    Returns (value, predicted) where predicted = log^2 n - 2 log n + 2 -
    pi^2 / 6.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    j = np.arange(1, n + 1, dtype=np.float64)
    value = math.fsum(np.log(j) * np.log(n + 1 - j)) / n
    log_n = math.log(n)
    predicted = log_n * log_n - 2.0 * log_n + 2.0 - math.pi * math.pi / 6.0
    return value, predicted


@dataclass(frozen=True)
class BoundReport:
    """Both lower bounds at one n, their residuals against log(n)/pi, and
    the cosecant average G(n) with its prediction (None when n < 2)."""

    n: int
    nuclear_lb: float
    mathias_lb: float
    nuclear_residual: float
    mathias_residual: float
    g_n: float | None
    g_n_predicted: float | None


def bound_report(n: int) -> BoundReport:
    nuclear = nuclear_lower_bound(n)
    mathias = mathias_lower_bound(n)
    offset = residual_offset(n)
    if n >= 2:
        g_n, g_pred = cosecant_average(n)
    else:
        g_n, g_pred = None, None
    return BoundReport(
        n=n,
        nuclear_lb=nuclear,
        mathias_lb=mathias,
        nuclear_residual=nuclear - offset,
        mathias_residual=mathias - offset,
        g_n=g_n,
        g_n_predicted=g_pred,
    )


def predicted_nuclear_residual() -> float:
    return CONSTANTS.lb_const


def predicted_mathias_residual() -> float:
    return CONSTANTS.mathias_lb_const
