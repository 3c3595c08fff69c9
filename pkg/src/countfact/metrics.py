"""Error norms of a factorization: MaxSE = |L|_{2->inf} |R|_{1->2} and
MeanSE = (1/sqrt(n)) |L|_F |R|_{1->2}, their closed forms, and the
asymptotic residual constants they approach."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .factorizations import GROUP_ALGEBRA, NSR, SQRT, Factorization, factorize
from .sequences import CONSTANTS, coefficient_table

MAXSE = "maxse"
MEANSE = "meanse"
METRICS = (MAXSE, MEANSE)


def residual_offset(n: int) -> float:
    """log(n)/pi (natural log): what every residual subtracts."""
    return math.log(n) / math.pi


def _row_norms_sq(mat) -> np.ndarray:
    if isinstance(mat, np.ndarray):
        return np.einsum("jk,jk->j", mat, mat)
    return mat.row_norms_sq()


def _col_norms_sq(mat) -> np.ndarray:
    if isinstance(mat, np.ndarray):
        return np.einsum("jk,jk->k", mat, mat)
    return mat.col_norms_sq()


def max_row_norm(mat) -> float:
    """Largest row l2 norm (the 2->inf operator norm)."""
    return math.sqrt(float(np.max(_row_norms_sq(mat))))


def max_col_norm(mat) -> float:
    """Largest column l2 norm (the 1->2 operator norm)."""
    return math.sqrt(float(np.max(_col_norms_sq(mat))))


def maxse(f: Factorization) -> float:
    """Worst-coordinate error norm of the factorization at unit noise."""
    left = math.sqrt(float(np.max(f.row_norms_sq_left)))
    right = math.sqrt(float(np.max(f.col_norms_sq_right)))
    return left * right


def meanse(f: Factorization) -> float:
    """Mean-squared error norm of the factorization at unit noise."""
    left = math.sqrt(f.frobenius_sq_left / f.n)
    right = math.sqrt(float(np.max(f.col_norms_sq_right)))
    return left * right


def closed_form_maxse_sqrt(n: int) -> float:
    """MaxSE of the square-root factorization: sum_{j<n} r_j^2 exactly."""
    table = coefficient_table(n)
    return math.fsum(table.r * table.r)


def closed_form_maxse_group_algebra(n: int) -> float:
    """MaxSE of the group-algebra factorization:

        1/2 + (1/2n) sum_{l=1..n} csc(pi (2l - 1) / (2n)).

    Its MeanSE coincides because all rows of the left factor share one norm.
    math.fsum makes the summation order irrelevant even though the terms
    span several orders of magnitude.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    l = np.arange(1, n + 1)
    terms = 1.0 / np.sin(np.pi * (2 * l - 1) / (2 * n))
    return 0.5 + math.fsum(terms) / (2 * n)


_PREDICTED = {
    (SQRT, MAXSE): CONSTANTS.alpha_infinity,
    (SQRT, MEANSE): CONSTANTS.sqrt_meanse_const,
    (NSR, MAXSE): CONSTANTS.nsr_maxse_const,
    (NSR, MEANSE): CONSTANTS.nsr_meanse_const,
    (GROUP_ALGEBRA, MAXSE): CONSTANTS.ga_const,
    (GROUP_ALGEBRA, MEANSE): CONSTANTS.ga_const,
}


def predicted_residual(method: str, metric: str) -> float:
    """Asymptotic limit of (metric value) - log(n)/pi for the method."""
    try:
        return _PREDICTED[(method, metric)]
    except KeyError:
        raise ValueError(f"unknown method/metric pair {(method, metric)!r}") from None


@dataclass(frozen=True)
class ErrorReport:
    """MaxSE/MeanSE of one (method, n), residuals, closed forms, and the
    constants the residuals converge to."""

    method: str
    n: int
    maxse: float
    meanse: float
    maxse_residual: float
    meanse_residual: float
    closed_form_maxse: float | None
    closed_form_meanse: float | None
    predicted_maxse_residual: float
    predicted_meanse_residual: float


def error_report(
    method: str, n: int, factorization: Factorization | None = None
) -> ErrorReport:
    """Evaluate both error norms for one method and size.

    Pass an existing Factorization to avoid rebuilding it.
    """
    f = factorization if factorization is not None else factorize(method, n)
    offset = residual_offset(n)
    value_max = maxse(f)
    value_mean = meanse(f)
    if method == SQRT:
        cf_max: float | None = closed_form_maxse_sqrt(n)
        cf_mean: float | None = None
    elif method == GROUP_ALGEBRA:
        cf_max = closed_form_maxse_group_algebra(n)
        cf_mean = cf_max
    else:
        cf_max = None
        cf_mean = None
    return ErrorReport(
        method=method,
        n=n,
        maxse=value_max,
        meanse=value_mean,
        maxse_residual=value_max - offset,
        meanse_residual=value_mean - offset,
        closed_form_maxse=cf_max,
        closed_form_meanse=cf_mean,
        predicted_maxse_residual=predicted_residual(method, MAXSE),
        predicted_meanse_residual=predicted_residual(method, MEANSE),
    )
