"""The three explicit factorizations left @ right of the counting matrix.

* ``sqrt``: both factors equal the lower-triangular Toeplitz square root C.
* ``nsr``: normalized square root.  The right factor C D^{-1} rescales the
  columns of C to unit norm (D = diag of column norms d_1..d_n); the left
  factor M D C^{-1} absorbs the scaling.
* ``group-algebra``: real n x 2n and 2n x n slices of the square root of
  the 2n x 2n circulant extension of the counting matrix, taken in the
  eigenvalue domain.

Every constructor also computes the norm profiles the error metrics read
(row norms of the left factor, column norms of the right factor, Frobenius
norm of the left factor) without materializing anything dense.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .sequences import coefficient_table
from .structmat import (
    LowerTriangularToeplitz,
    circulant_extension_spectrum,
    circulant_first_column,
    circulant_sqrt,
    counting_matrix,
)

SQRT = "sqrt"
NSR = "nsr"
GROUP_ALGEBRA = "group-algebra"
METHODS = (SQRT, NSR, GROUP_ALGEBRA)

# Largest n for which dense n x n factors are ever materialized.
DENSE_BUDGET = 4096


class ColumnScaled:
    """A lower-triangular Toeplitz matrix with column k divided by scale[k]."""

    __slots__ = ("base", "scale")

    def __init__(self, base: LowerTriangularToeplitz, scale: np.ndarray):
        if scale.shape != (base.n,):
            raise ValueError("scale length must match matrix size")
        self.base = base
        self.scale = scale

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def shape(self) -> tuple[int, int]:
        return self.base.shape

    def apply(self, x: np.ndarray) -> np.ndarray:
        return self.base.apply(np.asarray(x) / self.scale)

    def to_dense(self) -> np.ndarray:
        return self.base.to_dense() / self.scale

    def row_norms_sq(self) -> np.ndarray:
        n = self.n
        out = np.zeros(n)
        for k in range(n):
            col = self.base.col[: n - k] / self.scale[k]
            out[k:] += col * col
        return out

    def col_norms_sq(self) -> np.ndarray:
        # Unit columns by construction: scale[k] is exactly the k-th column norm.
        return np.ones(self.n)

    def frobenius_sq(self) -> float:
        return float(self.n)


class NsrLeft:
    """Left factor M D C^{-1} of the normalized square root, unmaterialized.

    Column k (0-based) is the running prefix sum of rtilde[t] * d[k + t],
    t = 0..n-1-k; the diagonal entry is d[k].  Row norms are accumulated
    column by column in O(n) memory and O(n^2) time.  The dense form is
    built only on explicit request and refuses sizes above DENSE_BUDGET
    (n = 2**14 would already need 2.7e8 entries).
    """

    __slots__ = ("rtilde", "d", "_row_norms_sq")

    def __init__(self, rtilde: np.ndarray, d: np.ndarray, row_norms_sq: np.ndarray):
        self.rtilde = rtilde
        self.d = d
        self._row_norms_sq = row_norms_sq

    @property
    def n(self) -> int:
        return self.d.size

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n, self.n)

    def apply(self, y: np.ndarray) -> np.ndarray:
        n = self.n
        return np.cumsum(self.d * np.convolve(self.rtilde, y)[:n])

    def to_dense(self) -> np.ndarray:
        n = self.n
        if n > DENSE_BUDGET:
            raise ValueError(f"refusing dense {n} x {n} factor (budget {DENSE_BUDGET})")
        dense = np.zeros((n, n))
        for k in range(n):
            dense[k:, k] = np.cumsum(self.rtilde[: n - k] * self.d[k:])
        return dense

    def row_norms_sq(self) -> np.ndarray:
        return self._row_norms_sq

    def col_norms_sq(self) -> np.ndarray:
        n = self.n
        out = np.empty(n)
        for k in range(n):
            col = np.cumsum(self.rtilde[: n - k] * self.d[k:])
            out[k] = np.dot(col, col)
        return out

    def frobenius_sq(self) -> float:
        return float(np.sum(self._row_norms_sq))


class CirculantSlice:
    """n-row or n-column slice of the 2n x 2n circulant square root.

    The full circulant has entry (j, k) = col[(j - k) mod 2n]; ``left``
    keeps the first n rows (n x 2n), ``right`` the first n columns
    (2n x n).  Every row and every column of the full circulant has the
    same squared norm, sum(col**2), so the sliced-off side inherits equal
    norms too.
    """

    __slots__ = ("col", "sqrt_eigenvalues", "side")

    def __init__(self, col: np.ndarray, sqrt_eigenvalues: np.ndarray, side: str):
        if side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        self.col = col
        self.sqrt_eigenvalues = sqrt_eigenvalues
        self.side = side

    @property
    def m(self) -> int:
        return self.col.size

    @property
    def n(self) -> int:
        return self.m // 2

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n, self.m) if self.side == "left" else (self.m, self.n)

    def _circulant_apply(self, v: np.ndarray) -> np.ndarray:
        return np.fft.ifft(self.sqrt_eigenvalues * np.fft.fft(v)).real

    def apply(self, v: np.ndarray) -> np.ndarray:
        if self.side == "left":
            return self._circulant_apply(v)[: self.n]
        padded = np.zeros(self.m)
        padded[: self.n] = v
        return self._circulant_apply(padded)

    def to_dense(self) -> np.ndarray:
        j = np.arange(self.m)
        full = self.col[(j[:, None] - j[None, :]) % self.m]
        return full[: self.n, :] if self.side == "left" else full[:, : self.n]

    def _window_sums(self) -> np.ndarray:
        # Sums of col**2 over every circular window of length n.
        sq = self.col * self.col
        prefix = np.concatenate(([0.0], np.cumsum(np.concatenate((sq, sq)))))
        starts = np.arange(self.m)
        return prefix[starts + self.n] - prefix[starts]

    def row_norms_sq(self) -> np.ndarray:
        full = float(np.dot(self.col, self.col))
        if self.side == "left":
            return np.full(self.n, full)
        # Row j of the right slice covers lags j, j-1, .., j-n+1 (mod m).
        windows = self._window_sums()
        j = np.arange(self.m)
        return windows[(j - self.n + 1) % self.m]

    def col_norms_sq(self) -> np.ndarray:
        full = float(np.dot(self.col, self.col))
        if self.side == "right":
            return np.full(self.n, full)
        # Column k of the left slice covers lags -k, 1-k, .., n-1-k (mod m).
        windows = self._window_sums()
        k = np.arange(self.m)
        return windows[(-k) % self.m]

    def frobenius_sq(self) -> float:
        return self.n * float(np.dot(self.col, self.col))


@dataclass(frozen=True, eq=False)
class Factorization:
    """One explicit factorization with left @ right == counting_matrix(n).

    ``inner_dim`` is n for sqrt/nsr and 2n for group-algebra.  The norm
    profiles are what the error metrics read; they agree with direct
    recomputation from the entries.
    """

    method: str
    n: int
    left: object
    right: object
    inner_dim: int
    row_norms_sq_left: np.ndarray
    col_norms_sq_right: np.ndarray
    frobenius_sq_left: float


def sqrt_factorization(n: int) -> Factorization:
    """Square-root factorization C @ C: both factors share the coefficient
    column, so the max row norm and max column norm coincide."""
    table = coefficient_table(n)
    factor = LowerTriangularToeplitz(table.r)
    row_norms = table.d_sq[::-1].copy()  # row j holds the first j+1 coefficients
    row_norms.setflags(write=False)
    return Factorization(
        method=SQRT,
        n=n,
        left=factor,
        right=factor,
        inner_dim=n,
        row_norms_sq_left=row_norms,
        col_norms_sq_right=table.d_sq,
        frobenius_sq_left=float(np.sum(table.d_sq)),
    )


@functools.lru_cache(maxsize=32)
def nsr_row_norms_sq(n: int) -> np.ndarray:
    """Squared row norms of the NSR left factor, streamed column by column.

    One pass over columns with a running prefix sum; O(n^2) time, O(n)
    memory, never materializes the factor.
    """
    table = coefficient_table(n)
    d = np.sqrt(table.d_sq)
    row_sq = np.zeros(n)
    for k in range(n):
        col = np.cumsum(table.rtilde[: n - k] * d[k:])
        row_sq[k:] += col * col
    row_sq.setflags(write=False)
    return row_sq


def nsr_factorization(n: int) -> Factorization:
    """Normalized square root: right factor C D^{-1} has unit columns, left
    factor M D C^{-1} carries all the norm growth."""
    table = coefficient_table(n)
    d = np.sqrt(table.d_sq)
    right = ColumnScaled(LowerTriangularToeplitz(table.r), d)
    row_sq = nsr_row_norms_sq(n)
    left = NsrLeft(table.rtilde, d, row_sq)
    return Factorization(
        method=NSR,
        n=n,
        left=left,
        right=right,
        inner_dim=n,
        row_norms_sq_left=row_sq,
        col_norms_sq_right=np.ones(n),
        frobenius_sq_left=float(np.sum(row_sq)),
    )


def group_algebra_factorization(n: int) -> Factorization:
    """Group-algebra factorization through the circulant extension.

    The spectrum of the extension is known in closed form, its square root
    is taken eigenvalue-wise, and the factors are the first n rows
    (respectively columns) of the resulting real circulant.  All rows of
    the left factor and all columns of the right factor share one norm.
    """
    spec = circulant_extension_spectrum(n)
    half = circulant_sqrt(spec)
    col = circulant_first_column(half)
    full = float(np.dot(col, col))
    return Factorization(
        method=GROUP_ALGEBRA,
        n=n,
        left=CirculantSlice(col, half.eigenvalues, "left"),
        right=CirculantSlice(col, half.eigenvalues, "right"),
        inner_dim=2 * n,
        row_norms_sq_left=np.full(n, full),
        col_norms_sq_right=np.full(n, full),
        frobenius_sq_left=n * full,
    )


_CONSTRUCTORS = {
    SQRT: sqrt_factorization,
    NSR: nsr_factorization,
    GROUP_ALGEBRA: group_algebra_factorization,
}


def factorize(method: str, n: int) -> Factorization:
    """Construct the factorization for one of METHODS."""
    try:
        constructor = _CONSTRUCTORS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}") from None
    return constructor(n)


def to_dense(mat) -> np.ndarray:
    """Dense view of a matrix handle (ndarrays pass through)."""
    if isinstance(mat, np.ndarray):
        return mat
    return mat.to_dense()


def verify_reconstruction(factorization: Factorization) -> float:
    """Max-abs deviation of left @ right from the counting matrix.

    Dense verification; refuses n above DENSE_BUDGET.
    """
    n = factorization.n
    if n > DENSE_BUDGET:
        raise ValueError(f"dense verification budget is n <= {DENSE_BUDGET}, got {n}")
    product = to_dense(factorization.left) @ to_dense(factorization.right)
    return float(np.abs(product - counting_matrix(n)).max())
