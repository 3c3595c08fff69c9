"""Structured-matrix kernels: lower-triangular Toeplitz matrices stored by
first column, circulant matrices stored by DFT eigenvalues, and the unitary
transform connecting them."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

logger = logging.getLogger(__name__)

# Conjugate symmetry guarantees the circulant square root is real; any
# imaginary residue below this is floating-point noise and gets truncated.
IMAG_TRUNCATION = 1e-10


class LowerTriangularToeplitz:
    """n x n lower-triangular Toeplitz matrix stored by its first column.

    Entry (j, k) equals col[j - k] for j >= k and 0 otherwise.  The product
    of two such matrices is again lower-triangular Toeplitz, with first
    column the truncated convolution of the factors' columns.
    """

    __slots__ = ("col",)

    def __init__(self, col):
        col = np.array(col, dtype=np.float64)
        if col.ndim != 1 or col.size == 0:
            raise ValueError("first column must be a nonempty 1-D array")
        col.setflags(write=False)
        self.col = col

    @property
    def n(self) -> int:
        return self.col.size

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n, self.n)

    def apply(self, x: np.ndarray) -> np.ndarray:
        """Matrix-vector product, as a truncated convolution."""
        return np.convolve(self.col, x)[: self.n]

    def to_dense(self) -> np.ndarray:
        j = np.arange(self.n)
        lag = j[:, None] - j[None, :]
        return np.where(lag >= 0, self.col[np.maximum(lag, 0)], 0.0)

    def row_norms_sq(self) -> np.ndarray:
        return np.cumsum(self.col * self.col)

    def col_norms_sq(self) -> np.ndarray:
        return np.cumsum(self.col * self.col)[::-1].copy()

    def frobenius_sq(self) -> float:
        return float(np.sum(np.cumsum(self.col * self.col)))


def ltt_multiply(
    a: LowerTriangularToeplitz, b: LowerTriangularToeplitz
) -> LowerTriangularToeplitz:
    """Product of two lower-triangular Toeplitz matrices of the same size."""
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} != {b.n}")
    return LowerTriangularToeplitz(np.convolve(a.col, b.col)[: a.n])


def counting_matrix(n: int) -> np.ndarray:
    """Dense n x n lower-triangular all-ones (prefix-sum) matrix."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return np.tril(np.ones((n, n)))


def dft(v, inverse: bool = False) -> np.ndarray:
    """Unitary DFT with forward kernel exp(-2 pi i j k / m) / sqrt(m).

    For even m = 2n this is the transform with (j, k) entry
    omega^{-jk} / sqrt(2n), omega = exp(i pi / n).  Any internally
    consistent sign convention yields identical norms; this one is fixed so
    the circulant eigenvalue formulas below are unambiguous.  numpy's
    pocketfft backend runs in O(m log m) at every length.
    """
    v = np.asarray(v, dtype=np.complex128)
    if v.ndim != 1 or v.size == 0:
        raise ValueError("input must be a nonempty 1-D array")
    if inverse:
        return np.fft.ifft(v, norm="ortho")
    return np.fft.fft(v, norm="ortho")


@dataclass(frozen=True)
class CirculantSpectrum:
    """m x m circulant matrix stored as its DFT eigenvalues.

    The matrix is F* diag(eigenvalues) F with F the unitary DFT above.  It
    is real exactly when the eigenvalues are conjugate-symmetric,
    lambda_k = conj(lambda_{m-k}) for k >= 1.
    """

    m: int
    eigenvalues: np.ndarray


def circulant_extension_spectrum(n: int) -> CirculantSpectrum:
    """Eigenvalues of the 2n x 2n circulant 0/1 extension of the counting
    matrix (first column: n ones followed by n zeros).

    With omega = exp(i pi / n) the eigenvalues are n at k = 0,
    2 / (1 - omega^{-k}) at odd k, and 0 at even k != 0.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    m = 2 * n
    lam = np.zeros(m, dtype=np.complex128)
    lam[0] = n
    k_odd = np.arange(1, m, 2)
    lam[k_odd] = 2.0 / (1.0 - np.exp(-1j * np.pi * k_odd / n))
    lam.setflags(write=False)
    return CirculantSpectrum(m=m, eigenvalues=lam)


def circulant_sqrt(spec: CirculantSpectrum) -> CirculantSpectrum:
    """Square root in the eigenvalue domain, principal branch per entry.

    The principal branch has nonnegative real part (and maps negative reals
    to the positive imaginary axis, zero to zero).  Away from the negative
    real axis it commutes with conjugation, so conjugate symmetry of the
    input spectrum is preserved and the square root stays a real matrix.
    """
    roots = np.sqrt(np.asarray(spec.eigenvalues, dtype=np.complex128))
    roots.setflags(write=False)
    return CirculantSpectrum(m=spec.m, eigenvalues=roots)


def circulant_first_column(spec: CirculantSpectrum) -> np.ndarray:
    """First column of the real circulant with the given spectrum.

    The imaginary residue left by the inverse transform is truncated; its
    maximum is logged for inspection.
    """
    c = np.fft.ifft(spec.eigenvalues)
    residue = float(np.abs(c.imag).max()) if c.size else 0.0
    if residue > IMAG_TRUNCATION:
        raise ValueError(
            f"spectrum is not conjugate-symmetric: imaginary residue {residue:.3e}"
        )
    logger.debug("circulant first column: truncated imaginary residue %.3e", residue)
    col = np.ascontiguousarray(c.real)
    col.setflags(write=False)
    return col


def circulant_dense(col: np.ndarray) -> np.ndarray:
    """Dense m x m circulant with the given first column (small m only)."""
    col = np.asarray(col)
    m = col.size
    j = np.arange(m)
    return col[(j[:, None] - j[None, :]) % m]


def spectrum_to_dense(spec: CirculantSpectrum) -> np.ndarray:
    """Materialize F* diag(eigenvalues) F as a dense real matrix."""
    return circulant_dense(circulant_first_column(spec))
