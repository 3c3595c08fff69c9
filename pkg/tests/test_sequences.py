"""Tests for the scalar sequences, checked against exact integer binomials."""

import math
from fractions import Fraction

import numpy as np
import pytest
from numpy.testing import assert_allclose

from countfact import (
    CONSTANTS,
    EULER_GAMMA,
    coefficient_table,
    column_norms_sq,
    inverse_coeffs,
    landau_alpha,
    wallis_coeffs,
)


def exact_coeff(k: int) -> Fraction:
    # binom(2k, k) / 4^k as an exact rational: the definition the
    # multiplicative recurrence must reproduce.
    return Fraction(math.comb(2 * k, k), 4**k)


class TestWallisCoeffs:
    def test_matches_exact_binomials(self):
        r = wallis_coeffs(300)
        expected = np.array([float(exact_coeff(k)) for k in range(300)])
        assert_allclose(r, expected, rtol=1e-12)

    def test_examples(self):
        assert wallis_coeffs(1).tolist() == [1.0]
        assert wallis_coeffs(3).tolist() == [1.0, 0.5, 0.375]
        assert_allclose(wallis_coeffs(4)[-1], 0.3125, rtol=1e-15)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            wallis_coeffs(0)

    def test_sandwich_and_monotonicity(self):
        n = 2**14
        r = wallis_coeffs(n)
        assert r[0] == 1.0
        assert np.all(np.diff(r) < 0)
        k = np.arange(1, n)
        r_sq = r[1:] * r[1:]
        assert np.all(r_sq >= 1.0 / (np.pi * (k + 4.0 / np.pi - 1.0)))
        assert np.all(r_sq <= 1.0 / (np.pi * (k + 0.25)))


class TestInverseCoeffs:
    def test_examples(self):
        assert inverse_coeffs(2).tolist() == [1.0, -0.5]
        assert inverse_coeffs(3).tolist() == [1.0, -0.5, -0.125]
        assert_allclose(inverse_coeffs(4)[-1], -0.0625, rtol=1e-15)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            inverse_coeffs(0)

    def test_prefix_sums_telescope_to_r(self):
        n = 2**14
        r = wallis_coeffs(n)
        prefix = np.cumsum(inverse_coeffs(n))
        assert np.abs(prefix - r).max() <= 1e-13


class TestColumnNormsSq:
    def test_examples(self):
        assert column_norms_sq(1).tolist() == [1.0]
        assert column_norms_sq(2).tolist() == [1.25, 1.0]
        assert column_norms_sq(3)[0] == 1.390625

    def test_last_entry_is_exactly_one(self):
        for n in (1, 2, 17, 256):
            assert column_norms_sq(n)[-1] == 1.0

    @pytest.mark.parametrize("n", [8, 64, 512, 4096])
    def test_decreasing_with_coefficient_differences(self, n):
        d_sq = column_norms_sq(n)
        r = wallis_coeffs(n)
        assert np.all(np.diff(d_sq) < 0)
        # d_j^2 - d_{j+1}^2 = r_{n-j}^2, to 1e-14 relative to the d_sq scale
        diff = d_sq[:-1] - d_sq[1:]
        expected = (r[1:] * r[1:])[::-1]
        assert np.abs(diff - expected).max() <= 1e-14 * d_sq[0]


class TestLandauAlpha:
    def test_trivial_and_two(self):
        assert landau_alpha(1) == 1.0
        expected = 1.25 - math.log(2.0) / math.pi
        assert abs(landau_alpha(2) - expected) <= 1e-14

    def test_monotone_small(self):
        alpha = coefficient_table(2000).alpha
        assert np.all(np.diff(alpha) > 0)
        assert alpha[0] == 1.0
        assert alpha[-1] < 1.0663

    @pytest.mark.parametrize("n", [100, 1000, 10000])
    def test_gap_to_limit(self, n):
        gap = CONSTANTS.alpha_infinity - landau_alpha(n)
        assert 0.0 < gap <= 1.0 / (5.0 * n)


class TestCoefficientTable:
    def test_cached_and_immutable(self):
        table = coefficient_table(32)
        assert coefficient_table(32) is table
        with pytest.raises(ValueError):
            table.r[0] = 2.0

    def test_consistent_with_operations(self):
        table = coefficient_table(50)
        assert table.n == 50
        assert_allclose(table.r, wallis_coeffs(50), rtol=0)
        assert_allclose(table.rtilde, inverse_coeffs(50), rtol=0)
        assert_allclose(table.d_sq, column_norms_sq(50), rtol=0)
        assert abs(table.alpha[-1] - landau_alpha(50)) < 1e-14


class TestNamedConstants:
    def test_formula_identities(self):
        c = CONSTANTS
        assert c.euler_gamma == EULER_GAMMA
        assert_allclose(c.alpha_infinity, 1.0662758532089143, rtol=1e-15)
        assert_allclose(c.nsr_maxse_const, c.alpha_infinity - math.log(2) / math.pi,
                        rtol=1e-14)
        assert_allclose(c.nsr_meanse_const, c.alpha_infinity - 1.0 / math.pi, rtol=1e-14)
        assert_allclose(c.sqrt_meanse_const, c.alpha_infinity - 0.5 / math.pi, rtol=1e-14)
        assert_allclose(c.ga_const, 0.5 + c.mathias_lb_const, rtol=1e-14)

    def test_decimal_anchors(self):
        # Four-to-five digit anchors; the exact values are fixed by the
        # formulas above.
        c = CONSTANTS
        assert abs(c.alpha_infinity - 1.0663) < 1e-4
        assert abs(c.nsr_maxse_const - 0.84564) < 1e-4
        assert abs(c.nsr_meanse_const - 0.74794) < 1e-4
        assert abs(c.sqrt_meanse_const - 0.90710) < 1e-4
        assert abs(c.ga_const - 0.98133) < 1e-4
        assert abs(c.lb_const - 0.70193) < 1e-4
        assert abs(c.mathias_lb_const - 0.48133) < 1e-4
