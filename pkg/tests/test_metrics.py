"""Tests for the error norms and their closed forms."""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from countfact import (
    GROUP_ALGEBRA,
    MAXSE,
    MEANSE,
    NSR,
    SQRT,
    closed_form_maxse_group_algebra,
    closed_form_maxse_sqrt,
    error_report,
    factorize,
    max_col_norm,
    max_row_norm,
    maxse,
    meanse,
    nsr_factorization,
    nuclear_lower_bound,
    predicted_residual,
    residual_offset,
    sqrt_factorization,
)
from countfact.factorizations import to_dense
from countfact.sequences import CONSTANTS


class TestOperatorNorms:
    def test_identity(self):
        assert max_row_norm(np.eye(3)) == 1.0
        assert max_col_norm(np.eye(3)) == 1.0

    def test_nsr_left_n2(self):
        f = nsr_factorization(2)
        expected = math.sqrt((10.0 - 2.0 * math.sqrt(5.0)) / 4.0)
        assert_allclose(max_row_norm(f.left), expected, rtol=1e-12)
        assert abs(max_row_norm(f.left) - 1.17557) < 1e-5

    def test_nsr_right_is_unit(self):
        for n in (1, 2, 17, 64):
            assert max_col_norm(nsr_factorization(n).right) == 1.0

    def test_sqrt_column_norms(self):
        assert_allclose(max_col_norm(sqrt_factorization(2).right), math.sqrt(1.25),
                        rtol=1e-15)
        assert_allclose(max_col_norm(sqrt_factorization(4).right),
                        math.sqrt(1.48828125), rtol=1e-15)

    def test_handles_and_arrays_agree(self):
        f = factorize(GROUP_ALGEBRA, 8)
        assert_allclose(max_row_norm(f.left), max_row_norm(to_dense(f.left)), rtol=1e-12)
        assert_allclose(max_col_norm(f.right), max_col_norm(to_dense(f.right)), rtol=1e-12)


class TestMaxseMeanse:
    def test_sqrt_n2(self):
        f = sqrt_factorization(2)
        assert_allclose(maxse(f), 1.25, rtol=1e-15)
        expected = math.sqrt(2.25 / 2.0) * math.sqrt(1.25)
        assert_allclose(meanse(f), expected, rtol=1e-15)
        assert abs(meanse(f) - 1.18585) < 1e-4

    def test_nsr_n2(self):
        f = nsr_factorization(2)
        assert_allclose(maxse(f), math.sqrt((10.0 - 2.0 * math.sqrt(5.0)) / 4.0),
                        rtol=1e-12)
        # Frobenius^2 of the left factor is (15 - 2 sqrt 5) / 4
        expected = math.sqrt((15.0 - 2.0 * math.sqrt(5.0)) / 8.0)
        assert_allclose(meanse(f), expected, rtol=1e-12)

    def test_group_algebra_small(self):
        assert_allclose(maxse(factorize(GROUP_ALGEBRA, 1)), 1.0, rtol=1e-12)
        assert_allclose(maxse(factorize(GROUP_ALGEBRA, 2)), 0.5 + math.sqrt(2.0) / 2.0,
                        rtol=1e-12)

    @pytest.mark.parametrize("method", [SQRT, NSR, GROUP_ALGEBRA])
    @pytest.mark.parametrize("n", [1, 2, 3, 7, 16])
    def test_meanse_below_maxse(self, method, n):
        f = factorize(method, n)
        assert meanse(f) <= maxse(f) * (1 + 1e-12)

    @pytest.mark.parametrize("n", [2, 3, 8, 32])
    def test_maxse_above_nuclear_bound(self, n):
        for method in (SQRT, NSR, GROUP_ALGEBRA):
            assert nuclear_lower_bound(n) <= maxse(factorize(method, n)) * (1 + 1e-9)


class TestClosedForms:
    @pytest.mark.parametrize("n", list(range(1, 65)) + [256, 1024])
    def test_sqrt_direct_equals_closed_form(self, n):
        direct = maxse(sqrt_factorization(n))
        closed = closed_form_maxse_sqrt(n)
        assert abs(direct - closed) <= 1e-12 * closed

    @pytest.mark.parametrize("n", [1, 2, 4, 8, 16, 64, 256])
    def test_group_algebra_direct_equals_closed_form(self, n):
        f = factorize(GROUP_ALGEBRA, n)
        closed = closed_form_maxse_group_algebra(n)
        assert abs(maxse(f) - closed) <= 1e-9 * closed
        assert abs(meanse(f) - maxse(f)) <= 1e-10 * maxse(f)

    def test_group_algebra_values(self):
        assert_allclose(closed_form_maxse_group_algebra(1), 1.0, rtol=1e-15)
        assert_allclose(closed_form_maxse_group_algebra(2), 0.5 + math.sqrt(2.0) / 2.0,
                        rtol=1e-15)


class TestPredictedResiduals:
    def test_mapping(self):
        assert predicted_residual(SQRT, MAXSE) == CONSTANTS.alpha_infinity
        assert predicted_residual(SQRT, MEANSE) == CONSTANTS.sqrt_meanse_const
        assert predicted_residual(NSR, MAXSE) == CONSTANTS.nsr_maxse_const
        assert predicted_residual(NSR, MEANSE) == CONSTANTS.nsr_meanse_const
        assert predicted_residual(GROUP_ALGEBRA, MAXSE) == CONSTANTS.ga_const
        assert predicted_residual(GROUP_ALGEBRA, MEANSE) == CONSTANTS.ga_const

    def test_decimal_anchors(self):
        assert abs(predicted_residual(NSR, MAXSE) - 0.84564) < 1e-4
        assert abs(predicted_residual(NSR, MEANSE) - 0.74794) < 1e-4
        assert abs(predicted_residual(SQRT, MEANSE) - 0.90710) < 1e-4

    def test_unknown(self):
        with pytest.raises(ValueError):
            predicted_residual("cholesky", MAXSE)
        with pytest.raises(ValueError):
            predicted_residual(SQRT, "l1")


class TestErrorReport:
    def test_residual_definition(self):
        report = error_report(NSR, 16)
        assert report.maxse_residual == report.maxse - residual_offset(16)
        assert report.meanse_residual == report.meanse - residual_offset(16)
        assert report.closed_form_maxse is None
        assert report.closed_form_meanse is None

    def test_closed_forms_attached(self):
        sqrt_report = error_report(SQRT, 8)
        assert sqrt_report.closed_form_maxse == closed_form_maxse_sqrt(8)
        assert sqrt_report.closed_form_meanse is None
        ga_report = error_report(GROUP_ALGEBRA, 8)
        assert ga_report.closed_form_maxse == closed_form_maxse_group_algebra(8)
        assert ga_report.closed_form_meanse == ga_report.closed_form_maxse

    def test_nsr_maxse_approach_is_monotone(self):
        # |residual - limit| shrinks along 2^8..2^14, up to a 1e-3 floor.
        target = CONSTANTS.nsr_maxse_const
        gaps = [abs(error_report(NSR, 2**p).maxse_residual - target)
                for p in range(8, 15)]
        assert all(b <= a + 1e-3 for a, b in zip(gaps, gaps[1:]))

    def test_nsr_below_sqrt_from_four(self):
        for n in (4, 8, 16, 64):
            assert error_report(NSR, n).maxse <= error_report(SQRT, n).maxse
