"""Tests for the seeded Gaussian-mechanism simulator."""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from countfact import (
    GROUP_ALGEBRA,
    MechanismConfig,
    estimate_errors,
    exact_prefix_sums,
    factorize,
    maxse,
    meanse,
    nsr_factorization,
    run_mechanism_once,
    sqrt_factorization,
)


def make_config(method="nsr", n=16, mu=1.0, trials=200, seed=42, x=None):
    f = factorize(method, n)
    if x is None:
        x = np.zeros(n)
    return MechanismConfig(factorization=f, mu=mu, trials=trials, seed=seed, input=x)


class TestConfigValidation:
    def test_rejects_bad_mu(self):
        with pytest.raises(ValueError):
            make_config(mu=0.0)
        with pytest.raises(ValueError):
            make_config(mu=-1.0)

    def test_rejects_zero_trials(self):
        with pytest.raises(ValueError):
            make_config(trials=0)

    def test_rejects_wrong_input_length(self):
        with pytest.raises(ValueError):
            make_config(n=8, x=np.zeros(9))

    def test_infinite_mu_allowed(self):
        cfg = make_config(mu=math.inf)
        assert cfg.mu == math.inf


class TestDeterminism:
    def test_identical_configs_are_bit_identical(self):
        a = estimate_errors(make_config(trials=50))
        b = estimate_errors(make_config(trials=50))
        assert a.empirical_err_inf == b.empirical_err_inf
        assert a.empirical_err_2 == b.empirical_err_2
        assert np.array_equal(a.z_mean, b.z_mean)
        assert np.array_equal(a.z_var, b.z_var)

    def test_run_once_deterministic_per_trial(self):
        cfg = make_config(x=np.arange(16.0))
        assert np.array_equal(run_mechanism_once(cfg, 3), run_mechanism_once(cfg, 3))
        assert not np.array_equal(run_mechanism_once(cfg, 3), run_mechanism_once(cfg, 4))

    def test_estimates_independent_of_input(self):
        a = estimate_errors(make_config(trials=50, x=np.zeros(16)))
        b = estimate_errors(make_config(trials=50, x=np.full(16, 9.5)))
        assert a.empirical_err_inf == b.empirical_err_inf
        assert a.empirical_err_2 == b.empirical_err_2


class TestNoiseFreeLimit:
    @pytest.mark.parametrize("method", ["sqrt", "nsr", GROUP_ALGEBRA])
    def test_infinite_mu_returns_prefix_sums(self, method):
        rng = np.random.default_rng(0)
        x = rng.standard_normal(32)
        cfg = make_config(method=method, n=32, mu=math.inf, trials=1, x=x)
        out = run_mechanism_once(cfg, 0)
        assert_allclose(out, exact_prefix_sums(x), atol=1e-10)
        result = estimate_errors(cfg)
        assert result.empirical_err_inf == 0.0
        assert result.theory_err_inf == 0.0
        assert np.all(np.isnan(result.z_mean))


class TestAdditivity:
    def test_outputs_differ_by_prefix_sums_of_difference(self):
        rng = np.random.default_rng(1)
        x1 = rng.standard_normal(16)
        x2 = rng.standard_normal(16)
        out1 = run_mechanism_once(make_config(x=x1), 5)
        out2 = run_mechanism_once(make_config(x=x2), 5)
        assert_allclose(out1 - out2, exact_prefix_sums(x1 - x2), atol=1e-10)

    def test_single_size_standard_normal_sample(self):
        # n = 1, sqrt method, mu = 1: L = R = [1], so the output on x = 0 is
        # one standard normal draw.
        cfg = MechanismConfig(factorization=sqrt_factorization(1), mu=1.0,
                              trials=1, seed=9, input=np.zeros(1))
        out = run_mechanism_once(cfg, 0)
        z = np.random.Generator(np.random.Philox(key=9)).standard_normal(1)
        assert out[0] == z[0]


class TestScaleLaw:
    def test_doubling_mu_halves_errors_exactly(self):
        base = estimate_errors(make_config(mu=1.0, trials=100))
        half = estimate_errors(make_config(mu=2.0, trials=100))
        assert half.empirical_err_inf == base.empirical_err_inf / 2.0
        assert half.empirical_err_2 == base.empirical_err_2 / 2.0

    def test_general_mu_scales_within_roundoff(self):
        base = estimate_errors(make_config(mu=1.0, trials=100))
        third = estimate_errors(make_config(mu=3.0, trials=100))
        assert_allclose(third.empirical_err_inf, base.empirical_err_inf / 3.0,
                        rtol=1e-12)

    def test_theory_fields(self):
        f = nsr_factorization(16)
        result = estimate_errors(MechanismConfig(factorization=f, mu=2.0, trials=10,
                                                 seed=0, input=np.zeros(16)))
        assert result.theory_err_inf == maxse(f) / 2.0
        assert result.theory_err_2 == meanse(f) / 2.0


class TestStatistics:
    def test_standardized_deviations_look_normal(self):
        trials = 2000
        result = estimate_errors(make_config(trials=trials, seed=42))
        assert np.abs(result.z_mean).max() < 4.0 / math.sqrt(trials)
        assert result.z_var.min() > 1.0 - 5.0 / math.sqrt(trials)
        assert result.z_var.max() < 1.0 + 5.0 / math.sqrt(trials)

    def test_single_coordinate_rms_is_near_one(self):
        cfg = MechanismConfig(factorization=sqrt_factorization(1), mu=1.0,
                              trials=20000, seed=42, input=np.zeros(1))
        result = estimate_errors(cfg)
        assert 0.98 < result.empirical_err_inf < 1.02

    def test_empirical_tracks_theory_at_moderate_size(self):
        result = estimate_errors(make_config(n=32, trials=3000, seed=7))
        assert abs(result.empirical_err_inf - result.theory_err_inf) \
            < 0.08 * result.theory_err_inf
        assert abs(result.empirical_err_2 - result.theory_err_2) \
            < 0.05 * result.theory_err_2
