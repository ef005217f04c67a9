import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from armeycurve.dataset import DesignMatrix
from armeycurve.errors import CollinearityError, RecursiveResidualError
from armeycurve.ols import fit, fit_arrays, recursive_residuals, significance_stars

from oracles import brute_force_recursive_residuals


def _random_design(rng, n=40, k=3):
    X = rng.normal(size=(n, k))
    y = 1.0 + X @ rng.normal(size=k) + rng.normal(size=n)
    return DesignMatrix.from_arrays(y, X)


def test_matches_statsmodels(rng):
    sm = pytest.importorskip("statsmodels.api")
    d = _random_design(rng)
    f = fit(d)
    ref = sm.OLS(d.response, d.X).fit()
    assert_allclose(f.beta, ref.params, rtol=1e-10)
    assert_allclose(f.se, ref.bse, rtol=1e-10)
    assert_allclose(f.pvalues, ref.pvalues, rtol=1e-8, atol=1e-14)
    assert f.r2 == pytest.approx(ref.rsquared, rel=1e-12)
    assert f.adjusted_r2 == pytest.approx(ref.rsquared_adj, rel=1e-12)
    assert f.rmse == pytest.approx(np.sqrt(ref.mse_resid), rel=1e-12)


def test_fitted_plus_residuals_reconstruct(rng):
    f = fit(_random_design(rng))
    assert_allclose(f.fitted + f.residuals, f.design.response, rtol=1e-10)


def test_uncentred_r2_without_intercept(rng):
    X = rng.normal(size=(30, 2))
    y = X @ [1.0, -1.0] + rng.normal(size=30) + 5
    f = fit_arrays(y, X, intercept=False)
    assert f.r2 == pytest.approx(1 - f.ssr / np.dot(y, y))


def test_deterministic(rng):
    d = _random_design(rng)
    a, b = fit(d), fit(d)
    assert_array_equal(a.beta, b.beta)
    assert_array_equal(a.covariance, b.covariance)


def test_collinear_design_fails_loudly(rng):
    X = rng.normal(size=(30, 2))
    X = np.column_stack([X, 2 * X[:, 0] + X[:, 1]])
    with pytest.raises(CollinearityError):
        fit_arrays(rng.normal(size=30), X)


@pytest.mark.parametrize("p,stars", [(0.2, ""), (0.08, "*"), (0.03, "**"), (0.001, "***")])
def test_stars(p, stars):
    assert significance_stars(p) == stars


def test_recursive_residuals_brute_force(rng):
    d = _random_design(rng, n=45, k=4)
    w = recursive_residuals(d)
    assert w.shape == (d.nobs - d.k,)
    assert_allclose(w, brute_force_recursive_residuals(d.X, d.response), rtol=1e-8, atol=1e-10)


def test_recursive_residuals_statsmodels(rng):
    pytest.importorskip("statsmodels")
    from statsmodels.stats.diagnostic import recursive_olsresiduals

    d = _random_design(rng, n=45, k=4)
    res = fit(d)
    import statsmodels.api as sm

    ref = recursive_olsresiduals(sm.OLS(d.response, d.X).fit())[4]
    assert_allclose(recursive_residuals(d), ref[d.k:], rtol=1e-8)
    assert res.nobs == 45


def test_recursive_residuals_zero_noise(rng):
    X = np.column_stack([np.ones(20), rng.normal(size=20)])
    d = DesignMatrix.from_arrays(X @ [3.0, -2.0], X[:, 1:])
    assert_allclose(recursive_residuals(d), 0.0, atol=1e-12)


def test_single_recursive_residual_is_standardised_forecast_error(rng):
    X = rng.normal(size=(4, 2))
    y = rng.normal(size=4)
    d = DesignMatrix.from_arrays(y, X)
    Xf = d.X
    b = np.linalg.solve(Xf[:3], y[:3])
    x = Xf[3]
    inv = np.linalg.inv(Xf[:3].T @ Xf[:3])
    expected = (y[3] - x @ b) / np.sqrt(1 + x @ inv @ x)
    assert_allclose(recursive_residuals(d), [expected], rtol=1e-10)


def test_singular_leading_block():
    x = np.r_[np.zeros(3), np.arange(1.0, 8.0)]
    d = DesignMatrix.from_arrays(np.arange(10.0), x[:, None])
    with pytest.raises(RecursiveResidualError):
        recursive_residuals(d)


@pytest.mark.slow
def test_recursive_residuals_normal_under_null():
    from armeycurve.diagnostics import jarque_bera

    rng = np.random.default_rng(2024)
    passed = 0
    reps = 1000
    for _ in range(reps):
        X = rng.normal(size=(60, 3))
        y = 1 + X @ [0.5, -1.0, 2.0] + rng.normal(size=60)
        w = recursive_residuals(DesignMatrix.from_arrays(y, X))
        passed += not jarque_bera(w).verdicts[0.01]
    assert passed / reps >= 0.97
