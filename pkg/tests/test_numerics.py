import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from armeycurve.errors import CollinearityError, DomainError, EstimabilityError
from armeycurve.numerics import (
    CUSUM_CRITICAL,
    LEVELS,
    chi_square_cdf,
    chi_square_sf,
    lookup_critical,
    normal_cdf,
    solve_least_squares,
    student_t_cdf,
    t_two_sided_pvalue,
)

from oracles import normal_cdf_series, normal_equations, t_cdf_quadrature


@pytest.mark.parametrize("z", [-4.0, -1.96, -0.5, 0.0, 0.3, 1.0, 1.644854, 2.5758, 5.0])
def test_normal_cdf_matches_series(z):
    assert normal_cdf(z) == pytest.approx(normal_cdf_series(z), abs=1e-14)


@pytest.mark.parametrize("df", [1, 2, 5, 30, 44])
@pytest.mark.parametrize("t", [-3.2, -1.0, 0.0, 0.7, 2.021])
def test_student_t_cdf_matches_quadrature(t, df):
    assert student_t_cdf(t, df) == pytest.approx(t_cdf_quadrature(t, df), abs=1e-10)


def test_t_pvalue_known_points():
    assert t_two_sided_pvalue(0.0, 10) == pytest.approx(1.0)
    # Cauchy: P(|T| > 1) = 1/2
    assert t_two_sided_pvalue(1.0, 1) == pytest.approx(0.5, abs=1e-14)


@given(st.floats(min_value=0.0, max_value=60.0))
def test_chi_square_one_df_identity(x):
    # chi2(1) is the square of a standard normal
    expected = 2.0 * normal_cdf(math.sqrt(x)) - 1.0
    assert chi_square_cdf(x, 1) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("df", [2, 4, 6])
def test_chi_square_even_df_closed_form(df):
    # P(X > x) = exp(-x/2) sum_{j<df/2} (x/2)^j / j!
    for x in (0.5, 3.0, 9.21, 20.0):
        sf = math.exp(-x / 2) * sum((x / 2) ** j / math.factorial(j) for j in range(df // 2))
        assert chi_square_sf(x, df) == pytest.approx(sf, rel=1e-12)


def test_chi_square_domain():
    with pytest.raises(DomainError):
        chi_square_cdf(-1.0, 2)
    with pytest.raises(DomainError):
        chi_square_cdf(1.0, 0)


def test_least_squares_against_normal_equations():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(1000):
        k = int(rng.integers(1, 13))
        n = int(rng.integers(k + 1, 61))
        X = rng.normal(size=(n, k))
        y = rng.normal(size=n)
        beta, xtx_inv = solve_least_squares(X, y)
        ref = normal_equations(X, y)
        worst = max(worst, np.max(np.abs(beta - ref)) / max(np.max(np.abs(ref)), 1e-300))
        e = y - X @ beta
        assert np.max(np.abs(X.T @ e)) <= 1e-9 * (1 + np.abs(X).max() * np.abs(y).max() * n)
        assert_allclose(xtx_inv @ (X.T @ X), np.eye(k), atol=1e-8)
    assert worst < 1e-8


def test_collinear_column_is_named():
    rng = np.random.default_rng(1)
    X = rng.normal(size=(20, 3))
    X = np.column_stack([X, X[:, 0] - 2 * X[:, 2]])
    with pytest.raises(CollinearityError) as info:
        solve_least_squares(X, rng.normal(size=20), names=["a", "b", "c", "d"])
    assert "d" in str(info.value)


def test_underdetermined_system():
    with pytest.raises(EstimabilityError):
        solve_least_squares(np.ones((2, 3)), np.ones(2))


def test_cusum_constants_verbatim():
    assert CUSUM_CRITICAL == (1.143, 0.947, 0.850)
    assert lookup_critical("cusum").values == (1.143, 0.947, 0.850)


@pytest.mark.parametrize("variant", ["no-constant", "drift", "trend"])
@pytest.mark.parametrize("nobs", [25, 44, 100, 500])
def test_adf_critical_values_match_statsmodels(variant, nobs):
    from statsmodels.tsa.adfvalues import mackinnoncrit

    regression = {"no-constant": "n", "drift": "c", "trend": "ct"}[variant]
    ref = mackinnoncrit(N=1, regression=regression, nobs=nobs)
    assert_allclose(lookup_critical("adf", variant=variant, nobs=nobs).values, ref, rtol=1e-10)


@pytest.mark.parametrize(
    "family,params",
    [("adf", {"variant": "drift", "nobs": 40}), ("za", {"break_type": "both"}),
     ("za", {"break_type": "intercept"}), ("za", {"break_type": "trend"}), ("cusum", {})],
)
def test_tables_monotone_in_level(family, params):
    table = lookup_critical(family, **params)
    v = table.values
    if table.left_tailed:
        assert v[0] < v[1] < v[2]
    else:
        assert v[0] > v[1] > v[2]
    assert table.levels == LEVELS


def test_unknown_family():
    with pytest.raises(DomainError):
        lookup_critical("kpss")
    with pytest.raises(DomainError):
        lookup_critical("za", break_type="level")
