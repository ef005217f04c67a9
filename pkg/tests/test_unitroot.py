import numpy as np
import pytest
from numpy.testing import assert_allclose

from armeycurve.errors import ConfigError, DegenerateError, LengthError
from armeycurve.numerics import lookup_critical
from armeycurve.unitroot import (
    adf_test,
    schwert_max_lag,
    select_lag_bic,
    za_candidate_window,
    zivot_andrews,
)

SM_REGRESSION = {"no-constant": "n", "drift": "c", "trend": "ct"}


def _ar1(rng, n, phi):
    x = np.zeros(n)
    e = rng.normal(size=n)
    for t in range(1, n):
        x[t] = phi * x[t - 1] + e[t]
    return x


def _level_shift_fixture(seed=19):
    rng = np.random.default_rng(seed)
    t = np.arange(100)
    return 0.05 * t + 5.0 * (t > 30) + _ar1(rng, 100, 0.5)


@pytest.mark.parametrize("variant", ["no-constant", "drift", "trend"])
def test_adf_matches_statsmodels_bic(variant, rng):
    from statsmodels.tsa.stattools import adfuller

    x = np.cumsum(rng.normal(size=120)) + 0.3 * _ar1(rng, 120, 0.5)
    res = adf_test(x, variant=variant, max_lag=6)
    ref = adfuller(x, maxlag=6, regression=SM_REGRESSION[variant], autolag="BIC")
    assert res.chosen_lag == ref[2]
    assert res.statistic == pytest.approx(ref[0], rel=1e-10)
    assert res.nobs == ref[3]


def test_adf_fixed_lag_matches_statsmodels(rng):
    from statsmodels.tsa.stattools import adfuller

    x = _ar1(rng, 80, 0.7)
    res = adf_test(x, max_lag=3, criterion=None)
    assert res.chosen_lag == 3
    assert res.statistic == pytest.approx(adfuller(x, maxlag=3, autolag=None)[0], rel=1e-10)


def test_schwert_rule():
    assert schwert_max_lag(45) == 9
    assert schwert_max_lag(100) == 12


@pytest.mark.parametrize("variant", ["no-constant", "drift", "trend"])
def test_adf_scale_invariant(variant, rng):
    x = np.cumsum(rng.normal(size=60))
    a = adf_test(x, variant=variant)
    b = adf_test(1000.0 * x, variant=variant)
    assert a.chosen_lag == b.chosen_lag
    assert a.statistic == pytest.approx(b.statistic, abs=1e-9)


def test_verdicts_follow_table(rng):
    res = adf_test(_ar1(rng, 50, 0.5), variant="drift")
    table = lookup_critical("adf", variant="drift", nobs=res.nobs)
    for level, rejected in res.verdicts.items():
        assert rejected == (res.statistic < table[level])


def test_adf_errors():
    with pytest.raises(LengthError):
        adf_test(np.arange(12.0), max_lag=4)
    with pytest.raises(DegenerateError):
        adf_test(np.full(60, 3.0))


def test_bic_lag_zero_when_max_lag_zero(rng):
    assert select_lag_bic(rng.normal(size=50), max_lag=0) == 0


def test_bic_deterministic_and_bounded(rng):
    x = np.cumsum(rng.normal(size=70))
    lags = {select_lag_bic(x, max_lag=m) for m in [5] * 5}
    assert len(lags) == 1
    for m in range(7):
        assert select_lag_bic(x, max_lag=m) <= m


def test_bic_ties_go_to_smaller_lag(monkeypatch, rng):
    import armeycurve.unitroot as ur

    monkeypatch.setattr(ur, "_bic", lambda ssr, nobs, k: 1.0)
    assert select_lag_bic(np.cumsum(rng.normal(size=60)), max_lag=5) == 0


@pytest.mark.parametrize("seed", range(5))
def test_bic_choice_matches_independent_computation(seed):
    rng = np.random.default_rng(seed)
    x = np.cumsum(_ar1(rng, 90, 0.6))
    max_lag = 6
    dx = np.diff(x)
    t = np.arange(max_lag + 1, len(x))
    crit = []
    for p in range(max_lag + 1):
        X = np.column_stack([np.ones(len(t)), x[t - 1]] + [dx[t - 1 - i] for i in range(1, p + 1)])
        y = dx[t - 1]
        _, ssr, *_ = np.linalg.lstsq(X, y, rcond=None)
        crit.append(len(y) * np.log(ssr[0] / len(y)) + X.shape[1] * np.log(len(y)))
    assert select_lag_bic(x, max_lag=max_lag) == int(np.argmin(crit))


@pytest.mark.slow
def test_random_walk_size():
    rejections = 0
    for seed in range(1000):
        x = np.cumsum(np.random.default_rng(seed).normal(size=500))
        rejections += adf_test(x).verdicts[0.05]
    assert 0.02 <= rejections / 1000 <= 0.09


@pytest.mark.slow
def test_ar1_power():
    rejections = sum(
        adf_test(_ar1(np.random.default_rng(s), 500, 0.3)).verdicts[0.01] for s in range(200)
    )
    assert rejections == 200


@pytest.mark.slow
def test_bic_white_noise_lag_zero():
    zero = sum(
        select_lag_bic(np.random.default_rng(s).normal(size=100)) == 0 for s in range(1000)
    )
    assert zero / 1000 >= 0.90


@pytest.mark.slow
def test_bic_finds_ar2_in_differences():
    count = 0
    for s in range(200):
        rng = np.random.default_rng(s)
        dx = np.zeros(300)
        e = rng.normal(size=300)
        for t in range(2, 300):
            dx[t] = 0.6 * dx[t - 1] - 0.4 * dx[t - 2] + e[t]
        count += select_lag_bic(np.cumsum(dx)) >= 2
    assert count / 200 > 0.5


def test_za_level_shift_fixture():
    res = zivot_andrews(_level_shift_fixture(), break_type="intercept", max_lag=4)
    assert abs(res.break_index - 30) <= 2
    assert res.verdicts[0.05]


@pytest.mark.parametrize("break_type", ["intercept", "trend", "both"])
def test_za_statistic_is_trace_minimum(break_type, rng):
    x = np.cumsum(rng.normal(size=60))
    res = zivot_andrews(x, break_type=break_type)
    stats = [t for _, t, _ in res.trace]
    assert res.statistic == min(stats)
    assert all(res.statistic <= t for t in stats)
    years = [y for y, _, _ in res.trace]
    assert years[0] <= res.break_year <= years[-1]
    assert res.break_year == years[stats.index(min(stats))]


def test_za_matches_statsmodels_with_fixed_lag():
    from statsmodels.tsa.stattools import zivot_andrews as sm_za

    x = _level_shift_fixture()
    res = zivot_andrews(x, break_type="both", max_lag=2, criterion=None)
    ref = sm_za(x, maxlag=2, regression="ct", autolag=None, trim=0.15)
    assert res.statistic == pytest.approx(ref[0], rel=1e-8)
    assert res.break_index == ref[4]


def test_za_upfront_lag_search(rng):
    x = np.cumsum(rng.normal(size=60))
    res = zivot_andrews(x, lag_search="upfront")
    assert len({lag for _, _, lag in res.trace}) == 1


def test_za_years_label_trace(rng):
    x = np.cumsum(rng.normal(size=45))
    res = zivot_andrews(x, years=np.arange(1971, 2016))
    assert 1971 <= res.break_year <= 2015
    assert res.break_year == 1971 + res.break_index


def test_za_configuration_errors(rng):
    x = np.cumsum(rng.normal(size=40))
    with pytest.raises(ConfigError):
        zivot_andrews(x, trim_fraction=0.5)
    with pytest.raises(ConfigError):
        zivot_andrews(x, trim_fraction=0.45, max_lag=20)
    with pytest.raises(LengthError):
        zivot_andrews(x[:15])


def test_za_window_bounds():
    lo, hi = za_candidate_window(100, 0.15, 4)
    assert lo == 15 and hi == 84
    lo, _ = za_candidate_window(45, 0.15, 9)
    assert lo == 11
