"""Augmented Dickey-Fuller and Zivot-Andrews unit-root tests.

Both tests regress the first difference on the lagged level, deterministic
terms and ``p`` lagged differences::

    dx_t = det_t + gamma * x_{t-1} + sum_{i=1..p} delta_i dx_{t-i} + u_t

and report the t-ratio on ``gamma``.  Time is indexed from 0 at the first
observation; the trend regressor is that index.

Zivot-Andrews break dummies, for a candidate break index ``tb``::

    DU_t = 1          if t > tb else 0     (shift in intercept)
    DT_t = t - tb     if t > tb else 0     (shift in trend slope)

so ``tb`` is the last observation of the old regime and the reported
``break_year`` is the calendar year of that observation.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, DegenerateError, LengthError
from .numerics import ADF_VARIANTS, LEVELS, ZA_BREAK_TYPES, lookup_critical, solve_least_squares

LAG_CRITERIA = ("bic", "t-stat", None)

#: |t| threshold for the general-to-specific lag search (10% two-sided).
T_STAT_CUTOFF = 1.645


def schwert_max_lag(n):
    """``floor(12 (n/100)^(1/4))``."""
    return int(math.floor(12.0 * (n / 100.0) ** 0.25))


@dataclass(frozen=True)
class UnitRootResult:
    name: str
    variant: str
    chosen_lag: int
    max_lag: int
    criterion: str
    statistic: float
    nobs: int
    critical_values: object
    verdicts: dict

    @property
    def rejects(self):
        return self.verdicts


@dataclass(frozen=True)
class ZaResult:
    name: str
    break_type: str
    break_index: int
    break_year: int
    statistic: float
    chosen_lag: int
    trace: list
    critical_values: object
    verdicts: dict
    settings: dict = field(default_factory=dict)


def _as_series(series):
    x = np.asarray(series, dtype=float)
    if x.ndim != 1:
        raise ValueError("series must be one-dimensional")
    if np.any(np.isnan(x)):
        raise DegenerateError("series contains missing values; pass the observed span only")
    return x


def _regression(x, lag, first, deterministics):
    """Rows ``t = first..n-1`` of the (augmented) Dickey-Fuller regression.

    ``deterministics(t)`` returns a list of columns evaluated at the row
    indices ``t``.  The lagged level is placed right after them; its
    column position is returned alongside ``y`` and ``X``.
    """
    n = len(x)
    dx = np.diff(x)
    t = np.arange(first, n)
    cols = list(deterministics(t))
    pos = len(cols)
    cols.append(x[t - 1])
    for i in range(1, lag + 1):
        cols.append(dx[t - 1 - i])
    X = np.column_stack(cols) if cols else np.empty((len(t), 0))
    return dx[t - 1], X, pos


def _ols_core(y, X):
    beta, xtx_inv = solve_least_squares(X, y)
    resid = y - X @ beta
    return beta, xtx_inv, float(resid @ resid)


def _t_ratio(y, X, pos):
    beta, xtx_inv, ssr = _ols_core(y, X)
    n, k = X.shape
    sigma2 = ssr / (n - k)
    if sigma2 == 0.0:
        raise DegenerateError("test regression fits exactly; the t-ratio is undefined")
    return beta[pos] / math.sqrt(sigma2 * xtx_inv[pos, pos]), beta, xtx_inv, sigma2


def _bic(ssr, nobs, k):
    if ssr <= 0.0:
        return -math.inf
    return nobs * math.log(ssr / nobs) + k * math.log(nobs)


def _select_lag(x, max_lag, deterministics, criterion):
    """Lag order by criterion; all candidates share the sample usable at ``max_lag``."""
    if criterion is None:
        return max_lag
    first = max_lag + 1
    if criterion == "bic":
        best, best_ic = 0, math.inf
        for p in range(max_lag + 1):
            y, X, _ = _regression(x, p, first, deterministics)
            _, _, ssr = _ols_core(y, X)
            ic = _bic(ssr, len(y), X.shape[1])
            # strict inequality: ties go to the smaller lag
            if ic < best_ic:
                best, best_ic = p, ic
        return best
    if criterion == "t-stat":
        for p in range(max_lag, 0, -1):
            y, X, _ = _regression(x, p, first, deterministics)
            beta, xtx_inv, ssr = _ols_core(y, X)
            sigma2 = ssr / (X.shape[0] - X.shape[1])
            last = X.shape[1] - 1
            if abs(beta[last]) / math.sqrt(sigma2 * xtx_inv[last, last]) >= T_STAT_CUTOFF:
                return p
        return 0
    raise ConfigError(f"unknown lag criterion {criterion!r}; expected one of {LAG_CRITERIA}")


def _adf_deterministics(variant):
    if variant == "no-constant":
        return lambda t: []
    if variant == "drift":
        return lambda t: [np.ones(len(t))]
    if variant == "trend":
        return lambda t: [np.ones(len(t)), t.astype(float)]
    raise ConfigError(f"unknown ADF variant {variant!r}; expected one of {ADF_VARIANTS}")


def _check_inputs(x, max_lag):
    if max_lag is None:
        max_lag = schwert_max_lag(len(x))
    if max_lag < 0:
        raise ConfigError("max_lag must be non-negative")
    if len(x) - 1 < max_lag + 10:
        raise LengthError(
            f"series of length {len(x)} is too short for max_lag={max_lag} "
            f"(need at least {max_lag + 11} observations)"
        )
    if np.ptp(x) == 0.0:
        raise DegenerateError("series is constant")
    return max_lag


def select_lag_bic(series, variant="drift", max_lag=None):
    """Lag order minimising ``BIC = n ln(SSR/n) + k ln(n)``.

    Every candidate regression uses the observations available at
    ``max_lag`` so the criteria are comparable; ties favour the smaller lag.
    """
    x = _as_series(series)
    max_lag = _check_inputs(x, max_lag)
    return _select_lag(x, max_lag, _adf_deterministics(variant), "bic")


def adf_test(series, variant="drift", max_lag=None, criterion="bic", name="x"):
    """Augmented Dickey-Fuller test.

    Parameters
    ----------
    series : array_like
        Observed values with no gaps.
    variant : {"no-constant", "drift", "trend"}
    max_lag : int, optional
        Defaults to :func:`schwert_max_lag`.
    criterion : {"bic", "t-stat", None}
        Lag selection rule.  ``None`` uses ``max_lag`` lags.  After
        selection the regression is re-estimated on every observation
        usable at the chosen lag.
    name : str
        Label echoed in the result.

    Returns
    -------
    UnitRootResult
        ``verdicts[level]`` is True when the unit root is rejected.
    """
    x = _as_series(series)
    max_lag = _check_inputs(x, max_lag)
    det = _adf_deterministics(variant)
    lag = _select_lag(x, max_lag, det, criterion)
    y, X, pos = _regression(x, lag, lag + 1, det)
    stat = _t_ratio(y, X, pos)[0]
    table = lookup_critical("adf", variant=variant, nobs=len(y))
    return UnitRootResult(
        name=name,
        variant=variant,
        chosen_lag=lag,
        max_lag=max_lag,
        criterion=str(criterion),
        statistic=float(stat),
        nobs=len(y),
        critical_values=table,
        verdicts={lv: bool(table.rejects(stat, lv)) for lv in LEVELS},
    )


def _za_deterministics(break_type, tb):
    def du(t):
        return (t > tb).astype(float)

    def dt(t):
        return np.where(t > tb, t - tb, 0).astype(float)

    if break_type == "intercept":
        return lambda t: [np.ones(len(t)), du(t), t.astype(float)]
    if break_type == "trend":
        return lambda t: [np.ones(len(t)), t.astype(float), dt(t)]
    if break_type == "both":
        return lambda t: [np.ones(len(t)), du(t), t.astype(float), dt(t)]
    raise ConfigError(f"unknown break type {break_type!r}; expected one of {ZA_BREAK_TYPES}")


def za_candidate_window(n, trim_fraction, max_lag):
    """Inclusive range of break indices searched by :func:`zivot_andrews`.

    The lower end is pushed past ``max_lag`` so at least two rows of the
    common regression sample precede the break (otherwise ``DT`` is
    collinear with the constant and trend); two rows must follow it.
    """
    cut = int(math.floor(trim_fraction * n))
    lo = max(cut, max_lag + 2)
    hi = min(n - cut - 1, n - 3)
    return lo, hi


def zivot_andrews(
    series,
    break_type="both",
    trim_fraction=0.15,
    max_lag=None,
    criterion="bic",
    lag_search="per-break",
    years=None,
    name="x",
):
    """Zivot-Andrews unit-root test with one endogenous break.

    Parameters
    ----------
    series : array_like
        At least 20 observations.
    break_type : {"intercept", "trend", "both"}
    trim_fraction : float
        Share of the sample excluded at each end of the break search.
    max_lag : int, optional
        Defaults to :func:`schwert_max_lag`.
    criterion : {"bic", "t-stat", None}
    lag_search : {"per-break", "upfront"}
        ``"per-break"`` chooses the lag separately for each candidate;
        ``"upfront"`` chooses it once from the trend ADF regression without
        break terms and reuses it.
    years : array_like of int, optional
        Calendar labels; defaults to ``0..n-1``.

    Returns
    -------
    ZaResult
        ``trace`` lists ``(year, t_ratio, lag)`` for every candidate.
    """
    x = _as_series(series)
    n = len(x)
    if n < 20:
        raise LengthError(f"Zivot-Andrews needs at least 20 observations, got {n}")
    if not 0.0 < trim_fraction < 0.5:
        raise ConfigError(f"trim_fraction must lie in (0, 0.5), got {trim_fraction}")
    if lag_search not in ("per-break", "upfront"):
        raise ConfigError(f"unknown lag_search {lag_search!r}")
    if break_type not in ZA_BREAK_TYPES:
        raise ConfigError(f"unknown break type {break_type!r}; expected one of {ZA_BREAK_TYPES}")
    max_lag = _check_inputs(x, max_lag)
    years = np.arange(n) if years is None else np.asarray(years, dtype=int)
    if len(years) != n:
        raise ValueError("years and series lengths differ")

    lo, hi = za_candidate_window(n, trim_fraction, max_lag)
    if lo > hi:
        raise ConfigError(
            f"no candidate breaks: window [{lo}, {hi}] is empty "
            f"(n={n}, trim={trim_fraction}, max_lag={max_lag})"
        )
    fixed_lag = None
    if lag_search == "upfront":
        fixed_lag = _select_lag(x, max_lag, _adf_deterministics("trend"), criterion)

    trace = []
    best = None
    for tb in range(lo, hi + 1):
        det = _za_deterministics(break_type, tb)
        lag = fixed_lag if fixed_lag is not None else _select_lag(x, max_lag, det, criterion)
        y, X, pos = _regression(x, lag, lag + 1, det)
        stat = float(_t_ratio(y, X, pos)[0])
        trace.append((int(years[tb]), stat, lag))
        # strict inequality: ties go to the earlier break
        if best is None or stat < best[1]:
            best = (tb, stat, lag)

    tb, stat, lag = best
    table = lookup_critical("za", break_type=break_type)
    return ZaResult(
        name=name,
        break_type=break_type,
        break_index=tb,
        break_year=int(years[tb]),
        statistic=stat,
        chosen_lag=lag,
        trace=trace,
        critical_values=table,
        verdicts={lv: bool(table.rejects(stat, lv)) for lv in LEVELS},
        settings={
            "trim_fraction": trim_fraction,
            "max_lag": max_lag,
            "criterion": str(criterion),
            "lag_search": lag_search,
            "window": (int(years[lo]), int(years[hi])),
        },
    )
