"""Residual diagnostics and the CUSUM stability test."""
import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import CollinearityError, ConfigError, DegenerateError, EstimabilityError
from .numerics import LEVELS, chi_square_sf, lookup_critical, solve_least_squares
from .ols import recursive_residuals

#: Relative residual norm below which a candidate White regressor is treated
#: as a linear combination of those already kept.
WHITE_DEDUP_TOL = 1e-8

#: Residual norm, relative to the response, treated as an exact fit.
ROUNDOFF_TOL = 1e-10


@dataclass(frozen=True)
class TestResult:
    """Chi-square (or tabulated) test outcome.

    ``verdicts[level]`` is True when the null is rejected at ``level``.
    """

    __test__ = False  # keep pytest from collecting this class

    name: str
    statistic: float
    df: int
    p_value: float
    verdicts: dict
    nuisance: dict = field(default_factory=dict)

    @property
    def distribution(self):
        return f"chi2({self.df})"


def _chi2_result(name, stat, df, **nuisance):
    p = float(chi_square_sf(max(stat, 0.0), df))
    return TestResult(
        name=name,
        statistic=float(stat),
        df=int(df),
        p_value=p,
        verdicts={lv: p < lv for lv in LEVELS},
        nuisance=nuisance,
    )


def _aux_r2(y, X):
    """Centred R-squared of ``y`` on ``[1, X]``."""
    Z = np.column_stack([np.ones(len(y)), X])
    beta, _ = solve_least_squares(Z, y)
    resid = y - Z @ beta
    tss = np.sum((y - y.mean()) ** 2)
    return 0.0 if tss == 0.0 else float(1.0 - resid @ resid / tss)


def _non_constant(fit):
    d = fit.design
    keep = [i for i, n in enumerate(d.regressor_names) if not (d.has_intercept and n == "const")]
    return d.X[:, keep], [d.regressor_names[i] for i in keep]


def breusch_godfrey(fit, lag_order=2):
    """Breusch-Godfrey LM test for serial correlation up to ``lag_order``.

    Auxiliary regression of ``e_t`` on the original regressors and
    ``e_{t-1}, ..., e_{t-p}``, with pre-sample residuals set to zero so all
    ``n`` observations are kept.  ``LM = n R^2 ~ chi2(p)``.
    """
    p = int(lag_order)
    if p <= 0:
        raise ConfigError(f"lag order must be positive, got {lag_order}")
    e = fit.residuals
    n = len(e)
    if n < p + fit.design.k + 1:
        raise EstimabilityError(f"{n} residuals cannot support lag order {p}")
    if np.linalg.norm(e) <= ROUNDOFF_TOL * max(1.0, np.linalg.norm(fit.design.response)):
        return _chi2_result("Breusch-Godfrey LM", 0.0, p, lag_order=p, nobs=n)
    lags = np.zeros((n, p))
    for i in range(1, p + 1):
        lags[i:, i - 1] = e[:-i]
    Z = np.column_stack([fit.design.X, lags])
    beta, _ = solve_least_squares(Z, e)
    u = e - Z @ beta
    tss = np.sum((e - e.mean()) ** 2)
    r2 = 1.0 - (u @ u) / tss
    return _chi2_result("Breusch-Godfrey LM", n * r2, p, lag_order=p, nobs=n)


def white_auxiliary_columns(X, names, include_cross_terms=True):
    """Levels, squares and (optionally) cross products, deduplicated.

    Candidates are considered in the order levels, squares, cross products
    and a candidate is dropped when it is a linear combination of the
    constant and the columns kept so far (first occurrence wins), e.g. the
    square of a dummy or ``GOV * GOV`` when ``GOV^2`` is already a level.
    """
    k = X.shape[1]
    cands = [(names[i], X[:, i]) for i in range(k)]
    cands += [(f"{names[i]}^2", X[:, i] ** 2) for i in range(k)]
    if include_cross_terms:
        cands += [
            (f"{names[i]}*{names[j]}", X[:, i] * X[:, j])
            for i, j in itertools.combinations(range(k), 2)
        ]
    kept_names, kept = [], [np.ones(X.shape[0])]
    for name, col in cands:
        basis = np.column_stack(kept)
        coef, *_ = np.linalg.lstsq(basis, col, rcond=None)
        resid = col - basis @ coef
        if np.linalg.norm(resid) > WHITE_DEDUP_TOL * max(np.linalg.norm(col), 1e-300):
            kept.append(col)
            kept_names.append(name)
    return np.column_stack(kept[1:]) if kept_names else np.empty((X.shape[0], 0)), kept_names


def white_test(fit, include_cross_terms=True):
    """White's general heteroscedasticity test.

    Regresses ``e_t^2`` on a constant and the columns returned by
    :func:`white_auxiliary_columns`; ``n R^2 ~ chi2(q)`` with ``q`` the
    number of retained auxiliary regressors.
    """
    X, names = _non_constant(fit)
    Z, aux_names = white_auxiliary_columns(X, names, include_cross_terms)
    n, q = Z.shape
    if q == 0:
        raise DegenerateError("White test has no auxiliary regressors")
    if n <= q + 1:
        raise EstimabilityError(
            f"White auxiliary regression has {q + 1} columns for {n} observations; "
            "try include_cross_terms=False"
        )
    e2 = fit.residuals**2
    try:
        r2 = _aux_r2(e2, Z)
    except CollinearityError as exc:
        raise CollinearityError(f"White auxiliary design is degenerate: {exc}") from exc
    return _chi2_result(
        "White",
        n * r2,
        q,
        include_cross_terms=bool(include_cross_terms),
        nobs=n,
        regressors=aux_names,
    )


def moments(x):
    """Moment-based skewness and kurtosis (population denominators)."""
    x = np.asarray(x, dtype=float)
    d = x - x.mean()
    m2 = np.mean(d**2)
    if m2 == 0.0:
        raise DegenerateError("zero variance")
    return float(np.mean(d**3) / m2**1.5), float(np.mean(d**4) / m2**2)


def jarque_bera(residuals):
    """``JB = n (S^2/6 + (K-3)^2/24) ~ chi2(2)``, asymptotic reference."""
    x = np.asarray(residuals, dtype=float)
    if x.size < 4:
        raise EstimabilityError("Jarque-Bera needs at least 4 observations")
    s, k = moments(x)
    jb = x.size * (s**2 / 6.0 + (k - 3.0) ** 2 / 24.0)
    return _chi2_result("Jarque-Bera", jb, 2, skewness=s, kurtosis=k, nobs=int(x.size))


@dataclass(frozen=True)
class CusumResult:
    """CUSUM of recursive residuals against the Brown-Durbin-Evans band.

    ``path[i]`` is the cumulative sum up to observation ``t = k + 1 + i``
    (1-based).  ``bound_unit[i]`` is the half-width of the band for a unit
    critical constant, so the band at level ``L`` is
    ``critical_values[L] * bound_unit``.
    """

    path: np.ndarray
    bound_unit: np.ndarray
    years: np.ndarray
    recursive_residuals: np.ndarray
    sigma: float
    statistic: float
    critical_values: object
    n: int
    k: int

    def bounds(self, level):
        a = self.critical_values[level]
        return -a * self.bound_unit, a * self.bound_unit

    def exits_band(self, level):
        """True when ``|W_t|`` reaches the band at some ``t``."""
        ratio = np.abs(self.path) / self.bound_unit
        return bool(np.any(ratio >= self.critical_values[level]))

    @property
    def verdicts(self):
        return {lv: self.critical_values.rejects(self.statistic, lv) for lv in LEVELS}


def cusum_test(design):
    """Brown-Durbin-Evans CUSUM test.

    ``W_t = sum_{j=k+1..t} w_j / s`` where ``w`` are the recursive
    residuals and ``s`` their sample standard deviation (mean-corrected,
    ``n - k - 1`` degrees of freedom).  The band is
    ``+/- a [sqrt(n-k) + 2 (t-k) / sqrt(n-k)]``; the scalar statistic is
    ``max_t |W_t| / [sqrt(n-k) + 2 (t-k) / sqrt(n-k)]``, so rejection at
    level ``L`` (statistic >= a_L) coincides with the path touching the
    band.
    """
    w = recursive_residuals(design)
    n, k = design.X.shape
    m = n - k
    sigma = float(np.std(w, ddof=1)) if m > 1 else 0.0
    # An exact fit leaves only rounding noise; standardising it by its own
    # spread would manufacture a random walk out of nothing.
    if np.linalg.norm(w) <= ROUNDOFF_TOL * max(np.linalg.norm(design.response), 1.0):
        sigma = 0.0
    if sigma > 0.0:
        path = np.cumsum(w) / sigma
    else:
        path = np.zeros(m)
    steps = np.arange(1, m + 1)
    bound = np.sqrt(m) + 2.0 * steps / np.sqrt(m)
    stat = float(np.max(np.abs(path) / bound))
    return CusumResult(
        path=path,
        bound_unit=bound,
        years=design.years[k:],
        recursive_residuals=w,
        sigma=sigma,
        statistic=stat,
        critical_values=lookup_critical("cusum"),
        n=n,
        k=k,
    )
