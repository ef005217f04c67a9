"""Ordinary least squares with the usual inference package."""
from dataclasses import dataclass

import numpy as np

from .dataset import DesignMatrix
from .errors import CollinearityError, RecursiveResidualError
from .numerics import solve_least_squares, t_two_sided_pvalue


def significance_stars(pvalue):
    """``***`` at 1%, ``**`` at 5%, ``*`` at 10% (two-sided)."""
    if pvalue < 0.01:
        return "***"
    if pvalue < 0.05:
        return "**"
    if pvalue < 0.10:
        return "*"
    return ""


@dataclass(frozen=True)
class OlsFit:
    design: DesignMatrix
    beta: np.ndarray
    se: np.ndarray
    tstats: np.ndarray
    pvalues: np.ndarray
    residuals: np.ndarray
    fitted: np.ndarray
    sigma2: float
    r2: float
    adjusted_r2: float
    rmse: float
    df_resid: int
    covariance: np.ndarray
    xtx_inv: np.ndarray

    @property
    def names(self):
        return self.design.regressor_names

    @property
    def nobs(self):
        return self.design.nobs

    @property
    def ssr(self):
        return float(self.residuals @ self.residuals)

    def coef(self, name):
        return float(self.beta[self.names.index(name)])

    def stderr(self, name):
        return float(self.se[self.names.index(name)])

    def stars(self, name):
        return significance_stars(self.pvalues[self.names.index(name)])

    def predict(self, X):
        return np.asarray(X, dtype=float) @ self.beta


def _r2(y, resid, centered):
    ssr = resid @ resid
    tss = np.sum((y - y.mean()) ** 2) if centered else y @ y
    if tss == 0.0:
        return 0.0
    return float(1.0 - ssr / tss)


def fit(design):
    """Fit ``y = X b + e`` by least squares.

    ``sigma2`` uses ``n - k`` degrees of freedom and ``rmse`` is its square
    root.  R-squared is centred when the design has an intercept and
    uncentred otherwise.
    """
    y, X = design.response, design.X
    n, k = X.shape
    beta, xtx_inv = solve_least_squares(X, y, names=design.regressor_names)
    fitted = X @ beta
    resid = y - fitted
    df = n - k
    sigma2 = float(resid @ resid) / df
    cov = sigma2 * xtx_inv
    se = np.sqrt(np.diag(cov))
    with np.errstate(divide="ignore", invalid="ignore"):
        tstats = np.where(se > 0, beta / se, np.copysign(np.inf, beta))
    tstats = np.where((se == 0) & (beta == 0), 0.0, tstats)
    pvalues = t_two_sided_pvalue(tstats, df)
    r2 = _r2(y, resid, design.has_intercept)
    adj = 1.0 - (1.0 - r2) * ((n - 1) if design.has_intercept else n) / df
    return OlsFit(
        design=design,
        beta=beta,
        se=se,
        tstats=tstats,
        pvalues=pvalues,
        residuals=resid,
        fitted=fitted,
        sigma2=sigma2,
        r2=r2,
        adjusted_r2=float(adj),
        rmse=float(np.sqrt(sigma2)),
        df_resid=df,
        covariance=cov,
        xtx_inv=xtx_inv,
    )


def fit_arrays(y, X, names=None, intercept=True):
    """Shorthand for ``fit(DesignMatrix.from_arrays(...))``."""
    return fit(DesignMatrix.from_arrays(y, X, names=names, intercept=intercept))


def recursive_residuals(design):
    """Standardised one-step-ahead prediction errors (Brown, Durbin & Evans).

    For ``t = k+1, ..., n``::

        w_t = (y_t - x_t' b_{t-1}) / sqrt(1 + x_t' (X_{t-1}' X_{t-1})^{-1} x_t)

    where ``b_{t-1}`` is the least-squares fit on the first ``t-1`` rows.
    Every step is a fresh QR solve; at the sample sizes involved this is
    cheaper to reason about than rank-one updating.

    Returns
    -------
    ndarray, shape (n - k,)
    """
    y, X = design.response, design.X
    n, k = X.shape
    out = np.empty(n - k)
    for t in range(k, n):
        try:
            b, s = solve_least_squares(X[:t], y[:t], names=design.regressor_names)
        except CollinearityError as exc:
            if t == k:
                raise RecursiveResidualError(
                    f"leading {k}x{k} block of the design is singular ({exc}); "
                    "reorder the observations or drop the offending column"
                ) from exc
            raise RecursiveResidualError(f"sub-design of {t} rows is singular: {exc}") from exc
        x = X[t]
        out[t - k] = (y[t] - x @ b) / np.sqrt(1.0 + x @ s @ x)
    return out
