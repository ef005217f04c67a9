"""Distribution functions used for p-values.

Thin wrappers over the Cephes routines in :mod:`scipy.special`; the upper
tail functions avoid the cancellation in ``1 - cdf`` for small p-values.
"""
import numpy as np
from scipy import special

from ..errors import DomainError


def normal_cdf(z):
    """Standard normal CDF, ``0.5 * erfc(-z / sqrt(2))``."""
    return special.ndtr(z)


def normal_sf(z):
    return special.ndtr(-np.asarray(z, dtype=float))


def _check_chi2(x, df):
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise DomainError("chi-square argument must be non-negative")
    if df < 1 or int(df) != df:
        raise DomainError(f"degrees of freedom must be a positive integer, got {df}")
    return x


def chi_square_cdf(x, df):
    """Regularised lower incomplete gamma ``P(df/2, x/2)``."""
    x = _check_chi2(x, df)
    return special.gammainc(df / 2.0, x / 2.0)


def chi_square_sf(x, df):
    x = _check_chi2(x, df)
    return special.gammaincc(df / 2.0, x / 2.0)


def _t_tail(t, df):
    # P(T > |t|) = I_{df/(df+t^2)}(df/2, 1/2) / 2
    t = np.asarray(t, dtype=float)
    if df <= 0:
        raise DomainError(f"degrees of freedom must be positive, got {df}")
    return 0.5 * special.betainc(df / 2.0, 0.5, df / (df + t * t))


def student_t_cdf(t, df):
    """Student-t CDF through the regularised incomplete beta function."""
    t = np.asarray(t, dtype=float)
    tail = _t_tail(t, df)
    return np.where(t > 0, 1.0 - tail, tail)


def student_t_sf(t, df):
    t = np.asarray(t, dtype=float)
    tail = _t_tail(t, df)
    return np.where(t > 0, tail, 1.0 - tail)


def t_two_sided_pvalue(t, df):
    return 2.0 * _t_tail(t, df)
