"""Embedded critical-value tables.

ADF
    Response surfaces of MacKinnon (2010), "Critical Values for
    Cointegration Tests", Queen's Economics Department WP 1227, Table 2
    (one variable).  ``cv(T) = b_inf + b1/T + b2/T^2 + b3/T^3`` with ``T``
    the number of observations in the test regression.
Zivot-Andrews
    Asymptotic critical values of Zivot & Andrews (1992), JBES 10(3),
    Tables 2 (break in intercept, "model A"), 3 (trend, "model B") and
    4 (both, "model C").
CUSUM
    Boundary constants of Brown, Durbin & Evans (1975).  The 5% entry is
    kept at 0.947 as printed in the Cambodian application instead of the
    usual 0.948; the difference moves the 5% line by 0.1%.
"""
from dataclasses import dataclass, field

from ..errors import DomainError

LEVELS = (0.01, 0.05, 0.10)

ADF_VARIANTS = ("no-constant", "drift", "trend")
ZA_BREAK_TYPES = ("intercept", "trend", "both")

_MACKINNON_2010 = {
    "no-constant": (
        (-2.56574, -2.2358, -3.627, 0.0),
        (-1.94100, -0.2686, -3.365, 31.223),
        (-1.61682, 0.2656, -2.714, 25.364),
    ),
    "drift": (
        (-3.43035, -6.5393, -16.786, -79.433),
        (-2.86154, -2.8903, -4.234, -40.040),
        (-2.56677, -1.5384, -2.809, 0.0),
    ),
    "trend": (
        (-3.95877, -9.0531, -28.428, -134.155),
        (-3.41049, -4.3904, -9.036, -45.374),
        (-3.12705, -2.5856, -3.925, -22.380),
    ),
}

_ZIVOT_ANDREWS_1992 = {
    "intercept": (-5.34, -4.80, -4.58),
    "trend": (-4.93, -4.42, -4.11),
    "both": (-5.57, -5.08, -4.82),
}

CUSUM_CRITICAL = (1.143, 0.947, 0.850)


@dataclass(frozen=True)
class CriticalValueTable:
    """Critical values at the 1%, 5% and 10% levels.

    ``left_tailed`` tables reject for statistics *below* the critical value
    (unit-root tests); the CUSUM table rejects for statistics at or above it.
    """

    family: str
    values: tuple
    left_tailed: bool
    params: dict = field(default_factory=dict)
    levels: tuple = LEVELS

    def __getitem__(self, level):
        return self.values[self.levels.index(level)]

    def as_dict(self):
        return dict(zip(self.levels, self.values))

    def rejects(self, statistic, level):
        cv = self[level]
        return statistic < cv if self.left_tailed else statistic >= cv


def _adf(variant, nobs):
    if variant not in _MACKINNON_2010:
        raise DomainError(f"unknown ADF variant {variant!r}; expected one of {ADF_VARIANTS}")
    if nobs is None or nobs < 1:
        raise DomainError("ADF critical values need the regression sample size")
    vals = tuple(
        b0 + b1 / nobs + b2 / nobs**2 + b3 / nobs**3
        for b0, b1, b2, b3 in _MACKINNON_2010[variant]
    )
    return CriticalValueTable("adf", vals, True, {"variant": variant, "nobs": int(nobs)})


def lookup_critical(family, **params):
    """Return the 1/5/10% critical values for a test family.

    Parameters
    ----------
    family : {"adf", "za", "cusum"}
    **params
        ``adf`` needs ``variant`` and ``nobs``; ``za`` needs ``break_type``.

    Examples
    --------
    >>> lookup_critical("cusum").values
    (1.143, 0.947, 0.85)
    """
    if family == "adf":
        return _adf(params.get("variant"), params.get("nobs"))
    if family == "za":
        bt = params.get("break_type")
        if bt not in _ZIVOT_ANDREWS_1992:
            raise DomainError(
                f"unknown Zivot-Andrews break type {bt!r}; expected one of {ZA_BREAK_TYPES}"
            )
        return CriticalValueTable("za", _ZIVOT_ANDREWS_1992[bt], True, {"break_type": bt})
    if family == "cusum":
        return CriticalValueTable("cusum", CUSUM_CRITICAL, False)
    raise DomainError(f"unsupported critical-value family {family!r}")
