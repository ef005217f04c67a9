"""Growth-maximising government spending shares from quadratic growth regressions.

Modules
-------
dataset      CSV ingestion, growth rates, shares, dummies, design matrices
numerics     least squares, distribution functions, critical-value tables
ols          OLS fits and recursive residuals
unitroot     ADF with BIC lag selection, Zivot-Andrews
diagnostics  Breusch-Godfrey, White, Jarque-Bera, CUSUM
armey        quadratic models, optima, orthogonal-polynomial robustness model
"""
__version__ = "0.1.0"

from .armey import (
    build_ortho_basis,
    fit_armey_model,
    fit_robustness_model,
    optimal_share,
    vertex_on_raw_scale,
)
from .dataset import (
    DummySpec,
    TimeSeriesFrame,
    apply_dummy,
    build_design,
    growth_rate,
    load_csv,
    prepare_armey_frame,
    share_of_gdp,
)
from .diagnostics import breusch_godfrey, cusum_test, jarque_bera, white_test
from .ols import fit, recursive_residuals
from .unitroot import adf_test, select_lag_bic, zivot_andrews

__all__ = [
    "DummySpec",
    "TimeSeriesFrame",
    "adf_test",
    "apply_dummy",
    "breusch_godfrey",
    "build_design",
    "build_ortho_basis",
    "cusum_test",
    "fit",
    "fit_armey_model",
    "fit_robustness_model",
    "growth_rate",
    "jarque_bera",
    "load_csv",
    "optimal_share",
    "prepare_armey_frame",
    "recursive_residuals",
    "select_lag_bic",
    "share_of_gdp",
    "vertex_on_raw_scale",
    "white_test",
    "zivot_andrews",
]
