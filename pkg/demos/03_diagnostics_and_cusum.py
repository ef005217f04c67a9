# coding: utf-8

# # Residual checks and parameter stability
#
# Three chi-square diagnostics look at the residuals of a fit (serial
# correlation, heteroscedasticity, normality).  The CUSUM test looks at
# something else: whether one-step-ahead forecast errors drift in one
# direction, which they do after a coefficient shifts.

# %%

import numpy as np

from armeycurve import breusch_godfrey, cusum_test, fit, jarque_bera, white_test
from armeycurve.dataset import DesignMatrix

rng = np.random.default_rng(3)
n = 100
x = rng.normal(2.0, 1.0, n)

# %% [markdown]
# A well-behaved regression first.

# %%

clean = fit(DesignMatrix.from_arrays(1 + x + rng.normal(size=n), x[:, None]))
for test in (breusch_godfrey(clean, 2), white_test(clean), jarque_bera(clean.residuals)):
    print(f"{test.name:20s} {test.statistic:7.3f}  {test.distribution}  p={test.p_value:.3f}")

# %% [markdown]
# Autocorrelated errors light up Breusch-Godfrey; errors whose spread
# grows with the regressor light up White.

# %%

e = np.zeros(n)
for t in range(1, n):
    e[t] = 0.8 * e[t - 1] + rng.normal()
print(breusch_godfrey(fit(DesignMatrix.from_arrays(1 + x + e, x[:, None])), 2).p_value)
print(white_test(fit(DesignMatrix.from_arrays(1 + x + x * rng.normal(size=n), x[:, None]))).p_value)

# %% [markdown]
# CUSUM.  Halfway through the sample the intercept jumps by five error
# standard deviations.  The cumulative sum of standardised recursive
# residuals leaves the band soon after.

# %%

y = 1 + x + 5.0 * (np.arange(n) >= n // 2) + rng.normal(size=n)
c = cusum_test(DesignMatrix.from_arrays(y, x[:, None]))
lo, hi = c.bounds(0.05)
first_exit = int(np.argmax(np.abs(c.path) >= hi))
print("statistic", round(c.statistic, 3), "critical values", c.critical_values.values)
print("rejects at", [lv for lv, r in c.verdicts.items() if r])
print("first exit at observation", c.k + 1 + first_exit)

# %% [markdown]
# The same picture as a vector drawing (written next to this script).

# %%

from pathlib import Path

from armeycurve.svg import cusum_svg

out = Path("cusum_break_demo.svg")
out.write_text(cusum_svg(np.arange(c.k, n), c.path, lo, hi, "5%", "CUSUM, shifted intercept"))
print("wrote", out.resolve())
