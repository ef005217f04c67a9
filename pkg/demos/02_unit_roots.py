# coding: utf-8

# # Unit roots before regressions
#
# Regressing one trending series on another can produce a convincing fit
# out of nothing.  The augmented Dickey-Fuller test checks each series
# first; the Zivot-Andrews variant lets the null be rejected in favour of
# stationarity around a single broken trend.

# %%

import numpy as np

from armeycurve import adf_test, select_lag_bic, zivot_andrews

rng = np.random.default_rng(7)

# %% [markdown]
# A random walk and a stationary AR(1).  The lag order of the augmenting
# differences is chosen by BIC, comparing every candidate on the same
# sample.

# %%

walk = np.cumsum(rng.normal(size=300))
ar = np.zeros(300)
for t in range(1, 300):
    ar[t] = 0.3 * ar[t - 1] + rng.normal()

for name, x in (("walk", walk), ("ar(1)", ar)):
    r = adf_test(x, variant="drift", name=name)
    print(f"{name:6s} stat={r.statistic:7.3f} lag={r.chosen_lag} "
          f"5% cv={r.critical_values[0.05]:.3f} reject@5%={r.verdicts[0.05]}")

print("BIC lag for white noise:", select_lag_bic(rng.normal(size=200)))

# %% [markdown]
# The statistic is a t-ratio, so rescaling the series changes nothing:

# %%

print(adf_test(walk).statistic, adf_test(1000 * walk).statistic)

# %% [markdown]
# A level shift at observation 30 fools the plain test into accepting a
# unit root more often than it should.  Zivot-Andrews searches the break
# date and reports the whole trace of candidate statistics.

# %%

t = np.arange(100)
shifted = 0.05 * t + 5.0 * (t > 30) + rng.normal(size=100)
plain = adf_test(shifted, variant="trend")
za = zivot_andrews(shifted, break_type="intercept", max_lag=4)
print("ADF (trend):", round(plain.statistic, 3), plain.verdicts[0.05])
print("ZA:", round(za.statistic, 3), "break at", za.break_index, za.verdicts[0.05])
worst = sorted(za.trace, key=lambda row: row[1])[:3]
print("lowest candidates:", [(i, round(s, 2)) for i, s, _ in worst])
