# coding: utf-8

# # Where does growth peak?
#
# A quadratic growth regression in a spending share has a single turning
# point.  When the squared term is negative the turning point is a
# maximum, and its location is the growth-maximising share.

# %%

from pathlib import Path

import numpy as np

from armeycurve import fit_armey_model, load_csv, optimal_share, prepare_armey_frame

DATA = Path(__file__).resolve().parents[1] / "data" / "synthetic.csv"

# %% [markdown]
# The vertex formula on its own.  With a linear coefficient of 9.155 and a
# quadratic coefficient of -0.848 the peak sits just under 5.4 percent.

# %%

print(optimal_share(9.155, -0.848))
print(optimal_share(2.820, -0.195))

# A positive quadratic term has no interior maximum and is refused:
try:
    optimal_share(1.0, 0.5)
except ArithmeticError as exc:
    print("refused:", exc)

# %% [markdown]
# Now on data.  The bundled file holds simulated annual levels (GDP,
# investment, consumption share, exports, population); the frame helper
# turns them into growth rates and shares of GDP.

# %%

frame = prepare_armey_frame(load_csv(DATA))
print(frame.names)

for spending in ("GFCF", "GFCE"):
    res = fit_armey_model(frame, spending)
    f = res.fit
    print(f"{spending}: b3={res.beta3:.3f} b4={res.beta4:.3f} "
          f"R2={f.r2:.3f} RMSE={f.rmse:.3f} peak={res.optimum_share:.2f}% ({res.shape})")

# %% [markdown]
# `curve` samples the fitted partial relationship over the observed range,
# with the other regressors held at their means.  Its argmax should land
# next to the analytic vertex.

# %%

grid, growth = res.curve.T
print(grid[np.argmax(growth)], res.optimum_share)
