# coding: utf-8

# # Orthogonal polynomials for a quadratic term
#
# A share and its square are highly correlated, which inflates the
# standard errors of both coefficients.  Replacing (x, x^2) by discrete
# orthogonal polynomials P1, P2 built from a three-term recurrence leaves
# the fitted values untouched but decorrelates the two columns.

# %%

import numpy as np

from armeycurve import build_ortho_basis, vertex_on_raw_scale
from armeycurve.ols import fit_arrays

rng = np.random.default_rng(11)
x = rng.uniform(2, 9, 45)
y = 4 + 2.5 * x - 0.25 * x**2 + rng.normal(size=45)

print("corr(x, x^2) =", np.corrcoef(x, x**2)[0, 1])

# %% [markdown]
# The basis is scaled so that the Gram matrix of (1, P1, P2) is n times
# the identity.

# %%

basis = build_ortho_basis(x, name="share")
Z = np.column_stack([np.ones(45), basis.columns])
print(np.round(Z.T @ Z, 10))
print("recurrence a:", basis.a, "b:", basis.b)

# %% [markdown]
# Same column space, same fit:

# %%

raw = fit_arrays(y, np.column_stack([x, x**2]))
ortho = fit_arrays(y, basis.columns)
print(raw.r2, ortho.r2, np.max(np.abs(raw.fitted - ortho.fitted)))

# %% [markdown]
# Where is the peak?  In P1 units the vertex is -a1/(2 a2).  Mapping that
# number back through P1's affine relation to x is quick but ignores that
# P2 also depends on x, so the exact vertex solves the first-order
# condition on the raw scale.  Both are returned; the raw quadratic fit
# confirms the exact one.

# %%

v = vertex_on_raw_scale(basis, ortho.beta[1], ortho.beta[2])
print("P1-units vertex      ", v.ortho)
print("exact raw-scale      ", v.exact)
print("P1-inversion         ", v.approximate, "(difference", v.difference, ")")
print("from the raw fit     ", -raw.beta[1] / (2 * raw.beta[2]))
