"""Dense least squares via Householder QR."""
import numpy as np
from scipy.linalg import qr, solve_triangular

from ..errors import CollinearityError, EstimabilityError

#: Relative threshold on |r_ii| / ||X||_F below which a column is declared
#: a linear combination of the columns before it.
RANK_TOL = 1e-10


def solve_least_squares(X, y, names=None):
    """Minimise ``||y - X b||^2``.

    Parameters
    ----------
    X : array_like, shape (n, k)
    y : array_like, shape (n,)
    names : sequence of str, optional
        Column names, only used to make the collinearity error readable.

    Returns
    -------
    beta : ndarray, shape (k,)
    xtx_inv : ndarray, shape (k, k)
        ``(X'X)^{-1}`` assembled from the triangular factor.

    Raises
    ------
    EstimabilityError
        If ``n < k``.
    CollinearityError
        If a diagonal entry of ``R`` is negligible relative to ``||X||``.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim != 2:
        raise ValueError("X must be two-dimensional")
    n, k = X.shape
    if y.shape != (n,):
        raise ValueError(f"y has shape {y.shape}, expected ({n},)")
    if n < k:
        raise EstimabilityError(f"{n} observations cannot identify {k} coefficients")
    if not (np.all(np.isfinite(X)) and np.all(np.isfinite(y))):
        raise ValueError("X and y must be finite")

    q, r = qr(X, mode="economic")
    diag = np.abs(np.diag(r))
    scale = np.linalg.norm(X)
    bad = np.flatnonzero(diag <= RANK_TOL * scale) if scale > 0 else np.arange(k)
    if bad.size:
        j = int(bad[0])
        name = names[j] if names is not None else None
        label = f"'{name}'" if name is not None else f"{j}"
        raise CollinearityError(
            f"column {label} is (numerically) a linear combination of the "
            f"preceding columns (|r_jj| = {diag[j]:.3g}, ||X|| = {scale:.3g})",
            column=j,
            name=name,
        )
    beta = solve_triangular(r, q.T @ y)
    r_inv = solve_triangular(r, np.eye(k))
    return beta, r_inv @ r_inv.T
