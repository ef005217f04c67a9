"""Quadratic growth regressions in government spending and their optima.

The baseline model regresses GDP growth on labour growth, export growth,
the spending share and its square; the growth-maximising share is the
vertex ``-b3 / (2 b4)``.  The robustness model replaces each spending
quadratic by orthogonal polynomials of degree one and two and adds shock
dummies.
"""
from dataclasses import dataclass, field

import numpy as np

from .dataset import apply_dummy, build_design, cambodia_dummies
from .errors import DegenerateError, NoInteriorMaximumError
from .ols import fit

SPENDING_VARIABLES = ("GFCF", "GFCE")

#: |b4| below this is treated as no curvature at all.
DEGENERATE_CURVATURE = 1e-12

#: Orthonormalisation convention of :class:`OrthoBasis` columns.
ORTHO_CONVENTION = "gram=n*I"


def shape_verdict(beta3, beta4):
    """``"inverted_U"``, ``"U"`` or ``"monotone-degenerate"``.

    An inverted U needs ``b4 < 0`` and ``b3 > 0``; a concave curve whose
    vertex sits at a non-positive share is monotone over the admissible
    range and is reported as degenerate.
    """
    if abs(beta4) < DEGENERATE_CURVATURE:
        return "monotone-degenerate"
    if beta4 > 0:
        return "U"
    return "inverted_U" if beta3 > 0 else "monotone-degenerate"


def optimal_share(beta3, beta4):
    """Growth-maximising share ``-b3 / (2 b4)``.

    Raises
    ------
    NoInteriorMaximumError
        If ``b4 >= 0`` (no maximum).
    """
    if not beta4 < 0:
        shape = shape_verdict(beta3, beta4)
        raise NoInteriorMaximumError(
            f"quadratic with b4 = {beta4:g} has no interior maximum ({shape})", shape
        )
    return -beta3 / (2.0 * beta4)


@dataclass(frozen=True)
class ArmeyResult:
    spending_variable: str
    fit: object
    beta3: float
    beta4: float
    optimum_share: object
    shape: str
    curve: np.ndarray
    scatter: np.ndarray


def fit_armey_model(frame, spending_variable, curve_points=200):
    """Fit ``GGDP = b0 + b1 LAB + b2 EXPO + b3 GOV + b4 GOV^2``.

    ``curve`` holds ``curve_points`` pairs ``(share, predicted growth)``
    across the observed share range with LAB and EXPO at their sample
    means; ``scatter`` holds the observed ``(share, growth)`` pairs.
    """
    gov = spending_variable
    sq = f"{gov}2"
    if sq not in frame:
        frame = frame.with_column(sq, frame[gov] ** 2)
    design = build_design(frame, "GGDP", ["LAB", "EXPO", gov, sq])
    g = design.column(gov)
    if np.ptp(g) == 0.0:
        raise DegenerateError(f"{gov} has zero variance over the estimation sample")
    res = fit(design)
    b3, b4 = res.coef(gov), res.coef(sq)
    shape = shape_verdict(b3, b4)
    opt = -b3 / (2.0 * b4) if b4 < 0 else None

    grid = np.linspace(g.min(), g.max(), curve_points)
    base = res.coef("const") + res.coef("LAB") * design.column("LAB").mean()
    base += res.coef("EXPO") * design.column("EXPO").mean()
    curve = np.column_stack([grid, base + b3 * grid + b4 * grid**2])
    return ArmeyResult(
        spending_variable=gov,
        fit=res,
        beta3=b3,
        beta4=b4,
        optimum_share=opt,
        shape=shape,
        curve=curve,
        scatter=np.column_stack([g, design.response]),
    )


@dataclass(frozen=True)
class OrthoBasis:
    """Discrete orthogonal polynomials over a sample.

    Monic polynomials follow the three-term recurrence::

        pi_0 = 1,  pi_{j+1}(x) = (x - a_j) pi_j(x) - b_j pi_{j-1}(x)

    with ``a_j = <x pi_j, pi_j> / <pi_j, pi_j>`` and
    ``b_j = <pi_j, pi_j> / <pi_{j-1}, pi_{j-1}>``.  Column ``P_j`` is
    ``scale[j] * pi_j`` with ``scale[j] = sqrt(n / <pi_j, pi_j>)``, so the
    Gram matrix of ``(1, P_1, ..., P_d)`` is ``n I``.
    """

    name: str
    a: tuple
    b: tuple
    scale: tuple
    columns: np.ndarray
    nobs: int
    convention: str = ORTHO_CONVENTION

    @property
    def degree(self):
        return self.columns.shape[1]

    @property
    def P1(self):
        return self.columns[:, 0]

    @property
    def P2(self):
        return self.columns[:, 1]

    def evaluate(self, x):
        """Columns ``P_1 .. P_d`` at arbitrary points ``x``."""
        x = np.asarray(x, dtype=float)
        prev, cur = np.zeros_like(x), np.ones_like(x)
        out = []
        for j in range(self.degree):
            prev, cur = cur, (x - self.a[j]) * cur - self.b[j] * prev
            out.append(self.scale[j + 1] * cur)
        return np.column_stack(out)

    @property
    def p1_affine(self):
        """``(slope, intercept)`` with ``P1 = slope * x + intercept``."""
        c1 = self.scale[1]
        return c1, -c1 * self.a[0]

    @property
    def p2_quadratic(self):
        """``(c2, c1, c0)`` with ``P2 = c2 x^2 + c1 x + c0``."""
        s = self.scale[2]
        a0, a1, b1 = self.a[0], self.a[1], self.b[1]
        return s, -s * (a0 + a1), s * (a0 * a1 - b1)


def build_ortho_basis(x, name="x", degree=2):
    """Orthogonal polynomial basis of ``degree`` over the sample ``x``."""
    x = np.asarray(x, dtype=float)
    n = x.size
    if np.unique(x).size < degree + 1:
        raise DegenerateError(
            f"{name}: {np.unique(x).size} distinct values cannot support degree {degree}"
        )
    prev, cur = np.zeros(n), np.ones(n)
    norms = [float(n)]
    a, b, cols = [], [], []
    for j in range(degree):
        aj = float(np.dot(x * cur, cur) / norms[j])
        bj = norms[j] / norms[j - 1] if j > 0 else 0.0
        prev, cur = cur, (x - aj) * cur - bj * prev
        a.append(aj)
        b.append(bj)
        norms.append(float(np.dot(cur, cur)))
        cols.append(cur)
    scale = tuple(float(np.sqrt(n / nj)) for nj in norms)
    columns = np.column_stack([s * c for s, c in zip(scale[1:], cols)])
    return OrthoBasis(name, tuple(a), tuple(b), scale, columns, n)


@dataclass(frozen=True)
class RawVertex:
    """Vertex of ``alpha1 P1(x) + alpha2 P2(x)`` in both coordinate systems.

    ``exact`` solves the first-order condition in ``x``; ``approximate``
    maps the vertex in ``P1`` units, ``-alpha1 / (2 alpha2)``, back through
    the affine map of ``P1`` alone.
    """

    ortho: float
    exact: float
    approximate: float

    @property
    def difference(self):
        return self.approximate - self.exact


def vertex_on_raw_scale(basis, alpha1, alpha2):
    """Raw-scale maximiser of ``alpha1 P1(x) + alpha2 P2(x)``.

    Raises
    ------
    NoInteriorMaximumError
        If the quadratic is not concave in ``x`` (or ``alpha2`` is 0).
    """
    q2, q1, _ = basis.p2_quadratic
    curvature = alpha2 * q2
    if not curvature < 0 or alpha2 == 0:
        shape = "U" if curvature > 0 else "monotone-degenerate"
        raise NoInteriorMaximumError(
            f"{basis.name}: orthogonal quadratic is not concave (alpha2 = {alpha2:g})", shape
        )
    slope, intercept = basis.p1_affine
    exact = -(alpha1 * slope + alpha2 * q1) / (2.0 * curvature)
    u = -alpha1 / (2.0 * alpha2)
    approximate = (u - intercept) / slope
    return RawVertex(ortho=float(u), exact=float(exact), approximate=float(approximate))


@dataclass(frozen=True)
class RobustnessResult:
    fit: object
    bases: dict
    vertices: dict
    shapes: dict
    dummies: list = field(default_factory=list)
    convention: str = ORTHO_CONVENTION

    def optimum_share(self, variable, method="exact"):
        v = self.vertices.get(variable)
        return None if v is None else getattr(v, method)


def fit_robustness_model(frame, dummy_specs=None, spending=SPENDING_VARIABLES):
    """Growth regression with orthogonal spending polynomials and dummies.

    Regressors: LAB, EXPO, ``P<GOV>1``, ``P<GOV>2`` for each spending
    variable, then the dummies in the order given (default: the four
    Cambodian shock years).  The bases are built over the estimation
    sample, after listwise deletion, so orthogonality holds on the rows
    actually used.
    """
    specs = cambodia_dummies() if dummy_specs is None else list(dummy_specs)
    dummies = {s.name: apply_dummy(frame, s) for s in specs}
    frame = frame.with_columns(**dummies)

    needed = ["GGDP", "LAB", "EXPO", *spending]
    ok = np.ones(len(frame), dtype=bool)
    for c in needed:
        ok &= ~frame.missing(c)

    bases, new_cols, regressors = {}, {}, ["LAB", "EXPO"]
    for gov in spending:
        basis = build_ortho_basis(frame[gov][ok], name=gov)
        bases[gov] = basis
        for j in range(basis.degree):
            col = np.full(len(frame), np.nan)
            col[ok] = basis.columns[:, j]
            new_cols[f"P{gov}{j + 1}"] = col
            regressors.append(f"P{gov}{j + 1}")
    frame = frame.with_columns(**new_cols)
    regressors += [s.name for s in specs]

    res = fit(build_design(frame, "GGDP", regressors))
    vertices, shapes = {}, {}
    for gov in spending:
        a1, a2 = res.coef(f"P{gov}1"), res.coef(f"P{gov}2")
        try:
            vertices[gov] = vertex_on_raw_scale(bases[gov], a1, a2)
            shapes[gov] = "inverted_U"
        except NoInteriorMaximumError as exc:
            vertices[gov] = None
            shapes[gov] = exc.shape
    return RobustnessResult(res, bases, vertices, shapes, specs)
