"""Annual data ingestion, variable transformations and design matrices.

Missing cells are stored as NaN.  Growth rates and shares are in percent
(5.40, not 0.054).
"""
import csv
import io
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DataWarning,
    DomainError,
    EstimabilityError,
    FormatError,
    GapError,
    SchemaError,
)
from .kvfile import read_key_values

#: Dummy years of the Cambodian robustness model.
CAMBODIA_DUMMIES = {
    "du1": (1973,),
    "du2": (1989,),
    "du3": (1994, 1995),
    "du4": (1997,),
}

#: Raw columns expected by :func:`prepare_armey_frame`.
RAW_COLUMNS = ("gdp", "gfcf", "gfce", "exports", "population")


@dataclass(frozen=True)
class TimeSeriesFrame:
    """Year-indexed columns of annual observations.

    Columns are read-only float arrays aligned to ``years``; NaN marks a
    missing cell.  Frames are immutable; the ``with_column`` family returns
    new frames.
    """

    years: np.ndarray
    columns: dict = field(default_factory=dict)

    def __post_init__(self):
        years = np.asarray(self.years, dtype=int)
        if years.ndim != 1:
            raise FormatError("years must be one-dimensional")
        if len(np.unique(years)) != len(years):
            dup = sorted({int(y) for y in years if np.sum(years == y) > 1})
            raise FormatError(f"duplicate year(s): {dup}")
        if len(years) > 1:
            order = np.argsort(years)
            if np.any(order != np.arange(len(years))):
                raise FormatError("years must be sorted ascending")
            gaps = np.flatnonzero(np.diff(years) != 1)
            if gaps.size:
                g = int(gaps[0])
                raise GapError(f"years not consecutive: {years[g]} followed by {years[g + 1]}")
        years.setflags(write=False)
        cols = {}
        for name, values in self.columns.items():
            arr = np.array(values, dtype=float)
            if arr.shape != years.shape:
                raise FormatError(
                    f"column {name!r} has {arr.size} values for {years.size} years"
                )
            arr.setflags(write=False)
            cols[name] = arr
        object.__setattr__(self, "years", years)
        object.__setattr__(self, "columns", cols)

    def __len__(self):
        return len(self.years)

    def __contains__(self, name):
        return name in self.columns

    def __getitem__(self, name):
        try:
            return self.columns[name]
        except KeyError:
            raise SchemaError(f"no column named {name!r}") from None

    @property
    def names(self):
        return list(self.columns)

    def missing(self, name):
        return np.isnan(self[name])

    def with_column(self, name, values):
        cols = dict(self.columns)
        cols[name] = values
        return TimeSeriesFrame(self.years, cols)

    def with_columns(self, **new):
        cols = dict(self.columns)
        cols.update(new)
        return TimeSeriesFrame(self.years, cols)

    def subset_years(self, first=None, last=None):
        keep = np.ones(len(self.years), dtype=bool)
        if first is not None:
            keep &= self.years >= first
        if last is not None:
            keep &= self.years <= last
        return TimeSeriesFrame(self.years[keep], {k: v[keep] for k, v in self.columns.items()})

    def to_csv(self, path=None):
        """Write ``year,<col>,...``; missing cells are empty.  Returns the text."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["year", *self.columns])
        for i, year in enumerate(self.years):
            row = [int(year)]
            for values in self.columns.values():
                v = values[i]
                row.append("" if math.isnan(v) else repr(float(v)))
            writer.writerow(row)
        text = buf.getvalue()
        if path is not None:
            with open(path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        return text


def _parse_cell(text):
    text = text.strip()
    if not text:
        return math.nan
    try:
        value = float(text)
    except ValueError:
        return math.nan
    return value if math.isfinite(value) else math.nan


def read_schema(path):
    """Read a column-mapping file of ``canonical = source`` lines."""
    return read_key_values(path)


def load_csv(path, schema=None, mapping=None):
    """Load an annual CSV file into a :class:`TimeSeriesFrame`.

    Parameters
    ----------
    path : str or path-like
    schema : sequence of str, optional
        Columns that must be present (canonical names).  If omitted every
        non-year column is loaded.
    mapping : dict, optional
        ``{canonical: source}`` renames applied before the schema check.

    Raises
    ------
    SchemaError, FormatError, GapError
    """
    with open(path, encoding="utf-8-sig", newline="") as fh:
        rows = list(csv.reader(fh))
    rows = [r for r in rows if any(c.strip() for c in r)]
    if not rows:
        raise FormatError(f"{path}: empty file")
    header = [h.strip() for h in rows[0]]
    if not header or header[0].lower() != "year":
        raise FormatError(f"{path}: first header field must be 'year'")
    if len(set(header)) != len(header):
        raise FormatError(f"{path}: duplicate column names in header")

    rename = {src: canon for canon, src in (mapping or {}).items()}
    names = [rename.get(h, h) for h in header[1:]]
    if len(set(names)) != len(names):
        raise FormatError(f"{path}: column mapping produces duplicate names")
    if schema is not None:
        absent = [c for c in schema if c not in names]
        if absent:
            raise SchemaError(f"{path}: missing required column(s) {absent}")
        wanted = list(schema)
    else:
        wanted = names

    years = []
    data = {n: [] for n in names}
    for lineno, row in enumerate(rows[1:], 2):
        if len(row) != len(header):
            raise FormatError(f"{path}:{lineno}: expected {len(header)} fields, got {len(row)}")
        try:
            years.append(int(row[0].strip()))
        except ValueError:
            raise FormatError(f"{path}:{lineno}: bad year {row[0]!r}") from None
        for n, cell in zip(names, row[1:]):
            data[n].append(_parse_cell(cell))

    years = np.array(years, dtype=int)
    if len(np.unique(years)) != len(years):
        seen, dup = set(), set()
        for y in years:
            (dup if y in seen else seen).add(int(y))
        raise FormatError(f"{path}: duplicate year(s) {sorted(dup)}")
    order = np.argsort(years, kind="stable")
    cols = {n: np.array(data[n])[order] for n in wanted}
    return TimeSeriesFrame(years[order], cols)


def growth_rate(frame, column):
    """Percent change ``100 (x_t - x_{t-1}) / x_{t-1}``; the first year is missing."""
    x = frame[column]
    out = np.full(x.shape, np.nan)
    if x.size < 2:
        return out
    prev, cur = x[:-1], x[1:]
    zero = prev == 0
    if np.any(zero):
        bad = frame.years[1:][zero]
        warnings.warn(
            f"{column}: zero base value, growth flagged missing in {bad.tolist()}",
            DataWarning,
            stacklevel=2,
        )
    with np.errstate(divide="ignore", invalid="ignore"):
        out[1:] = np.where(zero, np.nan, 100.0 * (cur - prev) / prev)
    return out


def share_of_gdp(frame, numerator, gdp_column):
    """``100 * numerator / gdp``; cells with non-positive GDP are missing."""
    num = frame[numerator]
    gdp = frame[gdp_column]
    bad = ~np.isnan(num) & ~(gdp > 0)
    if np.any(bad):
        warnings.warn(
            f"{gdp_column}: non-positive value, share flagged missing in "
            f"{frame.years[bad].tolist()}",
            DataWarning,
            stacklevel=2,
        )
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(gdp > 0, 100.0 * num / gdp, np.nan)


@dataclass(frozen=True)
class DummySpec:
    name: str
    active_years: tuple

    def __post_init__(self):
        years = tuple(sorted({int(y) for y in self.active_years}))
        if not years:
            raise DomainError(f"dummy {self.name!r} has no active years")
        object.__setattr__(self, "active_years", years)


def cambodia_dummies():
    return [DummySpec(name, years) for name, years in CAMBODIA_DUMMIES.items()]


def apply_dummy(frame, spec):
    """Indicator column: 1.0 in ``spec.active_years``, 0.0 elsewhere."""
    outside = [y for y in spec.active_years if y not in set(frame.years.tolist())]
    if outside:
        raise DomainError(
            f"dummy {spec.name!r}: year(s) {outside} outside "
            f"{frame.years[0]}-{frame.years[-1]}"
        )
    return np.isin(frame.years, spec.active_years).astype(float)


@dataclass(frozen=True)
class DesignMatrix:
    """Response vector and regressor matrix with no missing cells."""

    response_name: str
    response: np.ndarray
    regressor_names: tuple
    X: np.ndarray
    years: np.ndarray
    has_intercept: bool = True

    def __post_init__(self):
        n, k = self.X.shape
        if self.response.shape != (n,):
            raise ValueError("response length does not match X")
        if n <= k:
            raise EstimabilityError(
                f"design for {self.response_name!r} has n={n} rows for k={k} columns"
            )

    @property
    def nobs(self):
        return self.X.shape[0]

    @property
    def k(self):
        return self.X.shape[1]

    def column(self, name):
        return self.X[:, self.regressor_names.index(name)]

    @classmethod
    def from_arrays(cls, y, X, names=None, intercept=True, response_name="y", years=None):
        """Build a design from arrays; prepends a constant when ``intercept``."""
        y = np.asarray(y, dtype=float)
        X = np.asarray(X, dtype=float)
        if X.ndim == 1:
            X = X[:, None]
        if names is None:
            names = [f"x{i + 1}" for i in range(X.shape[1])]
        names = list(names)
        if intercept:
            X = np.column_stack([np.ones(len(y)), X])
            names = ["const", *names]
        if years is None:
            years = np.arange(len(y))
        return cls(response_name, y, tuple(names), X, np.asarray(years), intercept)


def build_design(frame, response, regressors, intercept=True):
    """Assemble ``y`` and ``X`` from frame columns with listwise deletion.

    Rows where the response or any regressor is missing are dropped; the
    retained years are kept on the design.
    """
    regressors = list(regressors)
    if len(set(regressors)) != len(regressors):
        raise DomainError(f"duplicate regressor names in {regressors}")
    y = frame[response]
    cols = [frame[r] for r in regressors]
    ok = ~np.isnan(y)
    for c in cols:
        ok &= ~np.isnan(c)
    n = int(ok.sum())
    X = np.column_stack([c[ok] for c in cols]) if cols else np.empty((n, 0))
    names = list(regressors)
    if intercept:
        X = np.column_stack([np.ones(n), X])
        names = ["const", *names]
    return DesignMatrix(response, y[ok].copy(), tuple(names), X, frame.years[ok].copy(), intercept)


def prepare_armey_frame(raw):
    """Derive the regression variables from raw annual levels.

    Expects ``gdp``, ``gfcf`` (levels at constant prices), ``gfce`` (share
    of GDP in percent), ``exports`` (level) and ``population`` (level).  A
    ready-made ``LAB`` column (population growth in percent) takes
    precedence over ``population``.

    Adds ``GGDP``, ``LAB``, ``EXPO``, ``GFCF``, ``GFCE`` and their squares
    ``GFCF2``, ``GFCE2``.
    """
    absent = [c for c in ("gdp", "gfcf", "gfce", "exports") if c not in raw]
    if "LAB" not in raw and "population" not in raw:
        absent.append("population")
    if absent:
        raise SchemaError(f"missing raw column(s) {absent}")
    if "LAB" in raw:
        lab = raw["LAB"]
    else:
        lab = growth_rate(raw, "population")
    gfcf = share_of_gdp(raw, "gfcf", "gdp")
    gfce = np.array(raw["gfce"], dtype=float)
    return raw.with_columns(
        GGDP=growth_rate(raw, "gdp"),
        LAB=lab,
        EXPO=growth_rate(raw, "exports"),
        GFCF=gfcf,
        GFCF2=gfcf**2,
        GFCE=gfce,
        GFCE2=gfce**2,
    )
