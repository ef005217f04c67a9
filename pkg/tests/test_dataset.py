import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose, assert_array_equal

from armeycurve.dataset import (
    DummySpec,
    TimeSeriesFrame,
    apply_dummy,
    build_design,
    cambodia_dummies,
    growth_rate,
    load_csv,
    prepare_armey_frame,
    read_schema,
    share_of_gdp,
)
from armeycurve.errors import (
    DataWarning,
    DomainError,
    EstimabilityError,
    FormatError,
    GapError,
    SchemaError,
)

YEARS = np.arange(1971, 2016)


def _write(tmp_path, text, name="d.csv"):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return p


def test_load_45_rows(tmp_path):
    rng = np.random.default_rng(0)
    frame = TimeSeriesFrame(YEARS, {c: rng.normal(size=45) for c in "abcde"})
    p = tmp_path / "x.csv"
    frame.to_csv(p)
    back = load_csv(p, schema=list("abcde"))
    assert len(back) == 45
    assert back.years[0] == 1971 and back.years[-1] == 2015


def test_single_row_is_valid(tmp_path):
    frame = load_csv(_write(tmp_path, "year,gdp\n1990,5\n"))
    assert len(frame) == 1


def test_unsorted_rows_are_sorted(tmp_path):
    frame = load_csv(_write(tmp_path, "year,a\n1992,3\n1990,1\n1991,2\n"))
    assert_array_equal(frame.years, [1990, 1991, 1992])
    assert_array_equal(frame["a"], [1, 2, 3])


def test_duplicate_year(tmp_path):
    with pytest.raises(FormatError, match="1980"):
        load_csv(_write(tmp_path, "year,a\n1979,1\n1980,2\n1980,3\n"))


def test_gap(tmp_path):
    with pytest.raises(GapError):
        load_csv(_write(tmp_path, "year,a\n1979,1\n1981,2\n"))


def test_missing_schema_column(tmp_path):
    with pytest.raises(SchemaError):
        load_csv(_write(tmp_path, "year,a\n1979,1\n"), schema=["a", "gdp"])


def test_empty_file(tmp_path):
    with pytest.raises(FormatError):
        load_csv(_write(tmp_path, ""))


def test_unparseable_cells_become_missing(tmp_path):
    frame = load_csv(_write(tmp_path, "year,a\n2000,1.5\n2001,n/a\n2002,\n"))
    assert_array_equal(frame.missing("a"), [False, True, True])


def test_mapping_and_schema_file(tmp_path):
    schema = _write(tmp_path, "[columns]\ngdp = NY.GDP.MKTP.KD\n", "s.ini")
    mapping = read_schema(schema)
    frame = load_csv(_write(tmp_path, "year,NY.GDP.MKTP.KD\n2000,10\n"), ["gdp"], mapping)
    assert frame["gdp"][0] == 10.0


finite = st.floats(allow_nan=False, allow_infinity=False, width=64)


@given(st.lists(st.one_of(finite, st.just(float("nan"))), min_size=1, max_size=30))
def test_csv_round_trip(tmp_path_factory, values):
    frame = TimeSeriesFrame(np.arange(1950, 1950 + len(values)), {"v": values})
    p = tmp_path_factory.mktemp("rt") / "v.csv"
    frame.to_csv(p)
    back = load_csv(p)
    assert_array_equal(back.missing("v"), frame.missing("v"))
    assert_array_equal(back["v"][~back.missing("v")], frame["v"][~frame.missing("v")])


def test_growth_rate_small_cases():
    f = TimeSeriesFrame([1, 2, 3], {"x": [5, 5, 5]})
    assert_array_equal(growth_rate(f, "x"), [np.nan, 0, 0])
    f = TimeSeriesFrame([1, 2], {"x": [100, 110]})
    assert growth_rate(f, "x")[1] == pytest.approx(10.0)


@given(st.floats(0.1, 1000), st.floats(-0.5, 0.5).filter(lambda r: abs(r) > 1e-6))
def test_growth_rate_exponential_trend(a, r):
    t = np.arange(40)
    f = TimeSeriesFrame(1970 + t, {"x": a * (1 + r) ** t})
    assert_allclose(growth_rate(f, "x")[1:], 100 * r, atol=1e-9)


def test_growth_rate_zero_base_warns():
    f = TimeSeriesFrame([1, 2, 3], {"x": [1.0, 0.0, 2.0]})
    with pytest.warns(DataWarning):
        g = growth_rate(f, "x")
    assert np.isnan(g[2]) and g[1] == -100.0


def test_share_of_gdp():
    f = TimeSeriesFrame([1, 2], {"n": [5.0, 7.0], "g": [100.0, 7.0]})
    assert_allclose(share_of_gdp(f, "n", "g"), [5.0, 100.0])
    f = TimeSeriesFrame([1, 2], {"n": [5.0, 7.0], "g": [100.0, 0.0]})
    with pytest.warns(DataWarning):
        s = share_of_gdp(f, "n", "g")
    assert np.isnan(s[1])


def test_cambodian_dummies():
    frame = TimeSeriesFrame(YEARS, {})
    cols = {s.name: apply_dummy(frame, s) for s in cambodia_dummies()}
    assert cols["du1"][YEARS == 1973] == 1 and cols["du1"].sum() == 1
    assert cols["du3"][np.isin(YEARS, [1994, 1995])].tolist() == [1, 1]
    for spec in cambodia_dummies():
        c = cols[spec.name]
        assert set(np.unique(c)) <= {0.0, 1.0}
        assert c.sum() == len(spec.active_years)


def test_dummy_outside_frame():
    with pytest.raises(DomainError):
        apply_dummy(TimeSeriesFrame(YEARS, {}), DummySpec("late", (2020,)))


def test_design_on_45_year_frame():
    rng = np.random.default_rng(3)
    raw = TimeSeriesFrame(YEARS, {
        "gdp": np.cumprod(1 + rng.uniform(0, 0.1, 45)) * 100,
        "gfcf": rng.uniform(1, 8, 45),
        "gfce": rng.uniform(4, 9, 45),
        "exports": np.cumprod(1 + rng.uniform(-0.1, 0.2, 45)) * 10,
        "population": np.cumprod(1 + rng.uniform(0, 0.03, 45)) * 7,
    })
    frame = prepare_armey_frame(raw)
    d = build_design(frame, "GGDP", ["LAB", "EXPO", "GFCF", "GFCF2"])
    assert (d.nobs, d.k) == (44, 5)
    assert d.regressor_names == ("const", "LAB", "EXPO", "GFCF", "GFCF2")
    assert d.years[0] == 1972


def test_design_listwise_deletion():
    y = np.array([1, 2, np.nan, 4, 5, 6, 7.0])
    x = np.array([1, np.nan, 3, 4, 5, 6, 8.0])
    f = TimeSeriesFrame(np.arange(7), {"y": y, "x": x})
    d = build_design(f, "y", ["x"])
    assert d.nobs == 5
    assert_array_equal(d.years, [0, 3, 4, 5, 6])


def test_mean_only_design():
    f = TimeSeriesFrame(np.arange(5), {"y": np.arange(5.0)})
    d = build_design(f, "y", [])
    assert d.k == 1


def test_design_not_estimable():
    f = TimeSeriesFrame(np.arange(3), {c: np.arange(3.0) + i for i, c in enumerate("yabcde")})
    with pytest.raises(EstimabilityError):
        build_design(f, "y", list("abcde"))


def test_frame_is_immutable():
    f = TimeSeriesFrame([1, 2], {"x": [1.0, 2.0]})
    with pytest.raises(ValueError):
        f["x"][0] = 5
    with pytest.raises(SchemaError):
        f["nope"]
