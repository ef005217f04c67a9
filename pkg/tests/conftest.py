import pathlib

import numpy as np
import pytest

from armeycurve.dataset import load_csv, prepare_armey_frame

ROOT = pathlib.Path(__file__).resolve().parents[1]
FIXTURE_CSV = ROOT / "data" / "synthetic.csv"
GOLDEN = pathlib.Path(__file__).resolve().parent / "golden"


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def fixture_csv():
    return FIXTURE_CSV


@pytest.fixture(scope="session")
def fixture_frame():
    return prepare_armey_frame(load_csv(FIXTURE_CSV))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
