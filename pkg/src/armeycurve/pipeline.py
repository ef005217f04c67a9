"""End-to-end replication run: transforms, pretests, models, diagnostics."""
import contextlib
import hashlib
import os
import tempfile
from dataclasses import dataclass

import numpy as np

from .armey import fit_armey_model, fit_robustness_model
from .dataset import load_csv, prepare_armey_frame, read_schema
from .diagnostics import breusch_godfrey, cusum_test, jarque_bera, white_test
from .errors import ArmeyError, ConfigError, DataError, GapError
from .unitroot import adf_test, zivot_andrews

ADF_VARIABLES = ("GGDP", "LAB", "EXPO", "GFCF", "GFCF2", "GFCE", "GFCE2")
MODELS = {"I": "GFCF", "II": "GFCE"}


@contextlib.contextmanager
def stage(name):
    """Tag errors raised inside the block with the pipeline stage."""
    try:
        yield
    except ArmeyError as exc:
        if exc.stage is None:
            exc.stage = name
        raise
    except OSError as exc:
        err = DataError(str(exc))
        err.stage = name
        raise err from exc


def file_checksum(path):
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def load_frame(config):
    """Raw CSV -> transformed frame restricted to the configured years."""
    if not config.data:
        raise ConfigError("no data file given")
    if not os.path.isfile(config.data):
        raise DataError(f"data file not found: {config.data}")
    mapping = read_schema(config.schema) if config.schema else None
    raw = load_csv(config.data, mapping=mapping)
    raw = raw.subset_years(config.first_year, config.last_year)
    return prepare_armey_frame(raw)


def estimation_window(frame):
    """Rows where every regression variable is observed; must be contiguous."""
    ok = np.ones(len(frame), dtype=bool)
    for c in ("GGDP", "LAB", "EXPO", "GFCF", "GFCE"):
        ok &= ~frame.missing(c)
    idx = np.flatnonzero(ok)
    if idx.size == 0:
        raise DataError("no year has all regression variables observed")
    if idx[-1] - idx[0] + 1 != idx.size:
        raise GapError("missing values inside the estimation window; trim the sample")
    return frame.subset_years(int(frame.years[idx[0]]), int(frame.years[idx[-1]]))


@dataclass
class ReplicationResult:
    config: object
    checksum: str
    frame: object
    window: object
    adf: dict = None
    models: dict = None
    diagnostics: dict = None
    cusums: dict = None
    za: dict = None
    robustness: object = None

    @property
    def effective_n(self):
        return len(self.window)


def diagnose(fit, config):
    sweep = {p: breusch_godfrey(fit, p) for p in sorted(set(config.bg_sweep) | {config.bg_lag})}
    return {
        "bg": sweep[config.bg_lag],
        "bg_sweep": sweep,
        "white": white_test(fit, config.white_cross_terms),
        "jb": jarque_bera(fit.residuals),
    }


def run_adf(window, config):
    with stage("unitroot"):
        return {
            v: adf_test(window[v], config.adf_variant, config.adf_max_lag,
                        config.lag_criterion, name=v)
            for v in ADF_VARIABLES
        }


def run_za(window, config):
    with stage("zivot-andrews"):
        return {
            bt: zivot_andrews(window["GGDP"], bt, config.za_trim, config.adf_max_lag,
                              config.lag_criterion, config.za_lag_search,
                              years=window.years, name="GGDP")
            for bt in config.za_break_types
        }


def ingest(config):
    """Checksum, transformed frame and estimation window, as a bare result."""
    with stage("ingest"):
        checksum = file_checksum(config.data) if config.data and os.path.isfile(config.data) else ""
        frame = load_frame(config)
        window = estimation_window(frame)
    return ReplicationResult(config, checksum, frame, window)


def fit_models(window):
    with stage("fit"):
        return {label: fit_armey_model(window, gov) for label, gov in MODELS.items()}


def run_replication(config):
    """Run every stage in order; errors carry the name of the failing stage."""
    base = ingest(config)
    checksum, frame, window = base.checksum, base.frame, base.window
    adf = run_adf(window, config)
    models = fit_models(window)
    with stage("diagnose"):
        diagnostics = {label: diagnose(m.fit, config) for label, m in models.items()}
    with stage("cusum"):
        cusums = {label: cusum_test(m.fit.design) for label, m in models.items()}
    za = run_za(window, config)
    with stage("robustness"):
        robust = fit_robustness_model(window, config.dummies)
    return ReplicationResult(config, checksum, frame, window, adf, models, diagnostics,
                             cusums, za, robust)


def write_atomic(path, text):
    """Write via a temporary file in the same directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        with contextlib.suppress(OSError):
            os.unlink(tmp)
        raise
