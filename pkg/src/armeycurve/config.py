"""Run configuration shared by the command-line front end and the pipeline.

Every setting can come from a ``key = value`` file, a command-line flag
(same name with dashes) or its default.  Precedence: flag, then
``ARMEY_OUTPUT_DIR`` (output directory only), then file, then default.
"""
import os
from dataclasses import dataclass, fields

from .dataset import CAMBODIA_DUMMIES, DummySpec
from .errors import ConfigError
from .kvfile import format_value, read_key_values
from .numerics import ADF_VARIANTS, ZA_BREAK_TYPES

OUTPUT_DIR_ENV = "ARMEY_OUTPUT_DIR"


def _opt_int(text):
    return None if str(text).strip().lower() in ("", "none", "auto") else int(text)


def _bool(text):
    value = str(text).strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _list(conv):
    return lambda text: tuple(conv(s.strip()) for s in str(text).split(",") if s.strip())


def parse_dummies(text):
    """``"du1:1973; du3:1994,1995"`` -> list of :class:`DummySpec`."""
    specs = []
    for part in str(text).split(";"):
        part = part.strip()
        if not part:
            continue
        if ":" not in part:
            raise ValueError(f"dummy entry {part!r} must read 'name:year[,year...]'")
        name, years = part.split(":", 1)
        specs.append(DummySpec(name.strip(), tuple(int(y) for y in years.split(",") if y.strip())))
    return tuple(specs)


def format_dummies(specs):
    return "; ".join(f"{s.name}:{','.join(str(y) for y in s.active_years)}" for s in specs)


def _opt_str(text):
    return None if str(text).strip().lower() in ("", "none") else str(text).strip()


def _criterion(text):
    value = str(text).strip().lower()
    return None if value == "none" else value


DEFAULT_DUMMIES = tuple(DummySpec(n, y) for n, y in CAMBODIA_DUMMIES.items())

# name -> (converter, default, help)
OPTIONS = {
    "data": (_opt_str, None, "annual CSV file"),
    "schema": (_opt_str, None, "column mapping file (canonical = source)"),
    "output_dir": (str, "armey-output", "directory for reports and figures"),
    "first_year": (_opt_int, None, "first year kept before transformations"),
    "last_year": (_opt_int, None, "last year kept"),
    "adf_variant": (str, "drift", "ADF deterministic terms: " + ", ".join(ADF_VARIANTS)),
    "adf_max_lag": (_opt_int, None, "maximum ADF lag (auto: Schwert rule)"),
    "lag_criterion": (_criterion, "bic", "lag selection: bic, t-stat or none"),
    "bg_lag": (int, 2, "Breusch-Godfrey lag order"),
    "bg_sweep": (_list(int), (1, 2, 3), "lag orders reported in the Breusch-Godfrey sweep"),
    "white_cross_terms": (_bool, True, "include cross products in White's test"),
    "za_trim": (float, 0.15, "Zivot-Andrews trimming fraction"),
    "za_break_types": (_list(str), ZA_BREAK_TYPES, "Zivot-Andrews break types"),
    "za_lag_search": (str, "per-break", "per-break or upfront lag selection"),
    "dummies": (parse_dummies, DEFAULT_DUMMIES, "dummy years, e.g. 'du1:1973; du3:1994,1995'"),
    "levels": (_list(int), (1, 5, 10), "significance levels in percent"),
    "cusum_level": (int, 5, "significance level of the plotted CUSUM band"),
    "seed": (int, 20230101, "random seed for simulate"),
    "report_format": (str, "text", "stdout format: text or kv"),
    "assert_replication": (_bool, False, "replicate: exit 5 when published values are missed"),
}


@dataclass(frozen=True)
class RunConfig:
    data: object = None
    schema: object = None
    output_dir: str = "armey-output"
    first_year: object = None
    last_year: object = None
    adf_variant: str = "drift"
    adf_max_lag: object = None
    lag_criterion: object = "bic"
    bg_lag: int = 2
    bg_sweep: tuple = (1, 2, 3)
    white_cross_terms: bool = True
    za_trim: float = 0.15
    za_break_types: tuple = ZA_BREAK_TYPES
    za_lag_search: str = "per-break"
    dummies: tuple = DEFAULT_DUMMIES
    levels: tuple = (1, 5, 10)
    cusum_level: int = 5
    seed: int = 20230101
    report_format: str = "text"
    assert_replication: bool = False

    def __post_init__(self):
        if not 0.0 < self.za_trim < 0.5:
            raise ConfigError(f"za_trim must lie in (0, 0.5), got {self.za_trim}")
        if not set(self.levels) <= {1, 5, 10} or not self.levels:
            raise ConfigError(f"levels must be a non-empty subset of 1,5,10, got {self.levels}")
        if self.cusum_level not in (1, 5, 10):
            raise ConfigError("cusum_level must be 1, 5 or 10")
        if self.adf_variant not in ADF_VARIANTS:
            raise ConfigError(f"adf_variant must be one of {ADF_VARIANTS}")
        if self.lag_criterion not in ("bic", "t-stat", None):
            raise ConfigError("lag_criterion must be bic, t-stat or none")
        bad = [b for b in self.za_break_types if b not in ZA_BREAK_TYPES]
        if bad or not self.za_break_types:
            raise ConfigError(f"za_break_types must be drawn from {ZA_BREAK_TYPES}")
        if self.za_lag_search not in ("per-break", "upfront"):
            raise ConfigError("za_lag_search must be per-break or upfront")
        if self.report_format not in ("text", "kv"):
            raise ConfigError("report_format must be text or kv")
        if self.bg_lag <= 0 or any(p <= 0 for p in self.bg_sweep):
            raise ConfigError("Breusch-Godfrey lag orders must be positive")

    @classmethod
    def load(cls, path=None, overrides=None, env=None):
        """Merge defaults, a config file, the environment and explicit overrides."""
        env = os.environ if env is None else env
        raw = {}
        if path is not None:
            try:
                raw = read_key_values(path)
            except OSError as exc:
                raise ConfigError(f"cannot read config file {path}: {exc}") from exc
            unknown = sorted(set(raw) - set(OPTIONS))
            if unknown:
                raise ConfigError(f"unknown config key(s): {unknown}")
        if env.get(OUTPUT_DIR_ENV):
            raw["output_dir"] = env[OUTPUT_DIR_ENV]
        values = {}
        for key, text in raw.items():
            conv = OPTIONS[key][0]
            try:
                values[key] = conv(text)
            except (TypeError, ValueError, ConfigError) as exc:
                raise ConfigError(f"bad value for {key}: {text!r} ({exc})") from exc
        for key, value in (overrides or {}).items():
            if key not in OPTIONS:
                raise ConfigError(f"unknown option {key!r}")
            if value is not None:
                values[key] = value
        return cls(**values)

    def to_records(self):
        """Effective configuration as strings (provenance echo)."""
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            out[f.name] = format_dummies(value) if f.name == "dummies" else format_value(value)
        return out
