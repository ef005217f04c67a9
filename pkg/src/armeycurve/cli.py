"""Command-line front end.

Exit codes: 0 success, 2 configuration error, 3 data error,
4 numerical/estimability error, 5 replication assertion failure.
"""
import argparse
import os
import sys
import warnings

import numpy as np

from . import __version__
from .armey import fit_armey_model, fit_robustness_model
from .config import OPTIONS, RunConfig
from .diagnostics import cusum_test
from .errors import (
    ArmeyError,
    ConfigError,
    EstimabilityError,
    NumericalError,
    ReplicationAssertionError,
)
from .kvfile import render_records
from .pipeline import (
    MODELS,
    diagnose,
    fit_models,
    ingest,
    run_adf,
    run_replication,
    run_za,
    stage,
    write_atomic,
)
from .reference import diagnostic_checks, model_checks, robustness_checks
from .report import (
    adf_table,
    build_records,
    cusum_table,
    diagnostics_table,
    model_table,
    optima_table,
    render_text,
    robustness_table,
    za_table,
)
from .simulate import FIXTURE_TOLERANCE, simulate_annual_dataset, true_optimum
from .svg import cusum_svg, scatter_svg

COMMANDS = (
    "ingest-check", "unitroot", "fit", "diagnose", "cusum", "armey", "robustness",
    "replicate", "plot-scatter", "plot-cusum", "simulate",
)

LEVEL_OF = {1: 0.01, 5: 0.05, 10: 0.10}


def _emit(config, lines, result):
    if config.report_format == "kv":
        sys.stdout.write(render_records(build_records(result)))
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def cmd_ingest_check(config, args):
    res = ingest(config)
    f, w = res.frame, res.window
    lines = [f"file: {config.data}", f"sha256: {res.checksum}",
             f"years: {f.years[0]}-{f.years[-1]} ({len(f)} rows)",
             f"estimation window: {w.years[0]}-{w.years[-1]} (effective n = {len(w)})",
             "missing cells per column:"]
    lines += [f"  {name:<12}{int(f.missing(name).sum()):>4}" for name in f.names]
    _emit(config, lines, res)


def cmd_unitroot(config, args):
    res = ingest(config)
    res.adf = run_adf(res.window, config)
    res.za = run_za(res.window, config)
    _emit(config, adf_table(res.adf, config) + [""] + za_table(res.za), res)


def cmd_fit(config, args):
    res = ingest(config)
    res.models = fit_models(res.window)
    _emit(config, model_table(res.models), res)


def cmd_diagnose(config, args):
    res = ingest(config)
    res.models = fit_models(res.window)
    with stage("diagnose"):
        res.diagnostics = {label: diagnose(m.fit, config) for label, m in res.models.items()}
    _emit(config, diagnostics_table(res.diagnostics, config), res)


def cmd_cusum(config, args):
    res = ingest(config)
    res.models = fit_models(res.window)
    with stage("cusum"):
        res.cusums = {label: cusum_test(m.fit.design) for label, m in res.models.items()}
    _emit(config, cusum_table(res.cusums), res)


def cmd_armey(config, args):
    res = ingest(config)
    res.models = fit_models(res.window)
    lines = ["Optimal spending shares (% of GDP)"]
    for label, m in res.models.items():
        val = "n/a" if m.optimum_share is None else f"{m.optimum_share:.3f}"
        lines.append(f"Model {label:<3} {m.spending_variable}: {val:>8}  ({m.shape})")
    _emit(config, lines, res)


def cmd_robustness(config, args):
    res = ingest(config)
    with stage("robustness"):
        res.robustness = fit_robustness_model(res.window, config.dummies)
    _emit(config, robustness_table(res.robustness) + [""]
          + optima_table({}, res.robustness), res)


def scatter_document(frame, spending):
    """SVG text for one scatter panel; the curve is dropped if the fit fails."""
    ok = ~frame.missing("GGDP") & ~frame.missing(spending)
    points = np.column_stack([frame[spending][ok], frame["GGDP"][ok]])
    curve = None
    try:
        curve = fit_armey_model(frame, spending).curve
    except (EstimabilityError, NumericalError) as exc:
        warnings.warn(f"{spending}: fitted curve omitted ({exc})", stacklevel=2)
    return scatter_svg(points, curve, xlabel=f"{spending} (% of GDP)",
                       title=f"{spending} and GDP growth rate")


def cusum_document(cusum, level_pct, label):
    lower, upper = cusum.bounds(LEVEL_OF[level_pct])
    return cusum_svg(cusum.years, cusum.path, lower, upper, f"{level_pct}%",
                     title=f"CUSUM, Model {label}")


def _out(config, name):
    return os.path.join(config.output_dir, name)


def cmd_plot_scatter(config, args):
    res = ingest(config)
    with stage("plot"):
        path = _out(config, f"scatter_{args.spending}.svg")
        write_atomic(path, scatter_document(res.window, args.spending))
    print(path)


def cmd_plot_cusum(config, args):
    res = ingest(config)
    with stage("cusum"):
        m = fit_armey_model(res.window, MODELS[args.model])
        c = cusum_test(m.fit.design)
    with stage("plot"):
        path = _out(config, f"cusum_model_{args.model}.svg")
        write_atomic(path, cusum_document(c, config.cusum_level, args.model))
    print(path)


def replication_checks(result):
    return (model_checks(result.models) + robustness_checks(result.robustness)
            + diagnostic_checks(result.diagnostics, result.cusums, result.za))


def cmd_replicate(config, args):
    result = run_replication(config)
    text = render_text(result)
    with stage("write"):
        write_atomic(_out(config, "report.txt"), text)
        write_atomic(_out(config, "report.kv"), render_records(build_records(result)))
        for label, gov in MODELS.items():
            write_atomic(_out(config, f"scatter_{gov}.svg"), scatter_document(result.window, gov))
            write_atomic(_out(config, f"cusum_model_{label}.svg"),
                         cusum_document(result.cusums[label], config.cusum_level, label))
    if config.report_format == "kv":
        sys.stdout.write(render_records(build_records(result)))
    else:
        sys.stdout.write(text)
    if config.assert_replication:
        checks = replication_checks(result)
        for c in checks:
            print(c.line())
        failed = [c for c in checks if not c.passed]
        if failed:
            err = ReplicationAssertionError(f"{len(failed)} of {len(checks)} published values missed")
            err.stage = "assert"
            raise err


def cmd_simulate(config, args):
    first = config.first_year or 1970
    last = config.last_year or 2015
    frame, truth = simulate_annual_dataset(config.seed, first, last)
    records = {
        "fixture": {"seed": config.seed, "first_year": first, "last_year": last},
        "truth": truth,
        "optima": {
            "GFCF": true_optimum(truth["GFCF"], truth["GFCF2"]),
            "GFCE": true_optimum(truth["GFCE"], truth["GFCE2"]),
        },
        "tolerance": FIXTURE_TOLERANCE,
    }
    with stage("write"):
        csv_path = _out(config, "synthetic.csv")
        write_atomic(csv_path, frame.to_csv())
        write_atomic(_out(config, "synthetic_truth.kv"), render_records(records))
    print(csv_path)


HANDLERS = {
    "ingest-check": cmd_ingest_check,
    "unitroot": cmd_unitroot,
    "fit": cmd_fit,
    "diagnose": cmd_diagnose,
    "cusum": cmd_cusum,
    "armey": cmd_armey,
    "robustness": cmd_robustness,
    "replicate": cmd_replicate,
    "plot-scatter": cmd_plot_scatter,
    "plot-cusum": cmd_plot_cusum,
    "simulate": cmd_simulate,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value configuration file")
    for name, (_, default, help_text) in OPTIONS.items():
        common.add_argument("--" + name.replace("_", "-"), dest=name, default=None,
                            metavar=name.upper(), help=f"{help_text} (default: {default})")
    common.add_argument("--assert", dest="assert_flag", action="store_true",
                        help="shorthand for --assert-replication true")

    parser = argparse.ArgumentParser(prog="armeycurve", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for cmd in COMMANDS:
        p = sub.add_parser(cmd, parents=[common], help=HANDLERS[cmd].__name__[4:].replace("_", " "))
        if cmd == "plot-scatter":
            p.add_argument("spending", choices=tuple(MODELS.values()))
        if cmd == "plot-cusum":
            p.add_argument("model", choices=tuple(MODELS))
    return parser


def config_from_args(args, env=None):
    overrides = {}
    for name, (conv, _, _) in OPTIONS.items():
        text = getattr(args, name)
        if text is not None:
            try:
                overrides[name] = conv(text)
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"bad value for --{name.replace('_', '-')}: {text!r} ({exc})")
    if args.assert_flag:
        overrides["assert_replication"] = True
    return RunConfig.load(args.config, overrides, env=env)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
        HANDLERS[args.command](config, args)
    except ArmeyError as exc:
        stage_name = exc.stage or "config"
        print(f"error: stage={stage_name} type={type(exc).__name__} message={exc}", file=sys.stderr)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
