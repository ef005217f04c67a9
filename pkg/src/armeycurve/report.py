"""Plain-text tables and key-value records for replication runs."""
from .armey import ORTHO_CONVENTION
from .numerics import LEVELS
from .ols import significance_stars

LEVEL_KEYS = {0.01: "1", 0.05: "5", 0.10: "10"}


def _ur_stars(verdicts):
    for lv, stars in ((0.01, "***"), (0.05, "**"), (0.10, "*")):
        if verdicts[lv]:
            return stars
    return ""


def _levels(config):
    return [lv for lv in LEVELS if round(lv * 100) in config.levels]


def _rule(title):
    return [title, "-" * len(title)]


def adf_table(adf, config):
    any_res = next(iter(adf.values()))
    lines = _rule(
        f"Table 1. Augmented Dickey-Fuller (variant: {any_res.variant}, "
        f"lag criterion: {any_res.criterion}, max lag: {any_res.max_lag})"
    )
    lines.append(f"{'Variable':<10}{'Statistic':>14}{'Lag':>6}{'n':>6}{'5% cv':>10}")
    for name, r in adf.items():
        stat = f"{r.statistic:.3f}{_ur_stars(r.verdicts):<3}"
        lines.append(f"{name:<10}{stat:>14}{r.chosen_lag:>6}{r.nobs:>6}{r.critical_values[0.05]:>10.3f}")
    lines.append(
        "Stars: unit root rejected at 1% (***), 5% (**), 10% (*) against "
        f"MacKinnon finite-sample critical values for the {any_res.variant} variant."
    )
    return lines


def model_table(models):
    labels = list(models)
    lines = _rule("Table 2. OLS estimates, dependent variable GGDP")
    head = "".join(f"{f'Model {l} ({models[l].spending_variable})':>26}" for l in labels)
    lines.append(f"{'':<12}{head}")
    lines.append(f"{'':<12}" + "".join(f"{'Coef':>14}{'SE':>12}" for _ in labels))
    rows = [("b1 LAB", lambda m: "LAB"), ("b2 EXPO", lambda m: "EXPO"),
            ("b3 GOV", lambda m: m.spending_variable),
            ("b4 GOV^2", lambda m: m.spending_variable + "2"), ("b0 const", lambda m: "const")]
    for label, key in rows:
        cells = ""
        for l in labels:
            f, name = models[l].fit, key(models[l])
            coef = f"{f.coef(name):.3f}{f.stars(name):<3}"
            cells += f"{coef:>14}{f.stderr(name):>12.3f}"
        lines.append(f"{label:<12}{cells}")
    for label, attr, fmt in (("R^2", "r2", ".4f"), ("Adj. R^2", "adjusted_r2", ".4f"),
                             ("Root MSE", "rmse", ".4f")):
        lines.append(f"{label:<12}" + "".join(f"{format(getattr(models[l].fit, attr), fmt):>14}{'':>12}"
                                              for l in labels))
    lines.append(f"{'n':<12}" + "".join(f"{models[l].fit.nobs:>14}{'':>12}" for l in labels))
    lines.append("Stars: two-sided significance at 1% (***), 5% (**), 10% (*).")
    return lines


def diagnostics_table(diagnostics, config):
    labels = list(diagnostics)
    lines = _rule("Table 3. Residual diagnostics (chi-square statistics, p-values)")
    lines.append(f"{'':<28}" + "".join(f"{f'Model {l}':>22}" for l in labels))

    def row(name, get):
        cells = "".join(f"{get(diagnostics[l]).statistic:>12.3f} (p={get(diagnostics[l]).p_value:.3f})"
                        for l in labels)
        return f"{name:<28}{cells}"

    lines.append(row(f"Breusch-Godfrey LM (lag {config.bg_lag})", lambda d: d["bg"]))
    lines.append(row("White" + (" (cross terms)" if config.white_cross_terms else " (no cross)"),
                     lambda d: d["white"]))
    lines.append(row("Jarque-Bera", lambda d: d["jb"]))
    sweep = sorted(next(iter(diagnostics.values()))["bg_sweep"])
    lines.append("Breusch-Godfrey sweep:")
    for p in sweep:
        lines.append(row(f"  lag {p}", lambda d, p=p: d["bg_sweep"][p]))
    return lines


def cusum_table(cusums):
    labels = list(cusums)
    lines = _rule("Table 4. CUSUM of recursive residuals")
    lines.append(f"{'Model':<20}" + "".join(f"{f'Model {l}':>12}" for l in labels))
    lines.append(f"{'Test statistic':<20}" + "".join(f"{cusums[l].statistic:>12.3f}" for l in labels))
    for lv in LEVELS:
        lines.append(f"{f'Critical value {LEVEL_KEYS[lv]}%':<20}"
                     + "".join(f"{cusums[l].critical_values[lv]:>12.3f}" for l in labels))
    lines.append("The null of parameter constancy is rejected when the statistic reaches the "
                 "critical value (5% constant kept at 0.947).")
    return lines


def za_table(za):
    lines = _rule("Table 5. Zivot-Andrews test, GGDP")
    lines.append(f"{'Break':<12}{'Statistic':>14}{'Break year':>12}{'Lag':>6}{'5% cv':>10}")
    for bt, r in za.items():
        stat = f"{r.statistic:.3f}{_ur_stars(r.verdicts):<3}"
        lines.append(f"{bt:<12}{stat:>14}{r.break_year:>12}{r.chosen_lag:>6}{r.critical_values[0.05]:>10.3f}")
    any_res = next(iter(za.values()))
    s = any_res.settings
    lines.append(f"Trim {s['trim_fraction']}, candidate years {s['window'][0]}-{s['window'][1]}, "
                 f"lag criterion {s['criterion']} ({s['lag_search']}); DU_t = 1 after the break year.")
    return lines


def robustness_table(robust):
    f = robust.fit
    lines = _rule("Table 6. Orthogonal-polynomial model with shock dummies")
    lines.append(f"{'GGDP':<12}{'Coefficient':>14}{'SE':>12}")
    order = [n for n in f.names if n != "const"] + ["const"]
    for name in order:
        coef = f"{f.coef(name):.3f}{f.stars(name):<3}"
        lines.append(f"{name:<12}{coef:>14}{f.stderr(name):>12.3f}")
    lines.append(f"{'R^2':<12}{f.r2:>14.4f}")
    lines.append(f"{'Adj. R^2':<12}{f.adjusted_r2:>14.4f}")
    lines.append(f"{'Root MSE':<12}{f.rmse:>14.4f}")
    lines.append(f"{'n':<12}{f.nobs:>14}")
    lines.append(f"Orthogonal polynomials normalised so that Gram(1, P1, P2) = n I ({robust.convention}).")
    return lines


def optima_table(models, robust):
    lines = _rule("Optimal spending shares (% of GDP)")
    for label, m in models.items():
        val = "n/a" if m.optimum_share is None else f"{m.optimum_share:.3f}"
        lines.append(f"Model {label:<3} {m.spending_variable}: {val:>8}  ({m.shape})")
    for gov, v in robust.vertices.items():
        if v is None:
            lines.append(f"Robustness {gov}: no interior maximum ({robust.shapes[gov]})")
        else:
            lines.append(
                f"Robustness {gov}: vertex {v.ortho:.3f} (P1 units) -> exact {v.exact:.3f}, "
                f"approximate {v.approximate:.3f} (difference {v.difference:+.3f})"
            )
    return lines


def render_text(result):
    cfg = result.config
    w = result.window
    lines = ["Armey-curve replication report", "=" * 30, ""]
    lines.append(f"Data: {cfg.data}")
    lines.append(f"SHA-256: {result.checksum}")
    lines.append(f"Estimation window: {w.years[0]}-{w.years[-1]} (effective n = {result.effective_n})")
    lines.append("")
    for block in (adf_table(result.adf, cfg), model_table(result.models),
                  diagnostics_table(result.diagnostics, cfg), cusum_table(result.cusums),
                  za_table(result.za), robustness_table(result.robustness),
                  optima_table(result.models, result.robustness)):
        lines.extend(block)
        lines.append("")
    return "\n".join(lines)


def _verdict_keys(verdicts, levels, prefix="reject"):
    return {f"{prefix}_{LEVEL_KEYS[lv]}": verdicts[lv] for lv in levels}


def _fit_records(f):
    out = {"nobs": f.nobs, "k": f.design.k, "df_resid": f.df_resid}
    for i, name in enumerate(f.names):
        out[f"coef.{name}"] = float(f.beta[i])
        out[f"se.{name}"] = float(f.se[i])
        out[f"p.{name}"] = float(f.pvalues[i])
        out[f"stars.{name}"] = significance_stars(f.pvalues[i])
    out.update(r2=f.r2, adjusted_r2=f.adjusted_r2, rmse=f.rmse, sigma2=f.sigma2)
    return out


def _test_records(prefix, r):
    return {f"{prefix}.statistic": r.statistic, f"{prefix}.df": r.df, f"{prefix}.p_value": r.p_value}


def build_records(result):
    cfg = result.config
    levels = _levels(cfg)
    w = result.window
    sections = {
        "provenance": {
            "data_sha256": result.checksum,
            "first_year": int(w.years[0]),
            "last_year": int(w.years[-1]),
            "effective_n": result.effective_n,
            "ortho_convention": ORTHO_CONVENTION,
            "cusum_5pct_constant": 0.947,
        }
    }
    sections["config"] = cfg.to_records()
    for name, r in (result.adf or {}).items():
        sec = {"variant": r.variant, "criterion": r.criterion, "max_lag": r.max_lag,
               "chosen_lag": r.chosen_lag, "nobs": r.nobs, "statistic": r.statistic}
        for lv in levels:
            sec[f"cv_{LEVEL_KEYS[lv]}"] = r.critical_values[lv]
        sec.update(_verdict_keys(r.verdicts, levels))
        sections[f"adf.{name}"] = sec
    for label, m in (result.models or {}).items():
        sec = {"spending": m.spending_variable}
        sec.update(_fit_records(m.fit))
        sec.update(beta3=m.beta3, beta4=m.beta4, optimum_share=m.optimum_share, shape=m.shape)
        sections[f"model.{label}"] = sec
    for label, d in (result.diagnostics or {}).items():
        sec = {"bg.lag_order": cfg.bg_lag}
        sec.update(_test_records("bg", d["bg"]))
        for p, r in d["bg_sweep"].items():
            sec.update(_test_records(f"bg_sweep.{p}", r))
        sec["white.cross_terms"] = cfg.white_cross_terms
        sec.update(_test_records("white", d["white"]))
        sec.update(_test_records("jb", d["jb"]))
        sec["jb.skewness"] = d["jb"].nuisance["skewness"]
        sec["jb.kurtosis"] = d["jb"].nuisance["kurtosis"]
        sections[f"diagnostics.{label}"] = sec
    for label, c in (result.cusums or {}).items():
        sec = {"n": c.n, "k": c.k, "sigma": c.sigma, "statistic": c.statistic}
        for lv in levels:
            sec[f"cv_{LEVEL_KEYS[lv]}"] = c.critical_values[lv]
        sec.update(_verdict_keys(c.verdicts, levels))
        sections[f"cusum.{label}"] = sec
    for bt, z in (result.za or {}).items():
        sec = {"break_year": z.break_year, "statistic": z.statistic, "chosen_lag": z.chosen_lag,
               "trim_fraction": z.settings["trim_fraction"], "lag_search": z.settings["lag_search"],
               "window_first": z.settings["window"][0], "window_last": z.settings["window"][1]}
        for lv in levels:
            sec[f"cv_{LEVEL_KEYS[lv]}"] = z.critical_values[lv]
        sec.update(_verdict_keys(z.verdicts, levels))
        sections[f"za.{bt}"] = sec
    rb = result.robustness
    if rb is None:
        if result.models:
            sections["optima"] = {
                f"model_{label}.{m.spending_variable}": m.optimum_share
                for label, m in result.models.items()
            }
        return sections
    sec = _fit_records(rb.fit)
    sec["ortho_convention"] = rb.convention
    for gov, v in rb.vertices.items():
        sec[f"shape.{gov}"] = rb.shapes[gov]
        sec[f"vertex.{gov}.ortho"] = None if v is None else v.ortho
        sec[f"vertex.{gov}.exact"] = None if v is None else v.exact
        sec[f"vertex.{gov}.approximate"] = None if v is None else v.approximate
    sections["robustness"] = sec
    opt = {}
    for label, m in (result.models or {}).items():
        opt[f"model_{label}.{m.spending_variable}"] = m.optimum_share
    for gov, v in rb.vertices.items():
        opt[f"robustness.{gov}.exact"] = None if v is None else v.exact
        opt[f"robustness.{gov}.approximate"] = None if v is None else v.approximate
    sections["optima"] = opt
    return sections
