"""Command-line surface: data ingestion, prior selection, analysis, reports.

Subcommands: ``analyze`` (full model-averaged analysis), ``es`` (effect sizes
only), ``priors list``/``priors show`` (registry access), ``fit-priors``
(maximum-likelihood family fits), ``rank-priors`` (candidate comparison over
a corpus). CSV schemas: 2x2 tables as ``study,a,b,c,d``; estimate pairs as
``study,y,se``; fit input as a single ``value`` column. All files UTF-8 with
a header row.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from scipy import stats as _scipy_stats

from . import __version__
from .bma import BmaResult, OutputScale, combine, rank_priors_over_corpus
from .distributions import PriorFamily, PriorSpec, format_prior, parse_prior
from .effect_sizes import (
    ContingencyTable,
    Measure,
    ZeroCellPolicy,
    log_odds_ratio,
    log_risk_ratio,
    risk_difference,
    validate_estimate,
)
from .errors import (
    BmaMetaError,
    DomainError,
    InvalidEstimateError,
    MixedSchemaError,
    NotConvergedError,
    ParseError,
)
from .fitting import FitTarget, FitInput, filter_tau_estimates, fit_family
from .inference import QuadratureConfig, evidence
from .model_space import DataModel, Dataset, build_space
from .prior_registry import candidate_priors, list_topics, lookup

EXIT_OK = 0
EXIT_ERROR = 3
EXIT_NOT_CONVERGED = 4

_TABLE_COLS = ("study", "a", "b", "c", "d")
_PAIR_COLS = ("study", "y", "se")


@dataclass(frozen=True)
class PriorSource:
    kind: str  # "pooled" | "topic" | "custom"
    topic: str | None = None
    mu: PriorSpec | None = None
    tau: PriorSpec | None = None


@dataclass(frozen=True)
class AnalysisConfig:
    measure: Measure
    prior_source: PriorSource
    data_model: str = "auto"  # "auto" | "normal-normal" | "binomial-normal"
    output_scale: OutputScale = OutputScale.LOG
    seed: int = 0
    quadrature: QuadratureConfig = QuadratureConfig()
    ci_level: float = 0.95
    zero_cell: ZeroCellPolicy = ZeroCellPolicy.none()
    beta_bound: float = 10.0


# -- ingestion -----------------------------------------------------------------

def ingest(path, measure: Measure) -> Dataset:
    """Read a dataset CSV; schema (tables vs estimate pairs) from the header."""
    path = Path(path)
    with path.open("r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError(f"{path}: empty file (header row required)") from None
        cols = [h.strip().lower() for h in header]
        has_table = all(c in cols for c in ("a", "b", "c", "d"))
        has_pair = all(c in cols for c in ("y", "se"))
        if has_table and has_pair:
            raise MixedSchemaError(
                f"{path}: header mixes table columns (a,b,c,d) with estimate "
                "columns (y,se)"
            )
        if not has_table and not has_pair:
            raise ParseError(
                f"{path}: header must contain study,a,b,c,d or study,y,se "
                f"(got {', '.join(cols)})"
            )
        if "study" not in cols:
            raise ParseError(f"{path}: missing required 'study' column")
        idx = {c: cols.index(c) for c in cols}
        rows = [r for r in reader if any(cell.strip() for cell in r)]
    if not rows:
        raise ParseError(f"{path}: no data rows")

    def cell(row, rno, col):
        j = idx[col]
        if j >= len(row):
            raise ParseError(f"{path}, row {rno}, column '{col}': missing value")
        return row[j].strip()

    if has_table:
        tables, labels = [], []
        for k, row in enumerate(rows, start=2):
            counts = {}
            for col in ("a", "b", "c", "d"):
                raw = cell(row, k, col)
                try:
                    counts[col] = int(raw)
                except ValueError:
                    raise ParseError(
                        f"{path}, row {k}, column '{col}': expected an integer "
                        f"count, got {raw!r}"
                    ) from None
            try:
                tables.append(ContingencyTable(**counts))
            except InvalidEstimateError as exc:
                raise ParseError(f"{path}, row {k}: {exc}") from None
            labels.append(cell(row, k, "study"))
        return Dataset.from_tables(measure, tables, labels)

    estimates = []
    for k, row in enumerate(rows, start=2):
        vals = {}
        for col in ("y", "se"):
            raw = cell(row, k, col)
            try:
                vals[col] = float(raw)
            except ValueError:
                raise ParseError(
                    f"{path}, row {k}, column '{col}': expected a number, "
                    f"got {raw!r}"
                ) from None
        try:
            estimates.append(validate_estimate(vals["y"], vals["se"], measure,
                                               cell(row, k, "study")))
        except InvalidEstimateError as exc:
            raise InvalidEstimateError(f"{path}, row {k}: {exc}") from None
    return Dataset.from_estimates(measure, estimates)


def emit_dataset(dataset: Dataset, path) -> None:
    """Write a dataset back to CSV (inverse of ingest for both schemas)."""
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        if dataset.is_tables:
            writer.writerow(_TABLE_COLS)
            for label, t in zip(dataset.labels, dataset.studies):
                writer.writerow([label, t.a, t.b, t.c, t.d])
        else:
            writer.writerow(_PAIR_COLS)
            for label, e in zip(dataset.labels, dataset.studies):
                writer.writerow([label, repr(e.y), repr(e.se)])


def _read_values(path) -> list[float]:
    path = Path(path)
    with path.open("r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError(f"{path}: empty file (header row required)") from None
        cols = [h.strip().lower() for h in header]
        if "value" not in cols:
            raise ParseError(f"{path}: need a 'value' column, got {cols}")
        j = cols.index("value")
        out = []
        for k, row in enumerate(reader, start=2):
            if not any(c.strip() for c in row):
                continue
            try:
                out.append(float(row[j]))
            except (IndexError, ValueError):
                raise ParseError(
                    f"{path}, row {k}, column 'value': expected a number"
                ) from None
    if not out:
        raise ParseError(f"{path}: no data rows")
    return out


# -- analysis orchestration -----------------------------------------------------

def _resolve_priors(config: AnalysisConfig) -> tuple[PriorSpec, PriorSpec, str]:
    src = config.prior_source
    if src.kind == "custom":
        if src.mu is None or src.tau is None:
            raise DomainError("custom prior source needs both --prior-mu and --prior-tau")
        return src.mu, src.tau, "custom"
    topic = "Pooled" if src.kind == "pooled" else src.topic
    entry = lookup(config.measure, topic, require_tau=True)
    return entry.prior_mu, entry.prior_tau, f"registry:{entry.topic}"


def _tables_to_estimates(dataset: Dataset, measure: Measure,
                         policy: ZeroCellPolicy) -> Dataset:
    fns = {Measure.LOG_OR: lambda t, lab: log_odds_ratio(t, policy, lab),
           Measure.LOG_RR: lambda t, lab: log_risk_ratio(t, policy, lab),
           Measure.RD: lambda t, lab: risk_difference(t, lab)}
    if measure not in fns:
        raise DomainError(f"{measure.value} cannot be computed from 2x2 tables")
    ests = [fns[measure](t, lab) for t, lab in zip(dataset.studies, dataset.labels)]
    return Dataset.from_estimates(measure, ests)


def _resolve_model(config: AnalysisConfig, dataset: Dataset) -> tuple[DataModel, Dataset]:
    choice = config.data_model
    if choice == "auto":
        choice = ("binomial-normal"
                  if config.measure is Measure.LOG_OR and dataset.is_tables
                  else "normal-normal")
    if choice == "binomial-normal":
        if config.measure is not Measure.LOG_OR:
            raise DomainError("the binomial-normal model applies to log OR only")
        if not dataset.is_tables:
            raise DomainError("the binomial-normal model needs 2x2 table input")
        return DataModel.BINOMIAL_NORMAL, dataset
    if dataset.is_tables:
        dataset = _tables_to_estimates(dataset, config.measure, config.zero_cell)
    return DataModel.NORMAL_NORMAL, dataset


def _max_workers() -> int | None:
    raw = os.environ.get("BMA_META_THREADS", "").strip()
    if not raw:
        return None
    try:
        n = int(raw)
    except ValueError:
        raise DomainError(f"BMA_META_THREADS must be an integer, got {raw!r}") from None
    return max(n, 1)


def run_analysis(config: AnalysisConfig, dataset: Dataset) -> tuple[BmaResult, str, dict]:
    """Run the four-model analysis; returns (result, text report, JSON document)."""
    prior_mu, prior_tau, source = _resolve_priors(config)
    data_model, working = _resolve_model(config, dataset)
    space = build_space(config.measure, prior_mu, prior_tau, data_model,
                        baseline_bound=config.beta_bound)
    evs = evidence(working, space, config.quadrature, max_workers=_max_workers())
    result = combine(evs, space, ci_level=config.ci_level,
                     output_scale=config.output_scale, measure=config.measure)
    doc = _json_document(result, config, dataset, prior_mu, prior_tau, source)
    report = _text_report(result, config, dataset, prior_mu, prior_tau, source)
    return result, report, doc


def _stats_dict(s) -> dict:
    return {"mean": s.mean, "median": s.median,
            "ci_lower": s.ci_lower, "ci_upper": s.ci_upper, "ci_level": s.ci_level}


def _json_document(result: BmaResult, config: AnalysisConfig, dataset: Dataset,
                   prior_mu: PriorSpec, prior_tau: PriorSpec, source: str) -> dict:
    p = result.posterior_model_probs
    q = result.prior_model_probs
    hyp = ("H0f", "H1f", "H0r", "H1r")
    return {
        "tool": {"name": "bmameta", "version": __version__},
        "measure": config.measure.value,
        "data_model": result.data_model.value,
        "output_scale": result.output_scale.value,
        "n_studies": len(dataset),
        "studies": list(dataset.labels),
        "prior": {"source": source,
                  "mu": format_prior(prior_mu),
                  "tau": format_prior(prior_tau)},
        "components": {
            "effect": {"models": "2/4", "prior_prob": q[1] + q[3],
                       "post_prob": p[1] + p[3],
                       "inclusion_bf": result.bf_effect,
                       "flag": result.bf_effect_flag},
            "heterogeneity": {"models": "2/4", "prior_prob": q[2] + q[3],
                              "post_prob": p[2] + p[3],
                              "inclusion_bf": result.bf_heterogeneity,
                              "flag": result.bf_heterogeneity_flag},
        },
        "prior_model_probs": dict(zip(hyp, q)),
        "posterior_model_probs": dict(zip(hyp, p)),
        "log_marginals": dict(zip(hyp, result.log_marginals)),
        "model_averaged": {"mu": _stats_dict(result.averaged_mu),
                           "tau": _stats_dict(result.averaged_tau)},
        "conditional": {"mu": _stats_dict(result.conditional_mu),
                        "tau": _stats_dict(result.conditional_tau)},
        "quadrature": {
            "outer_points_mu": config.quadrature.outer_points_mu,
            "outer_points_tau": config.quadrature.outer_points_tau,
            "prior_mass_cut": config.quadrature.prior_mass_cut,
            "refine_threshold": config.quadrature.refine_threshold,
            "beta_bound": config.beta_bound,
        },
        "seed": config.seed,
    }


def _text_report(result: BmaResult, config: AnalysisConfig, dataset: Dataset,
                 mu: PriorSpec, tau: PriorSpec, source: str) -> str:
    p = result.posterior_model_probs
    q = result.prior_model_probs
    scale_note = ("effect sizes on the ratio scale; heterogeneity on the log scale"
                  if result.output_scale is OutputScale.RATIO
                  else "all estimates on the analysis (log) scale")
    if config.measure is Measure.RD:
        scale_note = "all estimates on the risk-difference scale"
    lo_lab = f"{0.5 * (1 - result.ci_level):.3f}".rstrip("0")
    hi_lab = f"{1 - 0.5 * (1 - result.ci_level):.3f}".rstrip("0")

    def row(name, s):
        return (f"{name:<4} {s.mean:>7.3f} {s.median:>7.3f} "
                f"{s.ci_lower:>7.3f} {s.ci_upper:>8.3f}")

    lines = [
        f"Bayesian model-averaged meta-analysis ({result.data_model.value} model)",
        f"Studies: {len(dataset)}   Measure: {config.measure.value}   "
        f"Priors ({source}): mu ~ {format_prior(mu)}, tau ~ {format_prior(tau)}",
        "",
        "Components summary:",
        "              Models Prior prob. Post. prob. Inclusion BF",
        f"Effect           2/4 {q[1] + q[3]:>11.3f} {p[1] + p[3]:>11.3f} "
        f"{result.bf_effect:>12.3f}",
        f"Heterogeneity    2/4 {q[2] + q[3]:>11.3f} {p[2] + p[3]:>11.3f} "
        f"{result.bf_heterogeneity:>12.3f}",
        "",
        "Model-averaged estimates:",
        f"        Mean  Median {lo_lab:>7} {hi_lab:>8}",
        row("mu", result.averaged_mu),
        row("tau", result.averaged_tau),
        "",
        "Conditional estimates:",
        f"        Mean  Median {lo_lab:>7} {hi_lab:>8}",
        row("mu", result.conditional_mu),
        row("tau", result.conditional_tau),
        f"({scale_note})",
    ]
    return "\n".join(lines) + "\n"


# -- plot data ------------------------------------------------------------------

def forest_rows(dataset: Dataset, measure: Measure, ci_level: float = 0.95,
                policy: ZeroCellPolicy = ZeroCellPolicy.constant_add(0.5)) -> list[tuple]:
    """(label, y, lo, hi) per study on the analysis scale."""
    z = float(_scipy_stats.norm.ppf(0.5 + 0.5 * ci_level))
    rows = []
    if dataset.is_tables:
        working = _tables_to_estimates(dataset, measure if measure is not Measure.LOG_HR
                                       else Measure.LOG_OR, policy)
        pairs = zip(working.labels, working.studies)
    else:
        pairs = zip(dataset.labels, dataset.studies)
    for label, e in pairs:
        rows.append((label, float(e.y),
                     float(e.y - z * e.se), float(e.y + z * e.se)))
    return rows


def emit_plot_data(result: BmaResult, out_dir, forest: list[tuple] | None = None) -> dict:
    """Write density grids and forest rows as plain numeric text; returns the manifest.

    Model-averaged files hold the renormalized continuous component; the
    point-mass weight at zero is recorded in the manifest.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files = {}

    def write_grid(name, grid):
        p = out / name
        p.write_text(grid.to_text(), encoding="utf-8")
        files[name] = "density grid (axis, density)"

    write_grid("mu_conditional.dat", result.mu_posterior.grid)
    write_grid("mu_averaged.dat", result.mu_posterior.grid)
    write_grid("tau_conditional.dat", result.tau_posterior.grid)
    write_grid("tau_averaged.dat", result.tau_posterior.grid)
    if forest:
        lines = [f"{label}\t{y!r}\t{lo!r}\t{hi!r}" for label, y, lo, hi in forest]
        (out / "forest.dat").write_text("\n".join(lines) + "\n", encoding="utf-8")
        files["forest.dat"] = "per-study estimate and interval (label, y, lo, hi)"
    manifest = {
        "files": files,
        "atom_weight_mu": result.mu_posterior.atom_weight,
        "atom_weight_tau": result.tau_posterior.atom_weight,
        "note": "averaged grids hold the continuous mixture component "
                "renormalized to 1; combine with the atom weights for "
                "model-averaged quantities",
    }
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n",
                                       encoding="utf-8")
    return manifest


# -- argument parsing -----------------------------------------------------------

def _parse_zero_cell(text: str) -> ZeroCellPolicy:
    if text == "none":
        return ZeroCellPolicy.none()
    if text.startswith("add="):
        try:
            return ZeroCellPolicy.constant_add(float(text[4:]))
        except ValueError:
            pass
    raise argparse.ArgumentTypeError(
        f"expected 'none' or 'add=EPS', got {text!r}"
    )


_MODEL_CHOICES = {"auto": "auto", "nn": "normal-normal", "bn": "binomial-normal",
                  "normal-normal": "normal-normal",
                  "binomial-normal": "binomial-normal"}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bmameta",
        description="Bayesian model-averaged meta-analysis for binary and "
                    "time-to-event outcomes with embedded empirical priors.",
    )
    parser.add_argument("--version", action="version", version=f"bmameta {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_measure(p):
        p.add_argument("--measure", required=True, type=Measure.parse,
                       help="logOR | logRR | RD | logHR")

    pa = sub.add_parser("analyze", help="run a model-averaged meta-analysis")
    add_measure(pa)
    pa.add_argument("--data", required=True, help="CSV file (study,a,b,c,d or study,y,se)")
    pa.add_argument("--prior-topic", help="registry topic name")
    pa.add_argument("--prior-pooled", action="store_true",
                    help="use the pooled registry priors for the measure")
    pa.add_argument("--prior-mu", type=parse_prior,
                    help="custom effect prior, e.g. 'Student-t(0, 0.48, 3)'")
    pa.add_argument("--prior-tau", type=parse_prior,
                    help="custom heterogeneity prior, e.g. 'Inv-Gamma(1.67, 0.45)'")
    pa.add_argument("--output-scale", choices=["log", "ratio"], default="log")
    pa.add_argument("--ci", type=float, default=0.95, help="interval level")
    pa.add_argument("--json", help="write the result document to this file")
    pa.add_argument("--plots", help="write density grids and forest data here")
    pa.add_argument("--model", choices=sorted(_MODEL_CHOICES), default="auto")
    pa.add_argument("--zero-cell", type=_parse_zero_cell, default=ZeroCellPolicy.none(),
                    help="none | add=EPS (normal-normal path only)")
    pa.add_argument("--beta-bound", type=float, default=10.0,
                    help="baseline-rate prior truncation half-width")
    pa.add_argument("--seed", type=int, default=0)
    pa.set_defaults(func=_cmd_analyze)

    pe = sub.add_parser("es", help="compute per-study effect sizes from 2x2 tables")
    add_measure(pe)
    pe.add_argument("--data", required=True)
    pe.add_argument("--zero-cell", type=_parse_zero_cell, default=ZeroCellPolicy.none())
    pe.add_argument("--json", help="write rows to this file as JSON")
    pe.set_defaults(func=_cmd_es)

    pp = sub.add_parser("priors", help="browse the embedded prior registry")
    psub = pp.add_subparsers(dest="priors_command", required=True)
    pl = psub.add_parser("list", help="all topics for a measure")
    add_measure(pl)
    pl.add_argument("--json", help="write entries to this file as JSON")
    pl.set_defaults(func=_cmd_priors_list)
    ps = psub.add_parser("show", help="one topic row")
    add_measure(ps)
    ps.add_argument("--topic", required=True)
    ps.add_argument("--json", help="write the entry to this file as JSON")
    ps.set_defaults(func=_cmd_priors_show)

    pf = sub.add_parser("fit-priors", help="maximum-likelihood fit of a prior family")
    pf.add_argument("--input", required=True, help="CSV with a 'value' column")
    pf.add_argument("--target", required=True, choices=["mu", "tau"])
    pf.add_argument("--family", required=True,
                    choices=["normal", "student-t", "half-normal", "gamma", "inv-gamma"])
    pf.add_argument("--tau-floor", type=float, default=0.01)
    pf.add_argument("--json", help="write the fit result to this file as JSON")
    pf.set_defaults(func=_cmd_fit_priors)

    pr = sub.add_parser("rank-priors", help="rank candidate priors over datasets")
    add_measure(pr)
    pr.add_argument("--data", required=True, nargs="+",
                    help="dataset CSV files (one meta-analysis each)")
    pr.add_argument("--model", choices=sorted(_MODEL_CHOICES), default="auto")
    pr.add_argument("--mu-candidates",
                    help="semicolon-separated prior texts; default: registry candidates")
    pr.add_argument("--tau-candidates",
                    help="semicolon-separated prior texts; default: registry candidates")
    pr.add_argument("--zero-cell", type=_parse_zero_cell, default=ZeroCellPolicy.none())
    pr.add_argument("--beta-bound", type=float, default=10.0)
    pr.add_argument("--json", help="write the ranking report to this file as JSON")
    pr.set_defaults(func=_cmd_rank_priors)
    return parser


def _write_json(path, doc) -> None:
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def _prior_source_from_args(args) -> PriorSource:
    picked = [bool(args.prior_topic), bool(args.prior_pooled),
              args.prior_mu is not None or args.prior_tau is not None]
    if sum(picked) != 1:
        raise DomainError(
            "choose exactly one prior source: --prior-topic NAME, "
            "--prior-pooled, or --prior-mu SPEC with --prior-tau SPEC"
        )
    if args.prior_topic:
        return PriorSource("topic", topic=args.prior_topic)
    if args.prior_pooled:
        return PriorSource("pooled")
    if args.prior_mu is None or args.prior_tau is None:
        raise DomainError("custom priors need both --prior-mu and --prior-tau")
    return PriorSource("custom", mu=args.prior_mu, tau=args.prior_tau)


def _cmd_analyze(args) -> int:
    config = AnalysisConfig(
        measure=args.measure,
        prior_source=_prior_source_from_args(args),
        data_model=_MODEL_CHOICES[args.model],
        output_scale=OutputScale(args.output_scale),
        seed=args.seed,
        ci_level=args.ci,
        zero_cell=args.zero_cell,
        beta_bound=args.beta_bound,
    )
    dataset = ingest(args.data, args.measure)
    result, report, doc = run_analysis(config, dataset)
    sys.stdout.write(report)
    if args.json:
        _write_json(args.json, doc)
    if args.plots:
        emit_plot_data(result, args.plots,
                       forest=forest_rows(dataset, args.measure, args.ci))
    return EXIT_OK


def _cmd_es(args) -> int:
    dataset = ingest(args.data, args.measure)
    if not dataset.is_tables:
        raise DomainError("es needs 2x2 table input (study,a,b,c,d)")
    working = _tables_to_estimates(dataset, args.measure, args.zero_cell)
    rows = [{"study": lab, "y": e.y, "se": e.se,
             "warnings": list(e.warnings)}
            for lab, e in zip(working.labels, working.studies)]
    sys.stdout.write(f"{'study':<24} {'y':>10} {'se':>10}\n")
    for r in rows:
        flag = "  # " + "; ".join(r["warnings"]) if r["warnings"] else ""
        sys.stdout.write(f"{r['study']:<24} {r['y']:>10.4f} {r['se']:>10.4f}{flag}\n")
    if args.json:
        _write_json(args.json, {"measure": args.measure.value, "rows": rows})
    return EXIT_OK


def _cmd_priors_list(args) -> int:
    entries = list_topics(args.measure)
    width = max(len(e.topic) for e in entries)
    for e in entries:
        tau = format_prior(e.prior_tau) if e.prior_tau else "---"
        sys.stdout.write(f"{e.topic:<{width}}  mu ~ {format_prior(e.prior_mu):<24} "
                         f"tau ~ {tau}\n")
    if args.json:
        _write_json(args.json, [e.to_json_dict() for e in entries])
    return EXIT_OK


def _cmd_priors_show(args) -> int:
    entry = lookup(args.measure, args.topic)
    tau = format_prior(entry.prior_tau) if entry.prior_tau else "---"
    sys.stdout.write(
        f"measure: {entry.measure.value}\n"
        f"topic: {entry.topic}\n"
        f"prior mu: {format_prior(entry.prior_mu)} "
        f"[{entry.n_comparisons_mu} comparisons, {entry.n_estimates_mu} estimates]\n"
        f"prior tau: {tau}"
        + (f" [{entry.n_comparisons_tau} comparisons, {entry.n_estimates_tau} "
           f"estimates]\n" if entry.n_comparisons_tau else "\n")
    )
    if args.json:
        _write_json(args.json, entry.to_json_dict())
    return EXIT_OK


def _cmd_fit_priors(args) -> int:
    values = _read_values(args.input)
    if args.target == "tau":
        fit_input = filter_tau_estimates(values, args.tau_floor)
    else:
        fit_input = FitInput(values=tuple(values), target=FitTarget.EFFECT)
    family = PriorFamily(args.family)
    result = fit_family(fit_input, family)
    text = format_prior(result.spec)
    sys.stdout.write(
        f"fitted: {text}\nlog-likelihood: {result.log_likelihood!r}\n"
        f"n_used: {result.n_used} (dropped {fit_input.n_dropped})\n"
        f"converged: {result.converged}\n"
    )
    if args.json:
        _write_json(args.json, {
            "family": family.value, "spec": text,
            "log_likelihood": result.log_likelihood,
            "n_used": result.n_used, "n_dropped": fit_input.n_dropped,
            "converged": result.converged,
        })
    return EXIT_OK


def _cmd_rank_priors(args) -> int:
    datasets = [ingest(p, args.measure) for p in args.data]
    cands = candidate_priors(args.measure)
    mu_c = ([parse_prior(t) for t in args.mu_candidates.split(";")]
            if args.mu_candidates else list(cands.mu))
    tau_c = ([parse_prior(t) for t in args.tau_candidates.split(";")]
             if args.tau_candidates else list(cands.tau))
    model = _MODEL_CHOICES[args.model]
    if model == "auto":
        model = ("binomial-normal"
                 if args.measure is Measure.LOG_OR and datasets[0].is_tables
                 else "normal-normal")
    if model == "normal-normal":
        datasets = [
            _tables_to_estimates(d, args.measure, args.zero_cell) if d.is_tables else d
            for d in datasets
        ]
    report = rank_priors_over_corpus(datasets, mu_c, tau_c,
                                     data_model=DataModel(model),
                                     baseline_bound=args.beta_bound)

    def emit_block(name, rankings):
        sys.stdout.write(f"\nParameter {name}\n")
        n = len(rankings[0].rank_counts)
        head = " ".join(f"r{k+1:>5}" for k in range(n))
        sys.stdout.write(f"{'prior':<28} {head}  PrMP  Av.PoMP\n")
        for r in rankings:
            counts = " ".join(f"{c:>6}" for c in r.rank_counts)
            sys.stdout.write(f"{format_prior(r.spec):<28} {counts} "
                             f"{r.prior_prob:>5.2f} {r.avg_posterior_prob:>8.3f}\n")

    sys.stdout.write(f"datasets: {report.n_datasets} "
                     f"(failed: {report.n_failed})\n")
    emit_block("mu", report.mu)
    emit_block("tau", report.tau)
    for msg in report.failures:
        sys.stdout.write(f"warning: {msg}\n")
    if args.json:
        _write_json(args.json, {
            "n_datasets": report.n_datasets,
            "n_failed": report.n_failed,
            "failures": list(report.failures),
            "mu": [{"spec": format_prior(r.spec), "prior_prob": r.prior_prob,
                    "rank_counts": list(r.rank_counts),
                    "avg_posterior_prob": r.avg_posterior_prob} for r in report.mu],
            "tau": [{"spec": format_prior(r.spec), "prior_prob": r.prior_prob,
                     "rank_counts": list(r.rank_counts),
                     "avg_posterior_prob": r.avg_posterior_prob} for r in report.tau],
        })
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotConvergedError as exc:
        sys.stderr.write(f"error (not converged): {exc}\n")
        return EXIT_NOT_CONVERGED
    except BmaMetaError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
