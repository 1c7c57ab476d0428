"""The four figure kinds rendered from run artifacts.

curves             training curves (return and violation rate) with
                   mean +- std bands across seeds, from metrics.csv files
barrier_evolution  per-episode minimum barrier value over training with the
                   h = 0 safety boundary drawn as a dashed line, from
                   episodes.csv files
diagnostics        per-run bars of intervention rate, slack rate, and min-h,
                   from summary.json files
rho_scatter        calibrated rho vs violation rate on a log-x scale, from a
                   rho-report CSV or summary.json files

Rendering is deterministic and never mutates inputs: `build_figure` returns
the matplotlib figure plus the plotted data series, and re-running produces
byte-identical series (image bytes may differ across backends).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from plotkit.schema import (
    EPISODES_SCHEMA,
    METRICS_SCHEMA,
    RHO_REPORT_SCHEMA,
    SchemaMismatch,
    find_seed_files,
    read_csv,
    read_summary,
)

FIGURE_KINDS = ("curves", "barrier_evolution", "diagnostics", "rho_scatter")


@dataclass(frozen=True)
class PlotSpec:
    kind: str
    inputs: tuple
    output: str

    def __post_init__(self):
        if self.kind not in FIGURE_KINDS:
            raise ValueError(f"kind must be one of {FIGURE_KINDS}")
        if not self.inputs:
            raise ValueError("at least one input path required")


def _expand(inputs, per_seed_name: str) -> list:
    """Accept run directories or direct artifact paths."""
    files: list = []
    for item in inputs:
        p = Path(item)
        if p.is_dir():
            files.extend(find_seed_files(p, per_seed_name))
        else:
            files.append(p)
    if not files:
        raise FileNotFoundError(f"no {per_seed_name} files under {list(inputs)}")
    return files


def _seed_band(tables: list, x_col: str, y_col: str):
    """Interpolate per-seed series onto a common grid; mean +- std band."""
    tables = [t for t in tables if len(t[x_col])]
    if not tables:
        return np.array([]), np.array([]), np.array([])
    grid = min((t[x_col] for t in tables), key=len)
    ys = np.stack([np.interp(grid, t[x_col], t[y_col]) for t in tables])
    return grid, ys.mean(axis=0), ys.std(axis=0)


def _curves(inputs):
    tables = [read_csv(p, METRICS_SCHEMA) for p in _expand(inputs, "metrics.csv")]
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.4))
    series = {}
    for ax, col, label in (
        (axes[0], "return_mean", "episode return"),
        (axes[1], "violation_rate", "violation rate"),
    ):
        x, mean, std = _seed_band(tables, "step", col)
        if x.size == 0:
            warnings.warn("metrics input has no data rows; rendering blank axes")
        else:
            ax.plot(x, mean, lw=1.8)
            ax.fill_between(x, mean - std, mean + std, alpha=0.25)
        ax.set_xlabel("environment steps")
        ax.set_ylabel(label)
        series[col] = {"x": x, "mean": mean, "std": std}
    axes[1].set_ylim(bottom=-0.02)
    fig.suptitle("training curves (mean +- std over seeds)")
    fig.tight_layout()
    return fig, series


def _barrier_evolution(inputs):
    tables = [read_csv(p, EPISODES_SCHEMA) for p in _expand(inputs, "episodes.csv")]
    fig, ax = plt.subplots(figsize=(6, 3.6))
    x, mean, std = _seed_band(tables, "end_step", "min_h")
    if x.size == 0:
        warnings.warn("episodes input has no data rows; rendering blank axes")
    else:
        ax.plot(x, mean, lw=1.8, label="min h per episode")
        ax.fill_between(x, mean - std, mean + std, alpha=0.25)
    ax.axhline(0.0, linestyle="--", color="k", lw=1.0, label="safety boundary h = 0")
    ax.set_xlabel("environment steps")
    ax.set_ylabel("minimum barrier value")
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    return fig, {"min_h": {"x": x, "mean": mean, "std": std}}


def _diagnostics(inputs):
    summaries = [read_summary(p if Path(p).is_file() else Path(p) / "summary.json") for p in inputs]
    labels = [s["run_id"] for s in summaries]
    fields = ("intervention_rate", "slack_rate", "min_h")
    values = {f: [] for f in fields}
    for s in summaries:
        agg = s.get("aggregate", {})
        for f in fields:
            values[f].append(agg.get(f, {}).get("mean", np.nan))
    fig, axes = plt.subplots(1, 3, figsize=(10.5, 3.2))
    xs = np.arange(len(labels))
    for ax, f in zip(axes, fields):
        ax.bar(xs, values[f], width=0.6)
        ax.set_xticks(xs)
        ax.set_xticklabels([lab.split("-")[0] for lab in labels], rotation=20, fontsize=7)
        ax.set_title(f, fontsize=9)
        if f == "min_h":
            ax.axhline(0.0, linestyle="--", color="k", lw=0.8)
    fig.suptitle("filter diagnostics per run")
    fig.tight_layout()
    return fig, {f: {"labels": labels, "values": np.asarray(values[f], dtype=float)} for f in fields}


def _rho_scatter(inputs):
    envs: list = []
    rho: list = []
    violation: list = []
    for item in inputs:
        p = Path(item)
        if p.is_dir() or p.suffix == ".json":
            s = read_summary(p if p.is_file() else p / "summary.json")
            envs.append(s["env"])
            rho.append(s["rho_max"]["mean"])
            violation.append(s.get("aggregate", {}).get("violation_rate", {}).get("mean", np.nan))
        else:
            table = read_csv(p, RHO_REPORT_SCHEMA)
            envs.extend(table["env"])
            rho.extend(table["rho"].tolist())
            violation.extend(table["violation_rate"].tolist())
    fig, ax = plt.subplots(figsize=(5.2, 3.8))
    ax.scatter(rho, violation, s=42, zorder=3)
    for e, r, v in zip(envs, rho, violation):
        ax.annotate(e, (r, v), fontsize=7, xytext=(4, 4), textcoords="offset points")
    ax.set_xscale("log")
    ax.set_xlabel("calibrated projected-residual margin rho (log scale)")
    ax.set_ylabel("violation rate")
    ax.grid(alpha=0.3)
    fig.tight_layout()
    return fig, {"env": envs, "rho": np.asarray(rho, float), "violation": np.asarray(violation, float)}


_BUILDERS = {
    "curves": _curves,
    "barrier_evolution": _barrier_evolution,
    "diagnostics": _diagnostics,
    "rho_scatter": _rho_scatter,
}


def build_figure(spec: PlotSpec):
    """Figure plus the plotted data series (for determinism checks)."""
    return _BUILDERS[spec.kind](spec.inputs)


def render(spec: PlotSpec) -> str:
    """Render the figure to spec.output and return the path."""
    fig, _ = build_figure(spec)
    out = Path(spec.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=130)
    plt.close(fig)
    return str(out)
