"""Static vector-graphics exports: distribution, partition, missingness.

These mirror the non-interactive views: distribution panels show one dot
per country per metric, the partition plot draws descending per-country
bars over a lighter group-average underlay, and the missingness grid paints
missing cells black on a light grey field.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .errors import UnknownPlot
from .indices import METRICS, DiagnosticRecord
from .panel import IndicatorDataset, missingness_grid

PLOT_KINDS = ("distribution", "partition", "missingness")

GROUP_COLORS = plt.get_cmap("tab10")


def _color_map(levels: list[str]) -> dict[str, tuple]:
    return {lvl: GROUP_COLORS(i % 10) for i, lvl in enumerate(sorted(levels))}


def export_plot(
    kind: str,
    out_path: str | Path,
    *,
    records: list[DiagnosticRecord] | None = None,
    dataset: IndicatorDataset | None = None,
    group_var: str = "region",
    metric: str | None = None,
) -> Path:
    if kind not in PLOT_KINDS:
        raise UnknownPlot(f"plot kind must be one of {PLOT_KINDS}, got {kind!r}")
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    if kind == "distribution":
        fig = distribution_figure(records, group_var)
    elif kind == "partition":
        fig = partition_figure(records, metric or "sil_width", group_var)
    else:
        fig = missingness_figure(dataset, group_var)
    fig.savefig(out_path, format=out_path.suffix.lstrip(".") or "svg")
    plt.close(fig)
    return out_path


def _label(rec: DiagnosticRecord, group_var: str) -> str:
    return rec.labels.get(group_var, rec.group)


def distribution_figure(records: list[DiagnosticRecord], group_var: str = "region"):
    """One panel per metric; one dot per country, coloured by group."""
    colors = _color_map([_label(r, group_var) for r in records])
    ncols = 2
    nrows = math.ceil(len(METRICS) / ncols)
    fig, axes = plt.subplots(nrows, ncols, figsize=(11, 2.1 * nrows))
    rng = np.random.default_rng(7)
    jitter = rng.uniform(0.1, 0.9, len(records))
    for ax, metric in zip(axes.flat, METRICS):
        xs, ys, cs = [], [], []
        for rec, y in zip(records, jitter):
            v = rec.metrics[metric]
            if isinstance(v, float) and math.isnan(v):
                continue
            xs.append(v)
            ys.append(y)
            cs.append(colors[_label(rec, group_var)])
        ax.scatter(xs, ys, s=12, c=cs, alpha=0.75, edgecolors="none")
        ax.set_title(metric, fontsize=9)
        ax.set_yticks([])
    for ax in axes.flat[len(METRICS):]:
        ax.axis("off")
    fig.tight_layout()
    return fig


def partition_figure(records: list[DiagnosticRecord], metric: str, group_var: str = "region"):
    """Descending bars per country inside each group, group mean underlaid."""
    colors = _color_map([_label(r, group_var) for r in records])
    groups: dict[str, list[DiagnosticRecord]] = {}
    for rec in records:
        groups.setdefault(_label(rec, group_var), []).append(rec)

    fig, ax = plt.subplots(figsize=(max(8, len(records) * 0.06), 4.5))
    x = 0
    for level in sorted(groups):
        members = [
            r for r in groups[level]
            if not (isinstance(r.metrics[metric], float) and math.isnan(r.metrics[metric]))
        ]
        members.sort(key=lambda r: r.metrics[metric], reverse=True)
        if not members:
            continue
        values = [r.metrics[metric] for r in members]
        mean = float(np.mean(values))
        span = len(members)
        color = colors[level]
        ax.bar(
            x + np.arange(span), [mean] * span, width=1.0, color=color, alpha=0.25,
            edgecolor="none",
        )
        ax.bar(x + np.arange(span), values, width=0.85, color=color, edgecolor="none")
        ax.text(
            x + span / 2, ax.get_ylim()[1] * 0.02, level, fontsize=6, rotation=90,
            ha="center", va="bottom", alpha=0.7,
        )
        x += span + 2
    ax.set_xticks([])
    ax.set_ylabel(metric)
    ax.axhline(0, color="black", linewidth=0.6)
    fig.tight_layout()
    return fig


def missingness_figure(dataset: IndicatorDataset, group_var: str = "region"):
    """Black cells for missing entries, light grey for present ones."""
    grid = missingness_grid(dataset, group_var)
    img = np.where(grid.missing, 0.0, 0.85)
    fig, ax = plt.subplots(figsize=(9, max(4, len(grid.countries) * 0.035)))
    ax.imshow(img, aspect="auto", cmap="gray", vmin=0.0, vmax=1.0, interpolation="nearest")
    step = max(1, len(grid.years) // 12)
    ax.set_xticks(range(0, len(grid.years), step))
    ax.set_xticklabels([grid.years[i] for i in range(0, len(grid.years), step)], fontsize=7)
    ax.set_yticks([])
    ax.set_title(
        f"missing {grid.overall_pct_missing:.1f}% / present {grid.overall_pct_present:.1f}%",
        fontsize=9,
    )
    fig.tight_layout()
    return fig
