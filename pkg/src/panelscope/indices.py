"""The combined ten-index table, group joins, and percentile highlighting."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np
import pandas as pd

from .dissimilarity import DissimilarityMatrix, VariationRecord, compute_variation
from .errors import EmptyGroup, UnknownCountry, UnknownMetric
from .features import compute_temporal_features, compute_trend_shape_features
from .panel import GROUP_VARS, ValidPanel, IndicatorDataset

# Closed, ordered registry of the ten diagnostic metrics.  Serialization
# always emits this order.
METRICS = (
    "country_avg_dist",
    "within_group_avg_dist",
    "sil_width",
    "trend_strength",
    "linearity",
    "curvature",
    "smoothness",
    "crossing_points",
    "flat_spot",
    "acf",
)

INTEGER_METRICS = ("crossing_points", "flat_spot")


@dataclass(frozen=True)
class DiagnosticRecord:
    """All ten metric values for one country, plus optional group labels."""

    country: str
    group: str
    metrics: dict[str, float]
    labels: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if tuple(self.metrics.keys()) != METRICS:
            raise UnknownMetric(
                f"metrics must be exactly {METRICS} in order, got {tuple(self.metrics)}"
            )

    def value(self, metric: str) -> float:
        if metric not in self.metrics:
            raise UnknownMetric(f"{metric!r} is not a diagnostic metric")
        return self.metrics[metric]


@dataclass(frozen=True)
class HighlightSet:
    metric: str
    percentile: float
    scope: str  # "global" or the grouping variable name
    absolute: bool
    thresholds: dict[str, float]
    highlighted: frozenset[str]


def compute_diagnostic_indices(
    panel: ValidPanel,
    group_var: str | None = "region",
    diss: DissimilarityMatrix | None = None,
) -> list[DiagnosticRecord]:
    """Join the variation, trend/shape and temporal families on country.

    A single-country panel has no pairs, so its variation fields are
    flagged missing instead of failing the whole run.
    """
    if len(panel.countries) < 2:
        nan = float("nan")
        labels = panel.labels_for(group_var) if group_var else {}
        variation = {
            c: VariationRecord(
                country=c,
                group=labels.get(c, "all"),
                country_avg_dist=nan,
                within_group_avg_dist=nan,
                sil_width=nan,
                usable_pairs=0,
            )
            for c in panel.countries
        }
    else:
        variation = {r.country: r for r in compute_variation(panel, group_var, diss)}
    shape = {r.country: r for r in compute_trend_shape_features(panel)}
    temporal = {r.country: r for r in compute_temporal_features(panel)}

    records = []
    for country in panel.countries:
        v, s, t = variation[country], shape[country], temporal[country]
        metrics = {
            "country_avg_dist": v.country_avg_dist,
            "within_group_avg_dist": v.within_group_avg_dist,
            "sil_width": v.sil_width,
            "trend_strength": s.trend_strength,
            "linearity": s.linearity,
            "curvature": s.curvature,
            "smoothness": s.smoothness,
            "crossing_points": t.crossing_points,
            "flat_spot": t.flat_spot,
            "acf": t.acf,
        }
        records.append(DiagnosticRecord(country=country, group=v.group, metrics=metrics))
    return records


def add_group_info(
    records: list[DiagnosticRecord], dataset: IndicatorDataset
) -> list[DiagnosticRecord]:
    """Append region/income/lending labels from the dataset; idempotent."""
    table = dataset.country_frame()
    out = []
    for rec in records:
        if rec.country not in table.index:
            raise UnknownCountry(f"{rec.country!r} not present in dataset")
        labels = {var: table.at[rec.country, var] for var in GROUP_VARS}
        out.append(replace(rec, labels=labels))
    return out


def _interpolated_quantile(values: list[float], q: float) -> float:
    """Linear interpolation between order statistics (the common default)."""
    arr = np.sort(np.asarray(values, dtype=float))
    return float(np.quantile(arr, q, method="linear"))


def highlight_threshold(
    records: list[DiagnosticRecord],
    metric: str,
    percentile: float = 0.95,
    group_var: str | None = None,
    absolute: bool = False,
) -> HighlightSet:
    """Countries whose metric value strictly exceeds a quantile threshold.

    With group_var set, thresholds come from each group level separately
    (records must carry labels for that variable, or the variation group is
    used when the names agree).
    """
    if metric not in METRICS:
        raise UnknownMetric(f"{metric!r} is not a diagnostic metric")
    if not 0.0 < percentile < 1.0:
        raise ValueError(f"percentile must be in (0, 1), got {percentile}")

    def metric_value(rec: DiagnosticRecord) -> float:
        v = rec.value(metric)
        return abs(v) if absolute else v

    def group_key(rec: DiagnosticRecord) -> str:
        if group_var is None:
            return "global"
        if group_var in rec.labels:
            return rec.labels[group_var]
        return rec.group

    by_group: dict[str, list[tuple[str, float]]] = {}
    for rec in records:
        v = metric_value(rec)
        by_group.setdefault(group_key(rec), []).append((rec.country, v))

    thresholds: dict[str, float] = {}
    highlighted = set()
    for key, pairs in by_group.items():
        values = [v for _, v in pairs if not math.isnan(v)]
        if not values:
            raise EmptyGroup(f"no usable {metric} values in group {key!r}")
        thr = _interpolated_quantile(values, percentile)
        thresholds[key] = thr
        highlighted.update(c for c, v in pairs if not math.isnan(v) and v > thr)

    return HighlightSet(
        metric=metric,
        percentile=percentile,
        scope="global" if group_var is None else group_var,
        absolute=absolute,
        thresholds=thresholds,
        highlighted=frozenset(highlighted),
    )


def records_to_frame(records: list[DiagnosticRecord]) -> pd.DataFrame:
    """Fixed-order table: country, group labels, then the ten metrics."""
    rows = []
    label_cols: list[str] = []
    for rec in records:
        row: dict[str, object] = {"country": rec.country, "group": rec.group}
        for var, lab in rec.labels.items():
            row[var] = lab
            if var not in label_cols:
                label_cols.append(var)
        row.update(rec.metrics)
        rows.append(row)
    cols = ["country", "group", *label_cols, *METRICS]
    return pd.DataFrame(rows, columns=cols)


def frame_to_records(frame: pd.DataFrame) -> list[DiagnosticRecord]:
    """Inverse of records_to_frame (used by round-trip checks)."""
    label_cols = [c for c in frame.columns if c not in ("country", "group", *METRICS)]
    out = []
    for _, row in frame.iterrows():
        out.append(
            DiagnosticRecord(
                country=row["country"],
                group=row["group"],
                metrics={m: float(row[m]) for m in METRICS},
                labels={c: row[c] for c in label_cols},
            )
        )
    return out


def normalized_metric_table(
    records: list[DiagnosticRecord], group_var: str | None = None
) -> dict[str, dict[str, float | None]]:
    """Min-max scale each metric to [0, 1], globally or within group levels.

    Flagged-missing values stay None; a constant column maps to 0.0.
    """
    def scale(pairs: list[tuple[str, float]]) -> dict[str, float]:
        values = [v for _, v in pairs if not math.isnan(v)]
        if not values:
            return {}
        lo, hi = min(values), max(values)
        span = hi - lo
        return {
            c: ((v - lo) / span if span > 0 else 0.0)
            for c, v in pairs
            if not math.isnan(v)
        }

    out: dict[str, dict[str, float | None]] = {
        rec.country: {m: None for m in METRICS} for rec in records
    }
    for metric in METRICS:
        if group_var is None:
            groups: dict[str, list] = {"global": []}
            for rec in records:
                groups["global"].append((rec.country, rec.value(metric)))
        else:
            groups = {}
            for rec in records:
                key = rec.labels.get(group_var, rec.group)
                groups.setdefault(key, []).append((rec.country, rec.value(metric)))
        for pairs in groups.values():
            for country, v in scale(pairs).items():
                out[country][metric] = v
    return out
