"""Shared orchestration between the CLI and the HTTP service.

Both front ends funnel through run_diagnostics / payload builders here, so a
value served over HTTP is computed by exactly the same code path as one
written to a file by the CLI.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dissimilarity import compute_dissimilarity
from .indices import (
    METRICS,
    DiagnosticRecord,
    HighlightSet,
    add_group_info,
    compute_diagnostic_indices,
    highlight_threshold,
    normalized_metric_table,
)
from .panel import (
    ExclusionReport,
    IndicatorDataset,
    ValidPanel,
    get_valid_data,
    group_variable,
    missingness_grid,
)


@dataclass(frozen=True)
class DiagnosticsRun:
    panel: ValidPanel
    report: ExclusionReport
    records: list[DiagnosticRecord]


def run_diagnostics(dataset: IndicatorDataset, group_var: str | None) -> DiagnosticsRun:
    """Validate the dataset and compute the full ten-index table."""
    panel, report = get_valid_data(dataset)
    diss = compute_dissimilarity(panel) if len(panel.countries) > 1 else None
    records = compute_diagnostic_indices(panel, group_var, diss)
    records = add_group_info(records, dataset)
    return DiagnosticsRun(panel=panel, report=report, records=records)


def _clean(v: float) -> float | None:
    return None if isinstance(v, float) and math.isnan(v) else v


def records_payload(records: list[DiagnosticRecord], group_var: str | None) -> dict:
    """JSON-ready diagnostics body with raw and [0,1]-normalized values."""
    rows = [
        {
            "country": rec.country,
            "group": rec.group,
            "labels": dict(rec.labels),
            "metrics": {m: _clean(rec.metrics[m]) for m in METRICS},
        }
        for rec in records
    ]
    normalized = {"global": normalized_metric_table(records, None)}
    if group_var is not None:
        normalized["by_group"] = normalized_metric_table(records, group_var)
    return {"metrics": list(METRICS), "records": rows, "normalized": normalized}


def series_payload(dataset: IndicatorDataset, panel: ValidPanel) -> dict:
    """All retained country series over the retained year span."""
    table = dataset.country_frame()
    countries = []
    for i, country in enumerate(panel.countries):
        values = [
            _clean(float(v)) for v in panel.values[i]
        ]
        countries.append(
            {
                "country": country,
                "iso3c": table.at[country, "iso3c"] if country in table.index else "",
                "labels": {
                    var: panel.group_labels[var][country] for var in panel.group_labels
                },
                "values": values,
            }
        )
    return {"years": list(panel.years), "countries": countries}


def missingness_payload(dataset: IndicatorDataset, group_var: str) -> dict:
    grid = missingness_grid(dataset, group_var)
    return {
        "years": list(grid.years),
        "countries": [
            {
                "country": c,
                "group": grid.group_of[c],
                "missing": [bool(x) for x in row],
            }
            for c, row in zip(grid.countries, grid.missing)
        ],
        "overall_pct_missing": grid.overall_pct_missing,
        "overall_pct_present": grid.overall_pct_present,
    }


def highlights_payload(hs: HighlightSet) -> dict:
    return {
        "metric": hs.metric,
        "percentile": hs.percentile,
        "scope": hs.scope,
        "absolute": hs.absolute,
        "thresholds": {k: _clean(v) for k, v in sorted(hs.thresholds.items())},
        "highlighted": sorted(hs.highlighted),
    }


def groups_payload(dataset: IndicatorDataset) -> dict:
    out = {}
    for var in ("region", "income", "lending"):
        out[var] = list(group_variable(dataset, var).levels)
    return {"group_vars": out}


def compute_highlights(
    records: list[DiagnosticRecord],
    metric: str,
    percentile: float,
    group_var: str | None,
    absolute: bool,
) -> HighlightSet:
    return highlight_threshold(
        records, metric, percentile=percentile, group_var=group_var, absolute=absolute
    )
