"""Dataset schema and rectangular panel validation.

An indicator dataset is a 13-column country-year table in the layout the
World Bank API produces (the value column is named by the indicator code and
the code is kept as a dataset-level attribute).  This module turns such a
table into a validated country x year matrix, reports what was excluded and
summarises missingness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from .errors import EmptyPanel, SchemaMismatch, UnknownGroupVar

# Column names in their canonical order; VALUE is a placeholder for the
# indicator code.
SCHEMA_COLUMNS = (
    "country",
    "iso2c",
    "iso3c",
    "year",
    "VALUE",
    "status",
    "lastupdated",
    "region",
    "capital",
    "longitude",
    "latitude",
    "income",
    "lending",
)

GROUP_VARS = ("region", "income", "lending")
AGGREGATE_REGION = "Aggregates"
UNCLASSIFIED = "Unclassified"


def schema_columns(indicator_code: str) -> list[str]:
    return [indicator_code if c == "VALUE" else c for c in SCHEMA_COLUMNS]


@dataclass(frozen=True)
class IndicatorDataset:
    """Raw indicator rows plus the dataset-level indicator code."""

    frame: pd.DataFrame
    indicator_code: str

    def __post_init__(self):
        if not self.indicator_code:
            raise SchemaMismatch("indicator_code attribute must be non-empty")
        expected = schema_columns(self.indicator_code)
        got = list(self.frame.columns)
        if got != expected:
            raise SchemaMismatch(
                f"expected columns {expected}, got {got}"
            )

    @property
    def values_column(self) -> str:
        return self.indicator_code

    def country_frame(self) -> pd.DataFrame:
        """One row per non-aggregate country with its grouping labels."""
        f = self.frame[self.frame["region"] != AGGREGATE_REGION]
        cols = ["country", "iso2c", "iso3c", "region", "income", "lending"]
        out = f[cols].drop_duplicates("country").set_index("country")
        for var in GROUP_VARS:
            out[var] = out[var].fillna("").replace("", UNCLASSIFIED)
        return out


@dataclass(frozen=True)
class GroupVariable:
    """One of the pre-defined groupings with its ordered level labels."""

    name: str
    levels: tuple[str, ...]


def group_variable(dataset: IndicatorDataset, name: str) -> GroupVariable:
    if name not in GROUP_VARS:
        raise UnknownGroupVar(f"{name!r} is not one of {GROUP_VARS}")
    labels = dataset.country_frame()[name]
    return GroupVariable(name=name, levels=tuple(sorted(labels.unique())))


@dataclass(frozen=True)
class ValidPanel:
    """Rectangular country x year matrix with no all-missing row or column."""

    countries: tuple[str, ...]
    years: tuple[int, ...]
    values: np.ndarray  # shape (len(countries), len(years)), NaN = missing
    group_labels: dict[str, dict[str, str]]
    index_name: str

    def series(self, country: str) -> np.ndarray:
        """Observed values for one country, in year order, gaps dropped."""
        row = self.values[self.countries.index(country)]
        return row[~np.isnan(row)]

    def labels_for(self, group_var: str) -> dict[str, str]:
        if group_var not in self.group_labels:
            raise UnknownGroupVar(f"{group_var!r} not available in panel")
        return self.group_labels[group_var]


@dataclass(frozen=True)
class ExclusionReport:
    excluded_countries: tuple[str, ...]
    excluded_years: tuple[int, ...]
    retained_country_count: int
    retained_year_count: int

    def describe(self) -> str:
        lines = []
        nc = len(self.excluded_countries)
        lines.append(
            f"The {nc} countries listed below had no available data and were excluded:"
            if nc
            else "No countries were excluded."
        )
        for c in self.excluded_countries:
            lines.append(f"- {c}")
        ny = len(self.excluded_years)
        lines.append("")
        lines.append(
            f"The {ny} year(s) listed below had no available data and were excluded:"
            if ny
            else "No years were excluded."
        )
        if ny:
            years = [str(y) for y in self.excluded_years]
            for i in range(0, ny, 6):
                lines.append(" " + ",\t".join(years[i : i + 6]))
        return "\n".join(lines)


@dataclass(frozen=True)
class MissEntry:
    country: str
    group_label: str
    n_miss: int
    pct_miss: float


@dataclass(frozen=True)
class MissingnessSummary:
    entries: tuple[MissEntry, ...]
    overall_pct_missing: float
    overall_pct_present: float


@dataclass(frozen=True)
class MissingnessGrid:
    """Presence/absence cells over the full raw year span."""

    countries: tuple[str, ...]
    years: tuple[int, ...]
    missing: np.ndarray  # bool matrix, True = missing
    group_of: dict[str, str] = field(default_factory=dict)
    overall_pct_missing: float = 0.0
    overall_pct_present: float = 0.0


def _value_matrix(dataset: IndicatorDataset) -> pd.DataFrame:
    """Country x year pivot of the value column, aggregates removed."""
    f = dataset.frame[dataset.frame["region"] != AGGREGATE_REGION]
    if f.duplicated(["country", "year"]).any():
        dupes = f[f.duplicated(["country", "year"])]["country"].unique()[:3]
        raise SchemaMismatch(f"duplicate (country, year) rows, e.g. {list(dupes)}")
    pivot = f.pivot(index="country", columns="year", values=dataset.values_column)
    pivot = pivot.sort_index().sort_index(axis=1)
    return pivot.astype(float)


def get_valid_data(dataset: IndicatorDataset) -> tuple[ValidPanel, ExclusionReport]:
    """Exclude all-missing countries and years; report what was dropped.

    A value is invalid iff it is missing (absent or NaN).  Countries are
    reported in code-point order, years ascending.  Interior all-missing
    years are excluded like leading/trailing ones.
    """
    pivot = _value_matrix(dataset)
    observed = pivot.notna().to_numpy()
    if not observed.any():
        raise EmptyPanel("no observed values in the dataset")

    country_ok = observed.any(axis=1)
    year_ok = observed.any(axis=0)
    excluded_countries = tuple(pivot.index[~country_ok])
    excluded_years = tuple(int(y) for y in pivot.columns[~year_ok])

    kept = pivot.loc[country_ok, year_ok]
    labels = dataset.country_frame()
    group_labels = {
        var: {c: labels.at[c, var] for c in kept.index} for var in GROUP_VARS
    }
    panel = ValidPanel(
        countries=tuple(kept.index),
        years=tuple(int(y) for y in kept.columns),
        values=kept.to_numpy(),
        group_labels=group_labels,
        index_name=dataset.indicator_code,
    )
    report = ExclusionReport(
        excluded_countries=excluded_countries,
        excluded_years=excluded_years,
        retained_country_count=len(panel.countries),
        retained_year_count=len(panel.years),
    )
    return panel, report


def valid_subset(dataset: IndicatorDataset, panel: ValidPanel) -> IndicatorDataset:
    """The rows of the raw dataset retained by get_valid_data."""
    f = dataset.frame
    keep = f["country"].isin(panel.countries) & f["year"].isin(panel.years)
    return IndicatorDataset(f[keep].reset_index(drop=True), dataset.indicator_code)


def missingness_summary(
    dataset: IndicatorDataset, group_var: str = "region"
) -> MissingnessSummary:
    """Per-country missing-year counts over the full raw year span."""
    if group_var not in GROUP_VARS:
        raise UnknownGroupVar(f"{group_var!r} is not one of {GROUP_VARS}")
    pivot = _value_matrix(dataset)
    labels = dataset.country_frame()[group_var]
    total_years = pivot.shape[1]
    n_miss = pivot.isna().sum(axis=1)

    entries = [
        MissEntry(
            country=c,
            group_label=labels.get(c, UNCLASSIFIED),
            n_miss=int(n_miss[c]),
            pct_miss=100.0 * n_miss[c] / total_years,
        )
        for c in pivot.index
    ]
    entries.sort(key=lambda e: (-e.n_miss, e.country))
    total_cells = pivot.size
    missing_cells = int(pivot.isna().sum().sum())
    pct_missing = 100.0 * missing_cells / total_cells
    return MissingnessSummary(
        entries=tuple(entries),
        overall_pct_missing=pct_missing,
        overall_pct_present=100.0 - pct_missing,
    )


def missingness_grid(
    dataset: IndicatorDataset, group_var: str = "region"
) -> MissingnessGrid:
    """Presence grid keyed (country, year), countries ordered by group level."""
    if group_var not in GROUP_VARS:
        raise UnknownGroupVar(f"{group_var!r} is not one of {GROUP_VARS}")
    pivot = _value_matrix(dataset)
    labels = dataset.country_frame()[group_var]
    order = sorted(pivot.index, key=lambda c: (labels.get(c, UNCLASSIFIED), c))
    pivot = pivot.loc[order]
    missing = pivot.isna().to_numpy()
    pct_missing = 100.0 * missing.sum() / missing.size
    return MissingnessGrid(
        countries=tuple(pivot.index),
        years=tuple(int(y) for y in pivot.columns),
        missing=missing,
        group_of={c: labels.get(c, UNCLASSIFIED) for c in pivot.index},
        overall_pct_missing=pct_missing,
        overall_pct_present=100.0 - pct_missing,
    )
