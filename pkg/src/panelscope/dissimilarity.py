"""Pairwise country distances and group-fit (variation) features.

Distances follow the missing-tolerant convention: the sum of squared
differences over the years observed in both countries is scaled up by
total_years / shared_years before the square root, so a pair with complete
data reduces to the plain Euclidean distance.  Pairs with no shared year are
flagged missing, never fabricated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AllPairsMissing, SingleCountry, UnlabeledCountry
from .panel import ValidPanel

NO_GROUPING_LABEL = "all"


@dataclass(frozen=True)
class DissimilarityMatrix:
    countries: tuple[str, ...]
    d: np.ndarray  # symmetric, zero diagonal, NaN where no shared years
    n_shared: np.ndarray  # integer matrix of shared observed years

    def pair(self, a: str, b: str) -> float:
        i, j = self.countries.index(a), self.countries.index(b)
        return float(self.d[i, j])


@dataclass(frozen=True)
class VariationRecord:
    country: str
    group: str
    country_avg_dist: float
    within_group_avg_dist: float
    sil_width: float
    usable_pairs: int


def compute_dissimilarity(panel: ValidPanel) -> DissimilarityMatrix:
    """Symmetric country x country distance table with shared-year counts."""
    n = len(panel.countries)
    if n < 2:
        raise SingleCountry("need at least 2 countries for pairwise distances")
    x = panel.values
    total_years = x.shape[1]
    observed = ~np.isnan(x)
    filled = np.where(observed, x, 0.0)

    obs = observed.astype(float)
    shared = obs @ obs.T  # pairwise count of co-observed years
    # sum over shared years of (xi - xj)^2, assembled without a 3-d broadcast:
    # sum(xi^2 * mj) + sum(xj^2 * mi) - 2 sum(xi * xj)
    sq = filled**2
    a = sq @ obs.T
    cross = filled @ filled.T
    d2 = a + a.T - 2.0 * cross

    with np.errstate(invalid="ignore", divide="ignore"):
        scaled = np.sqrt(np.clip(total_years / shared, 0, np.inf) * np.clip(d2, 0.0, None))
    scaled[shared == 0] = np.nan
    np.fill_diagonal(scaled, 0.0)
    return DissimilarityMatrix(
        countries=panel.countries,
        d=scaled,
        n_shared=shared.astype(int),
    )


def _mean_ignoring_nan(values: np.ndarray) -> float:
    ok = ~np.isnan(values)
    if not ok.any():
        return float("nan")
    return float(values[ok].mean())


def compute_variation(
    panel: ValidPanel,
    group_var: str | None = "region",
    diss: DissimilarityMatrix | None = None,
) -> list[VariationRecord]:
    """Average distances overall and within group, plus silhouette widths.

    With no grouping every country is labelled "all" and the silhouette is
    flagged missing.  Singleton groups get silhouette 0 with the within-group
    average flagged missing.
    """
    if diss is None:
        diss = compute_dissimilarity(panel)
    n = len(panel.countries)

    if group_var is None:
        labels = {c: NO_GROUPING_LABEL for c in panel.countries}
    else:
        labels = panel.labels_for(group_var)
        missing = [c for c in panel.countries if not labels.get(c)]
        if missing:
            raise UnlabeledCountry(f"no {group_var} label for {missing[:3]}")

    label_arr = np.array([labels[c] for c in panel.countries])
    levels = sorted(set(label_arr))
    out = []
    for i, country in enumerate(panel.countries):
        row = diss.d[i].copy()
        row[i] = np.nan  # exclude self
        usable = int(np.sum(~np.isnan(row)))
        if usable == 0:
            raise AllPairsMissing(f"{country} shares no years with any other country")
        avg = _mean_ignoring_nan(row)

        own = label_arr[i]
        within = _mean_ignoring_nan(row[label_arr == own])

        if group_var is None or len(levels) < 2:
            sil = float("nan")
        elif np.isnan(within):
            # singleton group: silhouette 0 by convention
            sil = 0.0
        else:
            others = [
                _mean_ignoring_nan(row[label_arr == lvl])
                for lvl in levels
                if lvl != own
            ]
            others = [v for v in others if not np.isnan(v)]
            if not others:
                sil = float("nan")
            else:
                b = min(others)
                sil = (b - within) / max(within, b) if max(within, b) > 0 else 0.0
        out.append(
            VariationRecord(
                country=country,
                group=own,
                country_avg_dist=avg,
                within_group_avg_dist=within,
                sil_width=sil,
                usable_pairs=usable,
            )
        )
    return out
