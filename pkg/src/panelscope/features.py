"""Per-series diagnostic features: trend/shape and sequential temporal.

Every scalar here operates on the ordered observed values of one country
(year gaps are not interpolated; observations are treated as consecutive).
Batch helpers apply them across a panel and emit flagged-missing values for
countries that fail a precondition rather than dropping them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateVariance, SeriesTooShort
from .panel import ValidPanel
from .smoothing import orthogonal_poly, supersmooth, trend_shape_regression

FLAT_SPOT_BINS = 10


@dataclass(frozen=True)
class TrendShapeRecord:
    country: str
    trend_strength: float
    linearity: float
    curvature: float
    smoothness: float


@dataclass(frozen=True)
class TemporalRecord:
    country: str
    crossing_points: float  # integer-valued; NaN when flagged missing
    flat_spot: float
    acf: float


def trend_strength(y) -> float:
    """Share of variance explained by the smoothed trend, floored at 0."""
    y = np.asarray(y, dtype=float)
    if len(y) < 5:
        raise SeriesTooShort(f"need at least 5 points, got {len(y)}")
    total_var = float(np.var(y))
    if total_var == 0.0:
        return 0.0
    res = supersmooth(y)
    return max(0.0, 1.0 - float(np.var(res.remainder)) / total_var)


def linearity_curvature(y) -> tuple[float, float]:
    """Linear and quadratic coefficients of the smoothed trend."""
    y = np.asarray(y, dtype=float)
    if len(y) < 5:
        raise SeriesTooShort(f"need at least 5 points, got {len(y)}")
    res = supersmooth(y)
    basis = orthogonal_poly(len(y))
    return trend_shape_regression(res.trend, basis)


def smoothness(y) -> float:
    """Sample standard deviation of consecutive first differences."""
    y = np.asarray(y, dtype=float)
    if len(y) < 3:
        raise SeriesTooShort(f"need at least 3 points, got {len(y)}")
    return float(np.std(np.diff(y), ddof=1))


def crossing_points(y) -> int:
    """How many times the series crosses its own median."""
    y = list(map(float, y))
    n = len(y)
    if n < 2:
        raise SeriesTooShort(f"need at least 2 points, got {n}")
    s = sorted(y)
    mid = n // 2
    med = s[mid] if n % 2 else 0.5 * (s[mid - 1] + s[mid])
    above = [v > med for v in y]
    return sum(1 for a, b in zip(above, above[1:]) if a != b)


def flat_spot(y) -> int:
    """Longest run of consecutive observations in one of ten value bins.

    Bins are equal-width over [min, max]; the maximum falls in the top bin.
    A zero-range series occupies a single bin, so the run is the full length.
    """
    y = list(map(float, y))
    n = len(y)
    if n < 1:
        raise SeriesTooShort("need at least 1 point")
    lo, hi = min(y), max(y)
    rng = hi - lo
    if rng == 0.0:
        return n
    scale = FLAT_SPOT_BINS / rng
    best = run = 1
    prev = min(FLAT_SPOT_BINS - 1, int((y[0] - lo) * scale))
    for v in y[1:]:
        b = min(FLAT_SPOT_BINS - 1, int((v - lo) * scale))
        run = run + 1 if b == prev else 1
        if run > best:
            best = run
        prev = b
    return best


def acf1(y) -> float:
    """Correlation between the series and its one-period lagged values."""
    y = np.asarray(y, dtype=float)
    n = len(y)
    if n < 3:
        raise SeriesTooShort(f"need at least 3 points, got {n}")
    if np.var(y) == 0.0:
        raise DegenerateVariance("constant series has no autocorrelation")
    a, b = y[:-1], y[1:]
    da, db = a - a.mean(), b - b.mean()
    denom = math.sqrt(float(da @ da) * float(db @ db))
    if denom == 0.0:
        return float("nan")
    return float(da @ db) / denom


def compute_trend_shape_features(panel: ValidPanel) -> list[TrendShapeRecord]:
    """Trend strength, linearity, curvature and smoothness per country.

    Countries with too few observed points get NaN for the affected fields,
    never dropped.
    """
    out = []
    nan = float("nan")
    for country in panel.countries:
        y = panel.series(country)
        if len(y) >= 5:
            ft = trend_strength(y)
            b1, b2 = linearity_curvature(y)
        else:
            ft, b1, b2 = nan, nan, nan
        sm = smoothness(y) if len(y) >= 3 else nan
        out.append(TrendShapeRecord(country, ft, b1, b2, sm))
    return out


def compute_temporal_features(panel: ValidPanel) -> list[TemporalRecord]:
    """Crossing points, longest flat spot and lag-1 autocorrelation per country."""
    out = []
    nan = float("nan")
    for country in panel.countries:
        y = panel.series(country)
        cp = float(crossing_points(y)) if len(y) >= 2 else nan
        fs = float(flat_spot(y)) if len(y) >= 1 else nan
        if len(y) >= 3 and np.var(y) > 0.0:
            ac = acf1(y)
        else:
            ac = nan
        out.append(TemporalRecord(country, cp, fs, ac))
    return out
