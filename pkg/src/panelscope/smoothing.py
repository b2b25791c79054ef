"""Variable-span trend smoothing and orthonormal polynomial bases.

The smoother is Friedman's variable-span approach: local linear fits at
three fixed spans, per-point span selection by smoothed leave-one-out
cross-validated absolute residuals, interpolation between the span smooths,
and a final cleanup pass at the smallest span.  It decomposes a series into
trend + remainder; the remainder is defined as the exact difference, so the
decomposition identity holds to float precision.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatch, NonIncreasingTime, SeriesTooShort

SPANS = (0.05, 0.2, 0.5)
MIDRANGE_SPAN = 0.2
FINAL_SPAN = 0.05
MIN_WINDOW = 3
# below this length cross-validated span selection is unstable; use the
# widest span only
CV_MIN_POINTS = 10


@dataclass(frozen=True)
class SmootherResult:
    trend: np.ndarray
    remainder: np.ndarray
    spans_used: np.ndarray


@dataclass(frozen=True)
class OrthoBasis:
    """First- and second-degree orthonormal polynomials of a time index."""

    p1: np.ndarray
    p2: np.ndarray


def _window_size(span: float, n: int) -> int:
    return min(n, max(MIN_WINDOW, int(round(span * n))))


def _local_linear(t: np.ndarray, y: np.ndarray, size: int, cv: bool = False) -> np.ndarray:
    """Local linear fit over a sliding window of fixed size.

    The window is centred where possible and clamped at the boundaries so it
    always holds exactly `size` points.  With cv=True the returned values are
    leave-one-out predictions computed from the hat-matrix leverage.
    """
    n = len(y)
    half = (size - 1) // 2
    starts = np.clip(np.arange(n) - half, 0, n - size)

    ct = np.concatenate(([0.0], np.cumsum(t)))
    ctt = np.concatenate(([0.0], np.cumsum(t * t)))
    cy = np.concatenate(([0.0], np.cumsum(y)))
    cty = np.concatenate(([0.0], np.cumsum(t * y)))

    lo, hi = starts, starts + size
    st = ct[hi] - ct[lo]
    stt = ctt[hi] - ctt[lo]
    sy = cy[hi] - cy[lo]
    sty = cty[hi] - cty[lo]

    mean_t = st / size
    mean_y = sy / size
    cov_ty = sty - st * mean_y
    var_t = stt - st * mean_t

    slope = np.where(var_t > 0, cov_ty / np.where(var_t > 0, var_t, 1.0), 0.0)
    fitted = mean_y + slope * (t - mean_t)
    if not cv:
        return fitted

    leverage = 1.0 / size + np.where(
        var_t > 0, (t - mean_t) ** 2 / np.where(var_t > 0, var_t, 1.0), 0.0
    )
    denom = np.clip(1.0 - leverage, 1e-10, None)
    # hat-matrix identity: y_hat(-i) = (y_hat - h*y) / (1 - h)
    return (fitted - leverage * y) / denom


def supersmooth(y, t=None) -> SmootherResult:
    """Decompose a series into trend and remainder with variable spans.

    y must have at least 5 points and t, when given, must be strictly
    increasing.  Defaults to the rank index 1..n.
    """
    y = np.asarray(y, dtype=float)
    n = len(y)
    if n < 5:
        raise SeriesTooShort(f"need at least 5 points, got {n}")
    if t is None:
        t = np.arange(1.0, n + 1.0)
    else:
        t = np.asarray(t, dtype=float)
        if len(t) != n:
            raise LengthMismatch(f"t has {len(t)} points, y has {n}")
        if np.any(np.diff(t) <= 0):
            raise NonIncreasingTime("time index must be strictly increasing")

    if n < CV_MIN_POINTS:
        trend = _local_linear(t, y, _window_size(SPANS[-1], n))
        spans_used = np.full(n, SPANS[-1])
        return SmootherResult(trend, y - trend, spans_used)

    spans = np.asarray(SPANS)
    sizes = [_window_size(s, n) for s in spans]
    fits = np.array([_local_linear(t, y, size) for size in sizes])
    cv_fits = np.array([_local_linear(t, y, size, cv=True) for size in sizes])

    mid_size = _window_size(MIDRANGE_SPAN, n)
    cv_abs = np.abs(cv_fits - y)
    smoothed_resid = np.array([_local_linear(t, r, mid_size) for r in cv_abs])

    # argmin over spans in descending order so ties pick the larger span
    order = np.argsort(spans)[::-1]
    pick = order[np.argmin(smoothed_resid[order], axis=0)]
    best_spans = spans[pick]

    spans_used = _local_linear(t, best_spans, mid_size)
    spans_used = np.clip(spans_used, spans[0], spans[-1])

    # per-point linear interpolation between the two bracketing span smooths
    idx = np.clip(np.searchsorted(spans, spans_used), 1, len(spans) - 1)
    s_lo, s_hi = spans[idx - 1], spans[idx]
    w = (spans_used - s_lo) / (s_hi - s_lo)
    cols = np.arange(n)
    blended = (1.0 - w) * fits[idx - 1, cols] + w * fits[idx, cols]

    trend = _local_linear(t, blended, _window_size(FINAL_SPAN, n))
    return SmootherResult(trend, y - trend, spans_used)


def orthogonal_poly(n: int, t=None) -> OrthoBasis:
    """Orthonormal degree-1 and degree-2 polynomials of the time index.

    Gram-Schmidt on the columns (1, t, t^2), dropping the constant and
    normalising each remaining column to unit Euclidean norm.
    """
    if n < 3:
        raise SeriesTooShort(f"need at least 3 points, got {n}")
    if t is None:
        t = np.arange(1.0, n + 1.0)
    else:
        t = np.asarray(t, dtype=float)
        if len(t) != n:
            raise LengthMismatch(f"t has {len(t)} points, expected {n}")
        if np.any(np.diff(t) <= 0):
            raise NonIncreasingTime("time index must be strictly increasing")

    v1 = t - t.mean()
    p1 = v1 / np.linalg.norm(v1)
    v2 = t * t
    v2 = v2 - v2.mean() - (v2 @ p1) * p1
    p2 = v2 / np.linalg.norm(v2)
    return OrthoBasis(p1=p1, p2=p2)


def trend_shape_regression(trend, basis: OrthoBasis) -> tuple[float, float]:
    """Least-squares coefficients of a trend on an orthonormal basis.

    Because the basis columns are orthonormal and orthogonal to the constant,
    the coefficients reduce to plain dot products.
    """
    trend = np.asarray(trend, dtype=float)
    if len(trend) != len(basis.p1):
        raise LengthMismatch(
            f"trend has {len(trend)} points, basis has {len(basis.p1)}"
        )
    centered = trend - trend.mean()
    return float(centered @ basis.p1), float(centered @ basis.p2)
