"""Build the frozen snapshot fixture for the PM2.5-style indicator.

Synthesizes a 214-entity x 65-year country panel (observed window
1990-2020) whose diagnostic indices reproduce the documented reference
values: the named exclusions, the dissimilarity/silhouette leaders, the
trend-shape extremes, the temporal-feature extremes and the crossing-point
census.  Series are constructed as level + mean-zero shape; shapes pin the
level-invariant features (betas, trend strength, acf, crossing points,
flat spot, smoothness) and the levels are then calibrated against the
distance targets with secant iterations.

Deterministic: a fixed seed drives every draw.  Output is the cache-layout
CSV plus its sidecar:

    python tools/make_fixture.py --out tests/data
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import zlib
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent))
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from roster import EXCLUDED, ROSTER  # noqa: E402
from panelscope.features import (  # noqa: E402
    acf1,
    crossing_points,
    flat_spot,
    smoothness,
    trend_strength,
)
from panelscope.smoothing import orthogonal_poly, supersmooth, trend_shape_regression  # noqa: E402

SEED = 20250701
N = 31
YEARS = list(range(1990, 2021))
ALL_YEARS = list(range(1960, 2025))
CODE = "EN.ATM.PM25.MC.M3"
LASTUPDATED = "2025-07-01"

BASIS = orthogonal_poly(N)
P1, P2 = BASIS.p1, BASIS.p2

RETAINED = [r for r in ROSTER if r[0] not in EXCLUDED]
REGION_OF = {r[0]: r[3] for r in ROSTER}
REGIONS = sorted({r[3] for r in ROSTER})

ACF_CAP = 0.9952  # everything except Ukraine stays below this


def stable_hash(text: str) -> int:
    return zlib.crc32(text.encode("utf-8"))


def center(s: np.ndarray) -> np.ndarray:
    return s - s.mean()


def orth_noise(rng: np.random.Generator) -> np.ndarray:
    """Unit-sd white noise orthogonal to the constant and both basis columns."""
    e = rng.standard_normal(N)
    e -= e.mean()
    e -= (e @ P1) * P1
    e -= (e @ P2) * P2
    sd = e.std()
    return e / sd if sd > 0 else e


def measured_betas(s: np.ndarray) -> tuple[float, float]:
    return trend_shape_regression(supersmooth(s).trend, BASIS)


def polish_betas(s: np.ndarray, b1: float, b2: float, rounds: int = 4) -> np.ndarray:
    """Nudge a shape along the basis until its measured betas hit the targets."""
    for _ in range(rounds):
        m1, m2 = measured_betas(s)
        s = s + (b1 - m1) * P1 + (b2 - m2) * P2
    return center(s)


def secant(f, x0: float, x1: float, target: float, tol: float, iters: int = 50) -> float:
    y0, y1 = f(x0) - target, f(x1) - target
    for _ in range(iters):
        if abs(y1) < tol:
            return x1
        denom = y1 - y0
        if denom == 0:
            break
        x2 = x1 - y1 * (x1 - x0) / denom
        x0, y0, x1 = x1, y1, x2
        y1 = f(x1) - target
    return x1


def sine(period: float, phase: float = 0.0) -> np.ndarray:
    k = np.arange(N, dtype=float)
    v = center(np.sin(2 * np.pi * (k / period) + phase))
    n = np.linalg.norm(v)
    return v / n if n > 0 else v


# --------------------------------------------------------------------------
# special-country shapes
# --------------------------------------------------------------------------

def trended_shape(
    name: str,
    b1: float,
    b2: float,
    sigma: float,
    *,
    crossing: str,  # "one" | "many"
    acf_target: float | None = None,
    smooth_target: float | None = None,
    max_tries: int = 500,
) -> np.ndarray:
    """Trend plus orthogonal noise with polished betas and verified extras."""
    for attempt in range(max_tries):
        rng = np.random.default_rng([SEED, stable_hash(name), attempt])
        e = orth_noise(rng)

        def make(sig: float) -> np.ndarray:
            return polish_betas(b1 * P1 + b2 * P2 + abs(sig) * e, b1, b2)

        sig = sigma
        if smooth_target is not None:
            sig = secant(lambda x: smoothness(make(x)), sigma, sigma * 1.3, smooth_target, 1e-4)
        elif acf_target is not None:
            sig = secant(lambda x: acf1(make(x)), sigma, sigma * 1.3, acf_target, 1e-5)
        s = make(sig)

        cp = crossing_points(s)
        if crossing == "one" and cp != 1:
            continue
        if crossing == "many" and not 2 <= cp <= 9:
            continue
        if flat_spot(s) > 16:
            continue
        if acf_target is None and acf1(s) > ACF_CAP:
            continue
        if acf_target is not None and abs(acf1(s) - acf_target) > 4e-4:
            continue
        if smooth_target is not None and abs(smoothness(s) - smooth_target) > 0.01 * smooth_target:
            continue
        m1, m2 = measured_betas(s)
        if abs(m1 - b1) > 0.02 * max(1.0, abs(b1)) or abs(m2 - b2) > 0.02 * max(1.0, abs(b2)):
            continue
        return s
    raise RuntimeError(f"could not build trended shape for {name}")


def oscillator_shape(name: str, runs: list[int], amp: float, jitter: float,
                     drift: float = 0.0, max_tries: int = 500) -> np.ndarray:
    """Alternating high/low blocks; crossing count == len(runs) - 1.

    Starts high with one more low point than high points overall, so the
    median equals the top of the low cluster and the strict binarization
    never flips an interior point.
    """
    assert sum(runs) == N
    n_high = sum(r for i, r in enumerate(runs) if i % 2 == 0)
    assert n_high == 15 and len(runs) % 2 == 1
    target_cross = len(runs) - 1
    for attempt in range(max_tries):
        rng = np.random.default_rng([SEED, stable_hash(name + "/osc"), attempt])
        vals: list[float] = []
        high = True
        for run in runs:
            for _ in range(run):
                v = amp if high else -amp
                vals.append(v + rng.uniform(-jitter, jitter))
            high = not high
        s = center(np.asarray(vals) + drift * np.arange(N) / N)
        if crossing_points(s) != target_cross:
            continue
        if flat_spot(s) > 16 or acf1(s) > ACF_CAP:
            continue
        return s
    raise RuntimeError(f"could not build oscillator for {name}")


def banded_shape(
    name: str,
    early: list[tuple[int, bool]],  # (run_length, is_high)
    band_len: int,
    *,
    amp: float | list[float],
    band_drop: float,
    jitter_frac: float,
    crossing_target: int,
    max_tries: int = 500,
) -> np.ndarray:
    """Early high/low excursions, then a long one-bin monotone descent.

    The band is re-centred inside the nearest of the ten value bins so it
    forms a single flat run of band_len points; being strictly monotone it
    crosses the series median exactly once.  amp may be one value or one
    per early run.
    """
    n_early = sum(r for r, _ in early)
    assert n_early + band_len == N
    amps = [amp] * len(early) if isinstance(amp, (int, float)) else list(amp)
    for attempt in range(max_tries):
        rng = np.random.default_rng([SEED, stable_hash(name + "/band"), attempt])
        vals: list[float] = []
        for (run, is_high), a in zip(early, amps):
            for _ in range(run):
                v = a if is_high else -a
                vals.append(v + rng.uniform(-jitter_frac * a, jitter_frac * a))
        steps = rng.uniform(0.6, 1.4, band_len - 1)
        steps = steps / steps.sum() * band_drop
        band = np.concatenate(([0.0], -np.cumsum(steps)))
        s = np.asarray(vals + list(band), dtype=float)

        lo, hi = s.min(), s.max()
        width = (hi - lo) / 10.0
        b_lo, b_hi = s[n_early:].min(), s[n_early:].max()
        if (b_hi - b_lo) > 0.8 * width:
            continue
        mid = 0.5 * (b_lo + b_hi)
        k = min(9, max(0, int(round((mid - lo) / width - 0.5))))
        s[n_early:] += (lo + (k + 0.5) * width) - mid
        s = center(s)
        if crossing_points(s) != crossing_target or flat_spot(s) != band_len:
            continue
        if abs(acf1(s)) > ACF_CAP:
            continue
        return s
    raise RuntimeError(f"could not build banded shape for {name}")


def tail_flat_shape(name: str, decline_len: int, tail_len: int, *,
                    drop: float, gap: float, tail_drop: float,
                    max_tries: int = 500) -> np.ndarray:
    """Steep decline into a near-flat one-bin tail (crossing point 1).

    The decline ends a clear gap above the tail so the two pieces occupy
    different bins.  The median falls near the bottom of the decline, so
    jitter is kept loud in the upper decline (to hold the lag correlation
    down) and quiet in the last five points around the median.
    """
    assert decline_len + tail_len == N
    for attempt in range(max_tries):
        rng = np.random.default_rng([SEED, stable_hash(name + "/tail"), attempt])
        decline = np.linspace(drop, gap, decline_len)
        jitter = rng.uniform(-0.65, 0.65, decline_len)
        jitter[-5:] = rng.uniform(-0.1, 0.1, 5)
        decline = decline + jitter
        tsteps = rng.uniform(0.5, 1.5, tail_len - 1)
        tsteps = tsteps / tsteps.sum() * tail_drop
        tail = np.concatenate(([0.0], -np.cumsum(tsteps)))
        s = np.concatenate((decline, tail))

        lo, hi = s.min(), s.max()
        width = (hi - lo) / 10.0
        b_lo, b_hi = s[decline_len:].min(), s[decline_len:].max()
        if (b_hi - b_lo) > 0.8 * width:
            continue
        mid = 0.5 * (b_lo + b_hi)
        k = min(9, max(0, int(round((mid - lo) / width - 0.5))))
        s = s.copy()
        s[decline_len:] += (lo + (k + 0.5) * width) - mid
        if s[decline_len - 1] <= s[decline_len] + width:
            continue
        s = center(s)
        if crossing_points(s) != 1 or flat_spot(s) != tail_len:
            continue
        if acf1(s) > ACF_CAP:
            continue
        return s
    raise RuntimeError(f"could not build tail-flat shape for {name}")


def hopping_shape(name: str, block: int, *, span: float, max_tries: int = 500) -> np.ndarray:
    """Blocks of near-equal points hopping across the range (flat run == block)."""
    n_blocks = int(np.ceil(N / block))
    for attempt in range(max_tries):
        rng = np.random.default_rng([SEED, stable_hash(name + "/hop"), attempt])
        centers = rng.permutation(np.linspace(-span / 2, span / 2, n_blocks))
        vals: list[float] = []
        for i in range(n_blocks):
            for _ in range(block):
                if len(vals) >= N:
                    break
                vals.append(centers[i] + rng.uniform(-0.02 * span, 0.02 * span))
        s = center(np.asarray(vals))
        if flat_spot(s) != block or not 3 <= crossing_points(s) <= 9:
            continue
        m1, m2 = measured_betas(s)
        if abs(m1) > 31 or abs(m2) > 8.5:
            continue
        return s
    raise RuntimeError(f"could not build hopping shape for {name}")


def uae_shape() -> np.ndarray:
    """Rapid early alternation, then an 18-point one-bin descent.

    Crossing points: eight transitions in the 13 early points plus one
    median crossing inside the monotone band.  The paired runs use a wide
    amplitude (positive lag products) and the single-point runs a narrower
    one (negative products); the narrow amplitude is solved so the lag
    correlation lands on the near-zero target.
    """
    early = [(2, True), (2, False), (2, True), (2, False), (1, True), (1, False),
             (1, True), (1, False), (1, True)]
    big = 7.0

    def build(a: float) -> np.ndarray:
        a = min(max(abs(a), 2.0), 4.5)
        amps = [big, big, big, big, a, a, a, a, a]
        return banded_shape(
            "United Arab Emirates", early, 18, amp=amps, band_drop=0.42,
            jitter_frac=0.1, crossing_target=9,
        )

    small = secant(lambda a: acf1(build(a)), 2.4, 3.2, -0.0032, 1e-5)
    s = build(small)
    assert crossing_points(s) == 9 and flat_spot(s) == 18
    assert abs(acf1(s) + 0.0032) < 4e-4, acf1(s)
    return s


def armenia_shape(max_tries: int = 500) -> np.ndarray:
    """14-point monotone descent into a 17-point one-bin band (crossing 1)."""
    for attempt in range(max_tries):
        rng = np.random.default_rng([SEED, stable_hash("Armenia/band17"), attempt])
        steps = rng.uniform(0.7, 1.3, 14)
        steps = steps / steps.sum() * 9.0
        early = 10.2 - np.concatenate(([0.0], np.cumsum(steps)))[:-1]
        bsteps = rng.uniform(0.5, 1.5, 16)
        bsteps = bsteps / bsteps.sum() * 0.5
        band = np.concatenate(([0.0], -np.cumsum(bsteps)))
        s = np.concatenate((early, band))
        lo, hi = s.min(), s.max()
        width = (hi - lo) / 10.0
        b_lo, b_hi = s[14:].min(), s[14:].max()
        if (b_hi - b_lo) > 0.8 * width:
            continue
        k = min(9, int((0.5 * (b_lo + b_hi) - lo) / width))
        s = s.copy()
        s[14:] += (lo + (k + 0.5) * width) - 0.5 * (b_lo + b_hi)
        if s[13] <= s[14]:
            continue
        s = center(s)
        if crossing_points(s) == 1 and flat_spot(s) == 17 and acf1(s) < ACF_CAP:
            return s
    raise RuntimeError("could not build Armenia shape")


# --------------------------------------------------------------------------
# background shapes
# --------------------------------------------------------------------------

def bg_monotone(name: str, rng: np.random.Generator, sign: int, max_tries: int = 300) -> np.ndarray:
    for attempt in range(max_tries):
        b1 = sign * rng.uniform(9, 27)
        b2 = rng.uniform(-5.5, 5.5)
        sigma = rng.uniform(0.15, 0.9) * abs(b1) / 25
        sub = np.random.default_rng([SEED, stable_hash(name + "/bgm"), attempt])
        s = polish_betas(b1 * P1 + b2 * P2 + sigma * orth_noise(sub), b1, b2)
        m1, m2 = measured_betas(s)
        if crossing_points(s) == 1 and flat_spot(s) <= 14 and abs(m1) < 31 and abs(m2) < 8.5 \
                and smoothness(s) > 0.16 and acf1(s) < ACF_CAP:
            return s
    raise RuntimeError(f"could not build monotone background for {name}")


def bg_curved(name: str, rng: np.random.Generator, max_tries: int = 300) -> np.ndarray:
    for attempt in range(max_tries):
        b1 = rng.uniform(-13, 13)
        b2 = rng.choice([-1.0, 1.0]) * rng.uniform(2.5, 7.5)
        sigma = rng.uniform(0.35, 1.6)
        sub = np.random.default_rng([SEED, stable_hash(name + "/bgc"), attempt])
        s = polish_betas(b1 * P1 + b2 * P2 + sigma * orth_noise(sub), b1, b2)
        m1, m2 = measured_betas(s)
        if 2 <= crossing_points(s) <= 9 and flat_spot(s) <= 14 and abs(m1) < 31 \
                and abs(m2) < 8.5 and smoothness(s) > 0.16 and acf1(s) < ACF_CAP:
            return s
    raise RuntimeError(f"could not build curved background for {name}")


def bg_wiggly(name: str, rng: np.random.Generator, max_tries: int = 300) -> np.ndarray:
    for attempt in range(max_tries):
        b1 = rng.uniform(-10, 10)
        b2 = rng.uniform(-5, 5)
        amp = rng.uniform(1.0, 4.5)
        period = rng.uniform(5.0, 14.0)
        phase = rng.uniform(0, 2 * np.pi)
        sigma = rng.uniform(0.3, 2.2)
        sub = np.random.default_rng([SEED, stable_hash(name + "/bgw"), attempt])
        s = b1 * P1 + b2 * P2 + amp * sine(period, phase) + sigma * orth_noise(sub)
        s = polish_betas(s, b1, b2)
        m1, m2 = measured_betas(s)
        if 2 <= crossing_points(s) <= 9 and flat_spot(s) <= 14 and abs(m1) < 31 \
                and abs(m2) < 8.5 and 0.16 < smoothness(s) < 5.6 and acf1(s) < ACF_CAP:
            return s
    raise RuntimeError(f"could not build wiggly background for {name}")


# --------------------------------------------------------------------------
# assembling all shapes
# --------------------------------------------------------------------------

def nac_trio() -> dict[str, np.ndarray]:
    """Three similar smooth decliners; the US is markedly the steepest.

    Small independent noise keeps the trio a tight cluster in shape space;
    their within-group distances come out around 7-24 units.
    """
    return {
        "Canada": trended_shape("Canada", -13.0, 0.8, 0.20, crossing="one"),
        "Bermuda": trended_shape("Bermuda", -7.5, -2.7, 0.12, crossing="one"),
        "United States": trended_shape("United States", -29.0, 6.8, 0.45, crossing="one"),
    }


def build_shapes() -> dict[str, np.ndarray]:
    shapes: dict[str, np.ndarray] = {}

    # Strong monotone decliners and risers (crossing point 1 each).
    shapes["Ukraine"] = trended_shape("Ukraine", -32.4, 2.69, 0.37, crossing="one", acf_target=0.996)
    shapes["Moldova"] = trended_shape("Moldova", -34.4, 2.65, 0.47, crossing="one")
    shapes["United Kingdom"] = trended_shape("United Kingdom", -16.3, -0.217, 0.26, crossing="one")
    shapes["Bolivia"] = trended_shape("Bolivia", -116.0, 2.46, 1.55, crossing="one")
    shapes["Peru"] = trended_shape("Peru", -104.0, -10.2, 1.76, crossing="one")
    shapes["Chile"] = trended_shape("Chile", -62.0, -4.0, 1.2, crossing="one")
    shapes["China"] = trended_shape("China", -55.0, 6.5, 1.5, crossing="one")
    shapes["Thailand"] = trended_shape("Thailand", -47.0, 3.2, 1.35, crossing="one")
    shapes["Nigeria"] = trended_shape("Nigeria", -43.0, -6.0, 1.9, crossing="one")
    shapes["Maldives"] = trended_shape("Maldives", -39.0, 1.8, 1.1, crossing="one")
    shapes["Mongolia"] = trended_shape("Mongolia", 27.2, 4.47, 1.38, crossing="one")

    # Curvature and noisy-trend extremes.
    shapes["Saudi Arabia"] = trended_shape("Saudi Arabia", 25.5, -11.7, 3.05, crossing="many")
    shapes["Singapore"] = trended_shape("Singapore", -21.1, 14.4, 1.0, crossing="many")
    shapes["Senegal"] = trended_shape("Senegal", -13.7, 10.1, 4.35, crossing="many")
    shapes["Kuwait"] = trended_shape("Kuwait", 13.7, -17.2, 3.46, crossing="many")
    shapes["Libya"] = trended_shape("Libya", 6.78, -15.2, 2.78, crossing="many")
    shapes["Niger"] = trended_shape("Niger", 13.9, -9.88, 6.0, crossing="many", smooth_target=8.54)
    shapes["Tuvalu"] = trended_shape("Tuvalu", 0.631, -0.596, 0.10, crossing="many", smooth_target=0.144)

    # High-dissimilarity mid-tier outliers (levels calibrated later).
    shapes["Qatar"] = trended_shape("Qatar", 5.0, -6.0, 2.4, crossing="many")
    shapes["Mauritania"] = trended_shape("Mauritania", -8.0, 3.0, 2.9, crossing="many")
    shapes["Afghanistan"] = trended_shape("Afghanistan", 16.0, 5.0, 2.4, crossing="many")
    shapes["Bahrain"] = trended_shape("Bahrain", 8.0, -7.0, 2.7, crossing="many")
    shapes["Egypt, Arab Rep."] = trended_shape("Egypt, Arab Rep.", 12.0, -5.0, 3.1, crossing="many")
    shapes["India"] = trended_shape("India", 19.0, -3.0, 2.0, crossing="many")
    shapes["Mali"] = trended_shape("Mali", 9.0, 6.0, 3.4, crossing="many")

    # Temporal-feature extremes.
    osc_runs = [3, 4, 3, 3, 3, 3, 2, 3, 2, 3, 2]
    shapes["Gabon"] = oscillator_shape("Gabon", osc_runs, amp=2.4, jitter=0.9)
    shapes["Tunisia"] = oscillator_shape("Tunisia", osc_runs, amp=1.9, jitter=0.45, drift=-2.2)
    shapes["Kyrgyz Republic"] = banded_shape(
        "Kyrgyz Republic", [(4, True), (5, False), (4, True)], 18,
        amp=5.2, band_drop=0.55, jitter_frac=0.18, crossing_target=3,
    )
    shapes["United Arab Emirates"] = uae_shape()
    shapes["Armenia"] = armenia_shape()
    shapes["Venezuela, RB"] = tail_flat_shape(
        "Venezuela, RB", 18, 13, drop=16.0, gap=3.2, tail_drop=0.7
    )
    shapes["Uruguay"] = tail_flat_shape(
        "Uruguay", 20, 11, drop=12.0, gap=2.6, tail_drop=0.5
    )
    shapes["Jordan"] = hopping_shape("Jordan", 3, span=11.0)
    shapes["Rwanda"] = hopping_shape("Rwanda", 3, span=9.0)
    shapes["West Bank and Gaza"] = hopping_shape("West Bank and Gaza", 3, span=10.0)

    shapes.update(nac_trio())

    # Background countries: 27 decliners + 10 risers complete the census of
    # exactly 54 crossing-once countries; the rest are curved or wiggly.
    background = [r[0] for r in RETAINED if r[0] not in shapes]
    rng_assign = np.random.default_rng([SEED, 777])
    pick = rng_assign.permutation(len(background))
    mono = {background[i] for i in pick[:37]}
    decliners = {background[i] for i in pick[:27]}
    for i, name in enumerate(background):
        rng = np.random.default_rng([SEED, 1000 + i])
        if name in decliners:
            shapes[name] = bg_monotone(name, rng, -1)
        elif name in mono:
            shapes[name] = bg_monotone(name, rng, +1)
        elif i % 2 == 0:
            shapes[name] = bg_curved(name, rng)
        else:
            shapes[name] = bg_wiggly(name, rng)
    return shapes


# --------------------------------------------------------------------------
# level calibration against the distance targets
# --------------------------------------------------------------------------

BASE_LEVELS = {
    "East Asia & Pacific": 33.0,
    "Europe & Central Asia": 27.0,
    "Latin America & Caribbean": 31.0,
    "Middle East & North Africa": 46.0,
    "North America": 13.0,
    "South Asia": 58.0,
    "Sub-Saharan Africa": 42.0,
}
SPREADS = {
    "East Asia & Pacific": 10.0,
    "Europe & Central Asia": 8.0,
    "Latin America & Caribbean": 8.0,
    "Middle East & North Africa": 7.0,
    "North America": 0.0,
    "South Asia": 6.0,
    "Sub-Saharan Africa": 10.0,
}

# absolute level knobs (everything else floats on its region base)
LEVEL_KNOBS = {
    "Qatar": 128.0,
    "Niger": 123.0,
    "Mauritania": 111.0,
    "Senegal": 104.0,
    "Mali": 98.0,
    "India": 95.0,
    "Egypt, Arab Rep.": 92.0,
    "Afghanistan": 90.0,
    "Bahrain": 88.0,
    "Peru": 72.0,
    "Bolivia": 50.0,
    "Bermuda": 12.64,
    "United States": 12.5,
}

AVG_TARGETS = {
    "Qatar": 498.0,
    "Niger": 479.0,
    "Mauritania": 415.0,
    "Senegal": 372.0,
    "Mali": 340.0,
    "India": 318.0,
    "Egypt, Arab Rep.": 300.0,
    "Afghanistan": 288.0,
    "Bahrain": 276.0,
    "Peru": 264.0,
}


class Calibrator:
    def __init__(self, shapes: dict[str, np.ndarray]):
        self.names = [r[0] for r in RETAINED]
        self.index = {n: i for i, n in enumerate(self.names)}
        self.regions = np.array([REGION_OF[n] for n in self.names])
        self.base = dict(BASE_LEVELS)
        self.knobs = dict(LEVEL_KNOBS)
        rng = np.random.default_rng([SEED, 4242])
        self.offsets = {
            name: rng.uniform(-SPREADS[REGION_OF[name]], SPREADS[REGION_OF[name]])
            for name in self.names
        }
        mat = np.array([shapes[n] for n in self.names])
        g = mat @ mat.T
        sq = np.diag(g)
        self.ss = sq[:, None] + sq[None, :] - 2.0 * g  # pairwise shape distance^2
        self.shape_min = {n: float(shapes[n].min()) for n in self.names}

    def levels(self) -> np.ndarray:
        out = np.empty(len(self.names))
        for i, name in enumerate(self.names):
            if name in self.knobs:
                out[i] = self.knobs[name]
            else:
                out[i] = self.base[REGION_OF[name]] + self.offsets[name]
        return out

    def distances(self) -> np.ndarray:
        lv = self.levels()
        dl = lv[:, None] - lv[None, :]
        d = np.sqrt(np.clip(self.ss + N * dl * dl, 0.0, None))
        np.fill_diagonal(d, 0.0)
        return d

    def country_avg(self, name: str, d: np.ndarray) -> float:
        i = self.index[name]
        mask = np.ones(len(self.names), dtype=bool)
        mask[i] = False
        return float(d[i, mask].mean())

    def group_mean(self, name: str, region: str, d: np.ndarray) -> float:
        i = self.index[name]
        mask = self.regions == region
        mask[i] = False
        return float(d[i, mask].mean())

    def sil(self, name: str, d: np.ndarray) -> float:
        own = REGION_OF[name]
        a = self.group_mean(name, own, d)
        b = min(self.group_mean(name, r, d) for r in BASE_LEVELS if r != own)
        return (b - a) / max(a, b)

    def nearest_other_group(self, name: str, d: np.ndarray) -> tuple[str, float]:
        own = REGION_OF[name]
        val, reg = min(
            (self.group_mean(name, r, d), r) for r in BASE_LEVELS if r != own
        )
        return reg, val

    # ---- solving ----------------------------------------------------------

    def _with_knob(self, knob: str, value: float, fn):
        old = self.knobs[knob]
        self.knobs[knob] = value
        try:
            return fn()
        finally:
            self.knobs[knob] = old

    def _with_base(self, region: str, value: float, fn):
        old = self.base[region]
        self.base[region] = value
        try:
            return fn()
        finally:
            self.base[region] = old

    def run(self, rounds: int = 14):
        for _ in range(rounds):
            for name, target in AVG_TARGETS.items():
                self.knobs[name] = secant(
                    lambda x, nm=name: self._with_knob(
                        nm, x, lambda: self.country_avg(nm, self.distances())
                    ),
                    self.knobs[name], self.knobs[name] + 2.0, target, 0.02,
                )
            self.base["Middle East & North Africa"] = secant(
                lambda x: self._with_base(
                    "Middle East & North Africa", x,
                    lambda: self.group_mean("Qatar", "Middle East & North Africa", self.distances()),
                ),
                self.base["Middle East & North Africa"],
                self.base["Middle East & North Africa"] + 1.5,
                410.0, 0.02,
            )
            self.base["South Asia"] = secant(
                lambda x: self._with_base(
                    "South Asia", x, lambda: self.sil("Qatar", self.distances())
                ),
                self.base["South Asia"], self.base["South Asia"] + 1.5,
                -0.168, 5e-5,
            )
            self.base["Europe & Central Asia"] = secant(
                lambda x: self._with_base(
                    "Europe & Central Asia", x,
                    lambda: self.sil("Canada", self.distances()),
                ),
                self.base["Europe & Central Asia"],
                self.base["Europe & Central Asia"] + 1.0,
                0.836, 5e-5,
            )
            self.knobs["United States"] = secant(
                lambda x: self._with_knob(
                    "United States", x,
                    lambda: self.sil("United States", self.distances()),
                ),
                self.knobs["United States"], self.knobs["United States"] + 0.5,
                0.695, 5e-5,
            )

    def final_series(self, shapes: dict[str, np.ndarray]) -> dict[str, np.ndarray]:
        lv = self.levels()
        return {name: shapes[name] + lv[i] for i, name in enumerate(self.names)}


# --------------------------------------------------------------------------
# verification and output
# --------------------------------------------------------------------------

BETA1_NAMED = {"Ukraine", "Moldova", "United Kingdom", "Bolivia", "Peru", "Chile",
               "China", "Thailand", "Nigeria", "Maldives", "Mongolia", "Saudi Arabia"}
BETA2_NAMED = {"Singapore", "Senegal", "Kuwait", "Libya", "Saudi Arabia", "Peru"}


def verify(series: dict[str, np.ndarray], cal: Calibrator) -> list[str]:
    problems: list[str] = []
    d = cal.distances()

    def check(cond, msg):
        if not cond:
            problems.append(msg)

    avgs = {n: cal.country_avg(n, d) for n in cal.names}
    top3 = sorted(avgs, key=avgs.get, reverse=True)[:3]
    check(top3 == ["Qatar", "Niger", "Mauritania"], f"avg top3 {top3}")
    for nm, tgt in (("Qatar", 498.0), ("Niger", 479.0), ("Mauritania", 415.0)):
        check(abs(avgs[nm] - tgt) / tgt < 0.006, f"{nm} avg {avgs[nm]:.1f}")

    top10 = set(sorted(avgs, key=avgs.get, reverse=True)[:10])
    check(top10 == set(AVG_TARGETS), f"avg top10 {sorted(top10)}")
    eleventh = sorted(avgs.values(), reverse=True)[10]
    check(eleventh < 0.93 * min(AVG_TARGETS.values()), f"11th avg too close: {eleventh:.1f}")

    sils = {n: cal.sil(n, d) for n in cal.names}
    stop3 = sorted(sils, key=sils.get, reverse=True)[:3]
    check(stop3 == ["Canada", "Bermuda", "United States"], f"sil top3 {stop3}")
    check(abs(sils["Canada"] - 0.836) < 0.012, f"Canada sil {sils['Canada']:.3f}")
    check(abs(sils["Bermuda"] - 0.798) < 0.016, f"Bermuda sil {sils['Bermuda']:.3f}")
    check(abs(sils["United States"] - 0.695) < 0.012, f"US sil {sils['United States']:.3f}")
    check(sils["Canada"] > sils["Bermuda"] + 0.008, "Canada/Bermuda sil gap")
    check(sils["Bermuda"] > sils["United States"] + 0.008, "Bermuda/US sil gap")
    fourth = sorted(sils.values(), reverse=True)[3]
    check(fourth < 0.6, f"4th sil too high: {fourth:.3f}")

    within_q = cal.group_mean("Qatar", "Middle East & North Africa", d)
    check(abs(within_q - 410.0) / 410.0 < 0.006, f"Qatar within {within_q:.1f}")
    check(abs(sils["Qatar"] + 0.168) < 0.0015, f"Qatar sil {sils['Qatar']:.4f}")

    reg, _ = cal.nearest_other_group("Qatar", d)
    check(reg == "South Asia", f"Qatar nearest group {reg}")
    for nm in ("Canada", "Bermuda", "United States"):
        reg, _ = cal.nearest_other_group(nm, d)
        check(reg == "Europe & Central Asia", f"{nm} nearest group {reg}")

    cps, flats, acfs, smooths, b1s, b2s, fts = {}, {}, {}, {}, {}, {}, {}
    for name, y in series.items():
        cps[name] = crossing_points(y)
        flats[name] = flat_spot(y)
        acfs[name] = acf1(y)
        smooths[name] = smoothness(y)
        b1s[name], b2s[name] = measured_betas(y)
        fts[name] = trend_strength(y)

    n_once = sum(1 for v in cps.values() if v == 1)
    check(n_once == 54, f"crossing==1 count {n_once}")
    check(cps["Gabon"] == 10 and cps["Tunisia"] == 10, "Gabon/Tunisia crossings")
    rest_cp = max(v for n, v in cps.items() if n not in ("Gabon", "Tunisia"))
    check(rest_cp <= 9, f"crossing max (non-leaders) {rest_cp}")
    check(flats["Kyrgyz Republic"] == 18 and flats["United Arab Emirates"] == 18,
          "KGZ/UAE flat spot")
    check(flats["Armenia"] == 17, f"Armenia flat {flats['Armenia']}")
    rest_flat = max(v for n, v in flats.items()
                    if n not in ("Kyrgyz Republic", "United Arab Emirates"))
    check(rest_flat <= 17, f"flat max (non-leaders) {rest_flat}")
    check(abs(acfs["Ukraine"] - 0.996) < 0.0015, f"Ukraine acf {acfs['Ukraine']:.4f}")
    check(abs(acfs["United Arab Emirates"] + 0.0032) < 0.0015,
          f"UAE acf {acfs['United Arab Emirates']:.5f}")
    second_acf = max(v for n, v in acfs.items() if n != "Ukraine")
    check(second_acf < acfs["Ukraine"], f"Ukraine not max acf (2nd {second_acf:.4f})")
    check(abs(fts["Ukraine"] - 0.996) < 0.004, f"Ukraine trend strength {fts['Ukraine']:.4f}")

    for nm, tgt in (("Ukraine", -32.4), ("Mongolia", 27.2), ("Saudi Arabia", 25.5),
                    ("Bolivia", -116.0), ("Peru", -104.0)):
        check(abs(b1s[nm] - tgt) / abs(tgt) < 0.04, f"{nm} b1 {b1s[nm]:.2f}")
    for nm, tgt in (("Ukraine", 2.69), ("Singapore", 14.4), ("Senegal", 10.1),
                    ("Kuwait", -17.2), ("Libya", -15.2)):
        check(abs(b2s[nm] - tgt) / abs(tgt) < 0.04, f"{nm} b2 {b2s[nm]:.2f}")

    pos_b1 = sorted(b1s, key=b1s.get, reverse=True)[:2]
    neg_b1 = sorted(b1s, key=b1s.get)[:2]
    check(pos_b1 == ["Mongolia", "Saudi Arabia"], f"b1 positive top2 {pos_b1}")
    check(neg_b1 == ["Bolivia", "Peru"], f"b1 negative top2 {neg_b1}")
    pos_b2 = sorted(b2s, key=b2s.get, reverse=True)[:2]
    neg_b2 = sorted(b2s, key=b2s.get)[:2]
    check(pos_b2 == ["Singapore", "Senegal"], f"b2 positive top2 {pos_b2}")
    check(neg_b2 == ["Kuwait", "Libya"], f"b2 negative top2 {neg_b2}")

    top8 = sorted(b1s, key=lambda n: abs(b1s[n]), reverse=True)[:8]
    check(all(b1s[n] < 0 for n in top8),
          f"abs-b1 top8 signs {[(n, round(b1s[n], 1)) for n in top8]}")

    for n in cal.names:
        if n not in BETA1_NAMED:
            check(abs(b1s[n]) < 32.5, f"{n} b1 out of band: {b1s[n]:.1f}")
        if n not in BETA2_NAMED:
            check(-14.2 < b2s[n] < 9.55, f"{n} b2 out of band: {b2s[n]:.1f}")

    sm_rank = sorted(smooths, key=smooths.get, reverse=True)
    check(sm_rank[0] == "Niger", f"smoothness max {sm_rank[0]}")
    check(abs(smooths["Niger"] - 8.54) / 8.54 < 0.02, f"Niger smoothness {smooths['Niger']:.3f}")
    check(sm_rank[-1] == "Tuvalu", f"smoothness min {sm_rank[-1]}")
    check(abs(smooths["Tuvalu"] - 0.144) / 0.144 < 0.03, f"Tuvalu smoothness {smooths['Tuvalu']:.4f}")

    mins = {n: float(np.min(y)) for n, y in series.items()}
    worst = min(mins, key=mins.get)
    check(mins[worst] > 0.3, f"non-positive values for {worst}: {mins[worst]:.2f}")
    return problems


def emit(series: dict[str, np.ndarray], out_dir: Path):
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / f"{CODE}.csv"
    header = [
        "country", "iso2c", "iso3c", "year", CODE, "status", "lastupdated",
        "region", "capital", "longitude", "latitude", "income", "lending",
    ]
    with csv_path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        count = 0
        for row in sorted(ROSTER, key=lambda r: r[0]):
            name, iso2, iso3, region, capital, lon, lat, income, lending = row
            values = series.get(name)
            for year in ALL_YEARS:
                if values is not None and YEARS[0] <= year <= YEARS[-1]:
                    val = repr(float(values[year - YEARS[0]]))
                else:
                    val = ""
                writer.writerow([name, iso2, iso3, year, val, "", LASTUPDATED,
                                 region, capital, lon, lat, income, lending])
                count += 1
    meta = {
        "indicator_code": CODE,
        "fetched_at": "2025-07-01T00:00:00+00:00",
        "row_count": count,
    }
    (out_dir / f"{CODE}.meta.json").write_text(json.dumps(meta, indent=2) + "\n")
    print(f"wrote {csv_path} ({count} rows)")


def main():
    parser = argparse.ArgumentParser(description="build the frozen snapshot fixture")
    parser.add_argument("--out", default="tests/data", help="output directory")
    args = parser.parse_args()

    print("building shapes ...")
    shapes = build_shapes()
    print("calibrating levels ...")
    cal = Calibrator(shapes)
    cal.run()
    series = cal.final_series(shapes)
    print("verifying ...")
    problems = verify(series, cal)
    if problems:
        for p in problems:
            print("PROBLEM:", p)
        raise SystemExit(f"{len(problems)} verification problems")
    print("all targets satisfied")
    emit(series, Path(args.out))


if __name__ == "__main__":
    main()
