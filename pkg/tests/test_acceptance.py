"""Acceptance suite: one test per release criterion, at stated tolerances.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per
criterion.  All replication criteria bind against the frozen snapshot in
tests/data (a synthetic, calibrated dataset; see tools/make_fixture.py).
"""

import itertools
import json
import time

import numpy as np
import pandas as pd
import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from panelscope.cli import main as cli_main
from panelscope.client import WdiClient
from panelscope.dissimilarity import compute_dissimilarity, compute_variation
from panelscope.features import (
    acf1,
    compute_temporal_features,
    compute_trend_shape_features,
    crossing_points,
    flat_spot,
    smoothness,
    trend_strength,
)
from panelscope.indices import compute_diagnostic_indices, highlight_threshold
from panelscope.panel import get_valid_data
from panelscope.service import create_app
from panelscope.smoothing import supersmooth

from conftest import DATA_DIR, PM_CODE, make_dataset
from test_features import brute_crossing, brute_flat_spot
from test_panel import EXPECTED_EXCLUDED


def report(line: str):
    print(f"\n[PASS] {line}")


@pytest.fixture(scope="module")
def dataset():
    return WdiClient(data_dir=DATA_DIR).read_cache(PM_CODE)


def test_criterion_validity_report(dataset):
    """Excluded countries and years match the documented snapshot output."""
    t0 = time.perf_counter()
    panel, rep = get_valid_data(dataset)
    elapsed = time.perf_counter() - t0

    assert list(rep.excluded_countries) == EXPECTED_EXCLUDED
    expected_years = list(range(1960, 1990)) + list(range(2021, 2025))
    assert list(rep.excluded_years) == expected_years
    assert len(rep.excluded_years) == 34
    assert elapsed < 1.0, f"validity took {elapsed:.2f}s"
    report(f"validity report: 17 countries + 34 years excluded in {elapsed:.3f}s")


def test_criterion_variation_replication(dataset):
    """Dissimilarity and silhouette leaders at 1% / +-0.02 tolerances."""
    panel, _ = get_valid_data(dataset)
    t0 = time.perf_counter()
    diss = compute_dissimilarity(panel)
    records = compute_variation(panel, "region", diss)
    elapsed = time.perf_counter() - t0

    by_avg = sorted(records, key=lambda r: -r.country_avg_dist)
    assert [r.country for r in by_avg[:3]] == ["Qatar", "Niger", "Mauritania"]
    for rec, target in zip(by_avg[:3], (498.0, 479.0, 415.0)):
        assert rec.country_avg_dist == pytest.approx(target, rel=0.01)

    by_sil = sorted(records, key=lambda r: -r.sil_width)
    assert [r.country for r in by_sil[:3]] == ["Canada", "Bermuda", "United States"]
    for rec, target in zip(by_sil[:3], (0.836, 0.798, 0.695)):
        assert rec.sil_width == pytest.approx(target, abs=0.02)

    assert elapsed < 5.0, f"variation took {elapsed:.2f}s"
    report(
        "variation: top-3 averages (498, 479, 415)/1% and silhouettes "
        f"(0.836, 0.798, 0.695)/0.02 in {elapsed:.3f}s"
    )


def test_criterion_trend_shape_replication(dataset):
    """Trend strength and the four beta extremes, magnitudes within 5%."""
    panel, _ = get_valid_data(dataset)
    t0 = time.perf_counter()
    records = {r.country: r for r in compute_trend_shape_features(panel)}
    elapsed = time.perf_counter() - t0

    assert records["Ukraine"].trend_strength == pytest.approx(0.996, abs=0.005)

    lin = {c: r.linearity for c, r in records.items()}
    pos = sorted(lin, key=lin.get, reverse=True)[:2]
    neg = sorted(lin, key=lin.get)[:2]
    assert pos == ["Mongolia", "Saudi Arabia"] and all(lin[c] > 0 for c in pos)
    assert neg == ["Bolivia", "Peru"] and all(lin[c] < 0 for c in neg)
    for country, target in (("Mongolia", 27.2), ("Saudi Arabia", 25.5),
                            ("Bolivia", -116.0), ("Peru", -104.0),
                            ("Ukraine", -32.4)):
        assert lin[country] == pytest.approx(target, rel=0.05)

    curv = {c: r.curvature for c, r in records.items()}
    pos_c = sorted(curv, key=curv.get, reverse=True)[:2]
    neg_c = sorted(curv, key=curv.get)[:2]
    assert pos_c == ["Singapore", "Senegal"] and all(curv[c] > 0 for c in pos_c)
    assert neg_c == ["Kuwait", "Libya"] and all(curv[c] < 0 for c in neg_c)
    for country, target in (("Singapore", 14.4), ("Senegal", 10.1),
                            ("Kuwait", -17.2), ("Libya", -15.2),
                            ("Ukraine", 2.69)):
        assert curv[country] == pytest.approx(target, rel=0.05)

    assert elapsed < 10.0, f"trend/shape took {elapsed:.2f}s"
    report(
        f"trend/shape: Ukraine 0.996/0.005 and all four beta extremes/5% "
        f"for {len(records)} countries in {elapsed:.2f}s"
    )


def test_criterion_temporal_replication(dataset):
    """Crossing/flat-spot leaders, the two acf anchors, and the census."""
    panel, _ = get_valid_data(dataset)
    t0 = time.perf_counter()
    records = {r.country: r for r in compute_temporal_features(panel)}
    elapsed = time.perf_counter() - t0

    assert records["Gabon"].crossing_points == 10
    assert records["Tunisia"].crossing_points == 10
    assert records["Kyrgyz Republic"].flat_spot == 18
    assert records["United Arab Emirates"].flat_spot == 18
    assert records["Ukraine"].acf == pytest.approx(0.996, abs=0.002)
    assert records["United Arab Emirates"].acf == pytest.approx(-0.0032, abs=0.002)
    census = sum(1 for r in records.values() if r.crossing_points == 1)
    assert census == 54
    assert elapsed < 2.0, f"temporal took {elapsed:.2f}s"
    report(
        "temporal: crossings 10/10, flat spots 18/18, acf anchors "
        f"0.996/-0.0032, census of 54 in {elapsed:.3f}s"
    )


def test_criterion_property_suite():
    """Fixture-free properties, full block under 60 seconds."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(123)

    # decomposition identity to 1e-12 (relative)
    for _ in range(200):
        n = int(rng.integers(5, 60))
        y = rng.normal(0, rng.uniform(0.1, 20), n)
        res = supersmooth(y)
        scale = max(1.0, np.abs(y).max())
        assert np.abs(res.trend + res.remainder - y).max() / scale < 1e-12

    # trend strength bounds; exactly 1 on noiseless affine series
    for _ in range(300):
        y = rng.normal(0, 1, int(rng.integers(5, 40)))
        assert 0.0 <= trend_strength(y) <= 1.0
    for slope in (-3.0, 0.5, 12.0):
        y = slope * np.arange(31.0) + 2.0
        assert trend_strength(y) == pytest.approx(1.0, abs=1e-9)

    # smoothness is exactly 0 on arithmetic progressions
    for step in (-2.0, 0.25, 7.0):
        y = np.arange(0.0, 12.0) * step + 1.0
        assert smoothness(y) == pytest.approx(0.0, abs=1e-12)

    # exhaustive oracle equivalence: every sequence of length <= 12 over a
    # 3-symbol alphabet
    symbols = (0.0, 1.0, 2.0)
    checked = 0
    for length in range(1, 13):
        for seq in itertools.product(symbols, repeat=length):
            values = list(seq)
            assert flat_spot(values) == brute_flat_spot(values)
            if length >= 2:
                assert crossing_points(values) == brute_crossing(values)
            checked += 1
    assert checked == (3**13 - 3) // 2

    # dissimilarity symmetry / zero diagonal on 200 random panels, and the
    # rescaled distance equals plain Euclidean without missingness
    for _ in range(200):
        nc, ny = int(rng.integers(2, 7)), int(rng.integers(2, 9))
        x = rng.normal(0, 5, (nc, ny))
        mask = rng.random((nc, ny)) < 0.2
        x[mask] = np.nan
        if np.isnan(x).all(axis=1).any() or np.isnan(x).all(axis=0).any():
            continue
        series = {f"C{k:02d}": [None if np.isnan(v) else float(v) for v in row]
                  for k, row in enumerate(x)}
        panel, _ = get_valid_data(make_dataset(series, list(range(2000, 2000 + ny))))
        if len(panel.countries) < 2:
            continue
        d = compute_dissimilarity(panel).d
        assert np.allclose(np.diag(d), 0.0)
        ok = ~np.isnan(d)
        assert (ok == ok.T).all() and np.allclose(d[ok], d.T[ok])

    complete = rng.normal(0, 3, (6, 12))
    panel, _ = get_valid_data(
        make_dataset({f"C{k}": list(row) for k, row in enumerate(complete)},
                     list(range(2000, 2012)))
    )
    d = compute_dissimilarity(panel).d
    for i in range(6):
        for j in range(6):
            plain = np.sqrt(((complete[i] - complete[j]) ** 2).sum())
            assert abs(d[i, j] - plain) < 1e-12

    # silhouettes live in [-1, 1]; a well-separated three-group panel
    # scores above 0.8 everywhere
    series, regions = {}, {}
    for g, base in enumerate((0.0, 100.0, 200.0)):
        for k in range(5):
            name = f"G{g}C{k}"
            series[name] = list(base + rng.normal(0, 1.0, 14))
            regions[name] = f"group-{g}"
    panel, _ = get_valid_data(make_dataset(series, list(range(2000, 2014)), regions=regions))
    for rec in compute_variation(panel, "region"):
        assert -1.0 <= rec.sil_width <= 1.0
        assert rec.sil_width > 0.8

    # translation and positive scaling leave highlight membership unchanged
    series = {f"C{k:02d}": list(rng.normal(10, 3, 16) + rng.uniform(-4, 4))
              for k in range(24)}
    years = list(range(1990, 2006))
    base_panel, _ = get_valid_data(make_dataset(series, years))
    base_records = compute_diagnostic_indices(base_panel, "region")
    base_sets = {
        metric: highlight_threshold(base_records, metric, 0.9).highlighted
        for metric in ("country_avg_dist", "trend_strength", "acf",
                       "crossing_points", "flat_spot")
    }
    for transform in (lambda v: v + 17.3, lambda v: v * 4.2):
        moved = {c: [transform(x) for x in vals] for c, vals in series.items()}
        panel, _ = get_valid_data(make_dataset(moved, years))
        records = compute_diagnostic_indices(panel, "region")
        for metric, expected in base_sets.items():
            got = highlight_threshold(records, metric, 0.9).highlighted
            assert got == expected, f"{metric} membership changed"

    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0, f"property suite took {elapsed:.1f}s"
    report(f"property suite: identities, oracles ({checked:,} sequences), "
           f"invariances in {elapsed:.1f}s")


def test_criterion_pipeline_parity(tmp_path):
    """Service payloads equal CLI file output; one-group highlights are global."""
    api = TestClient(create_app(DATA_DIR))
    body = api.get(
        f"/api/v1/indicators/{PM_CODE}/diagnostics?group=region"
    ).json()["payload"]

    out = tmp_path / "diag.csv"
    result = CliRunner().invoke(
        cli_main,
        ["diagnose", PM_CODE, "--group-var", "region", "--out", "csv",
         "-o", str(out), "--data-dir", str(DATA_DIR)],
    )
    assert result.exit_code == 0
    # round_trip parsing: the default C parser can be off by one ulp
    table = pd.read_csv(out, float_precision="round_trip").set_index("country")

    assert len(body["records"]) == len(table)
    for row in body["records"]:
        csv_row = table.loc[row["country"]]
        for metric, value in row["metrics"].items():
            if value is None:
                assert pd.isna(csv_row[metric])
            else:
                assert float(csv_row[metric]) == value, (
                    f"{row['country']}/{metric}: {csv_row[metric]!r} != {value!r}"
                )

    # single-group grouping reproduces the global thresholds exactly
    single = WdiClient(data_dir=DATA_DIR).read_cache(PM_CODE)
    frame = single.frame.copy()
    frame.loc[frame["region"] != "Aggregates", "region"] = "World"
    cache_dir = tmp_path / "single"
    WdiClient(data_dir=cache_dir).write_cache(type(single)(frame, PM_CODE))
    single_api = TestClient(create_app(cache_dir))
    for metric in ("country_avg_dist", "acf", "smoothness"):
        grouped = single_api.get(
            f"/api/v1/indicators/{PM_CODE}/highlights"
            f"?metric={metric}&percentile=0.95&group=region"
        ).json()["payload"]
        global_ = single_api.get(
            f"/api/v1/indicators/{PM_CODE}/highlights?metric={metric}&percentile=0.95"
        ).json()["payload"]
        assert grouped["highlighted"] == global_["highlighted"]
        assert list(grouped["thresholds"].values()) == list(global_["thresholds"].values())

    report("pipeline parity: API == CLI value-for-value; one-group == global highlights")
