"""Capture canned API payloads for the explorer UI tests.

Builds a small 12-country, 3-group panel, runs it through the real
pipeline and envelope, and freezes the endpoint bodies the UI test suite
replays through a stubbed fetch:

    python tools/make_ui_fixtures.py --out frontend/tests/fixtures
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np
import pandas as pd

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from panelscope import pipeline  # noqa: E402
from panelscope.panel import IndicatorDataset, get_valid_data, schema_columns  # noqa: E402

CODE = "UI.TEST.IND"
YEARS = list(range(2000, 2016))

COUNTRIES = {
    # (region, level, slope, wiggle)
    "Arden": ("North Cluster", 10.0, -2.5, 0.3),
    "Belmont": ("North Cluster", 11.0, -2.0, 0.25),
    "Corwin": ("North Cluster", 9.5, -2.8, 0.2),
    "Dorado": ("Middle Belt", 30.0, 1.5, 1.2),
    "Elmsworth": ("Middle Belt", 33.0, -0.5, 1.0),
    "Farrow": ("Middle Belt", 28.0, 2.2, 1.4),
    "Galway Reach": ("Middle Belt", 35.0, 0.8, 2.0),
    "Harland": ("South Range", 60.0, 4.0, 2.4),
    "Isleworth": ("South Range", 66.0, -5.0, 2.0),
    "Jessamine": ("South Range", 70.0, 6.0, 3.0),
    "Kestrel Bay": ("South Range", 64.0, 0.5, 5.0),
    "Lunara": ("South Range", 58.0, -3.5, 1.5),
}


def build_dataset() -> IndicatorDataset:
    rng = np.random.default_rng(20240601)
    rows = []
    k = np.arange(len(YEARS), dtype=float)
    for i, (name, (region, level, slope, wiggle)) in enumerate(COUNTRIES.items()):
        series = level + slope * (k - k.mean()) / 4 + rng.normal(0, wiggle, len(YEARS))
        if name == "Kestrel Bay":
            series[5] = np.nan  # one gap to exercise null handling
        iso = f"{name[:2].upper()}{i}"
        for year, value in zip(YEARS, series):
            rows.append(
                {
                    "country": name,
                    "iso2c": iso[:2],
                    "iso3c": iso,
                    "year": year,
                    CODE: None if np.isnan(value) else float(value),
                    "status": "",
                    "lastupdated": "2025-07-01",
                    "region": region,
                    "capital": "",
                    "longitude": "",
                    "latitude": "",
                    "income": "High income" if level < 20 else "Lower middle income",
                    "lending": "IBRD",
                }
            )
    frame = pd.DataFrame(rows, columns=schema_columns(CODE))
    frame[CODE] = frame[CODE].astype(float)
    return IndicatorDataset(frame, CODE)


def envelope(kind: str, payload) -> dict:
    return {
        "indicator_code": CODE,
        "generated_at": "2025-07-01T00:00:00+00:00",
        "payload_kind": kind,
        "payload": payload,
    }


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default="frontend/tests/fixtures")
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    dataset = build_dataset()
    panel, _ = get_valid_data(dataset)
    run = pipeline.run_diagnostics(dataset, "region")
    run_global = pipeline.run_diagnostics(dataset, None)

    bodies = {
        "series": envelope("series", pipeline.series_payload(dataset, run.panel)),
        "diagnostics_region": envelope(
            "diagnostics", pipeline.records_payload(run.records, "region")
        ),
        "diagnostics_global": envelope(
            "diagnostics", pipeline.records_payload(run_global.records, None)
        ),
        "missingness_region": envelope(
            "missingness", pipeline.missingness_payload(dataset, "region")
        ),
        "groups": envelope("groups", pipeline.groups_payload(dataset)),
    }
    for metric, pct, group, absolute, name in [
        ("country_avg_dist", 0.95, None, False, "highlights_global_avg"),
        ("country_avg_dist", 0.95, "region", False, "highlights_region_avg"),
        ("linearity", 0.75, None, True, "highlights_abs_linearity"),
        ("country_avg_dist", 0.999, None, False, "highlights_extreme"),
    ]:
        records = run.records if group else run_global.records
        hs = pipeline.compute_highlights(records, metric, pct, group, absolute)
        bodies[name] = envelope("highlights", pipeline.highlights_payload(hs))

    for name, body in bodies.items():
        (out / f"{name}.json").write_text(
            json.dumps(body, indent=1, allow_nan=False) + "\n"
        )
    print(f"wrote {len(bodies)} payloads -> {out}")


if __name__ == "__main__":
    main()
