"""Shared fixtures: the frozen snapshot dataset and a mock indicator API."""

from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

import numpy as np
import pandas as pd
import pytest

from panelscope.client import WdiClient
from panelscope.panel import IndicatorDataset, get_valid_data, schema_columns

DATA_DIR = Path(__file__).parent / "data"
PM_CODE = "EN.ATM.PM25.MC.M3"


@pytest.fixture(scope="session")
def pm_dataset() -> IndicatorDataset:
    return WdiClient(data_dir=DATA_DIR).read_cache(PM_CODE)


@pytest.fixture(scope="session")
def pm_panel(pm_dataset):
    panel, _ = get_valid_data(pm_dataset)
    return panel


@pytest.fixture(scope="session")
def pm_report(pm_dataset):
    _, report = get_valid_data(pm_dataset)
    return report


def make_dataset(series: dict[str, list], years: list[int], code: str = "TEST.IND",
                 regions: dict[str, str] | None = None,
                 incomes: dict[str, str] | None = None,
                 lendings: dict[str, str] | None = None) -> IndicatorDataset:
    """Small synthetic dataset builder for unit tests."""
    rows = []
    for country, values in series.items():
        region = (regions or {}).get(country, "Europe & Central Asia")
        income = (incomes or {}).get(country, "High income")
        lending = (lendings or {}).get(country, "IBRD")
        iso = country[:3].upper().ljust(3, "X")
        for year, value in zip(years, values):
            rows.append(
                {
                    "country": country,
                    "iso2c": iso[:2],
                    "iso3c": iso,
                    "year": year,
                    code: value,
                    "status": "",
                    "lastupdated": "2025-07-01",
                    "region": region,
                    "capital": "",
                    "longitude": "",
                    "latitude": "",
                    "income": income,
                    "lending": lending,
                }
            )
    frame = pd.DataFrame(rows, columns=schema_columns(code))
    frame[code] = frame[code].astype(float)
    return IndicatorDataset(frame, code)


class MockWdiServer:
    """Serves the v2 JSON API shapes from in-memory datasets."""

    def __init__(self, datasets: dict[str, pd.DataFrame], per_page_cap: int | None = None,
                 search_rows: list[tuple[str, str]] | None = None,
                 fail_requests: int = 0):
        self.datasets = datasets
        self.per_page_cap = per_page_cap
        self.search_rows = search_rows or []
        self.fail_requests = fail_requests
        self.request_count = 0
        self._httpd = None
        self._thread = None

    # ---- payload builders -------------------------------------------------

    def country_rows(self) -> list[dict]:
        seen = {}
        for frame in self.datasets.values():
            for _, r in frame.drop_duplicates("iso3c").iterrows():
                seen[r["iso3c"]] = {
                    "id": r["iso3c"],
                    "iso2Code": r["iso2c"],
                    "name": r["country"],
                    "region": {"id": "", "iso2code": "", "value": r["region"]},
                    "adminregion": {"id": "", "iso2code": "", "value": ""},
                    "incomeLevel": {"id": "", "iso2code": "", "value": r["income"]},
                    "lendingType": {"id": "", "iso2code": "", "value": r["lending"]},
                    "capitalCity": r["capital"],
                    "longitude": r["longitude"],
                    "latitude": r["latitude"],
                }
        return list(seen.values())

    def indicator_rows(self, code: str) -> list[dict]:
        frame = self.datasets[code]
        value_col = frame.columns[4]
        out = []
        for _, r in frame.iterrows():
            value = r[value_col]
            out.append(
                {
                    "indicator": {"id": code, "value": "mock indicator"},
                    "country": {"id": r["iso2c"], "value": r["country"]},
                    "countryiso3code": r["iso3c"],
                    "date": str(r["year"]),
                    "value": None if pd.isna(value) else float(value),
                    "unit": "",
                    "obs_status": r["status"],
                    "decimal": 1,
                }
            )
        return out

    # ---- HTTP plumbing ----------------------------------------------------

    def start(self) -> str:
        server = self

        class Handler(BaseHTTPRequestHandler):
            def log_message(self, *args):  # noqa: N802 - silence test output
                pass

            def do_GET(self):  # noqa: N802
                server.request_count += 1
                if server.fail_requests > 0:
                    server.fail_requests -= 1
                    self.connection.close()
                    return
                parsed = urlparse(self.path)
                qs = parse_qs(parsed.query)
                page = int(qs.get("page", ["1"])[0])
                per_page = int(qs.get("per_page", ["50"])[0])
                if server.per_page_cap:
                    per_page = min(per_page, server.per_page_cap)

                parts = [p for p in parsed.path.split("/") if p]
                rows, error = None, None
                if parts == ["v2", "country"]:
                    rows = server.country_rows()
                elif len(parts) == 5 and parts[:4] == ["v2", "country", "all", "indicator"]:
                    code = parts[4]
                    if code in server.datasets:
                        rows = server.indicator_rows(code)
                    else:
                        error = [{"message": [{"id": "120", "key": "Invalid value",
                                               "value": f"indicator {code} not found"}]}]
                elif parts == ["v2", "indicator"]:
                    q = qs.get("q", [""])[0].lower()
                    rows = [
                        {"id": code, "name": name}
                        for code, name in server.search_rows
                        if q in name.lower() or q in code.lower()
                    ]
                else:
                    error = [{"message": [{"id": "120", "key": "Invalid value",
                                           "value": "bad path"}]}]

                if error is not None:
                    body = json.dumps(error).encode()
                else:
                    total = len(rows)
                    pages = max(1, -(-total // per_page))
                    chunk = rows[(page - 1) * per_page : page * per_page]
                    header = {
                        "page": page,
                        "pages": pages,
                        "per_page": per_page,
                        "total": total,
                        "sourceid": "2",
                        "lastupdated": "2025-07-01",
                    }
                    body = json.dumps([header, chunk]).encode()
                self.send_response(200)
                self.send_header("Content-Type", "application/json")
                self.send_header("Content-Length", str(len(body)))
                self.end_headers()
                self.wfile.write(body)

        self._httpd = ThreadingHTTPServer(("127.0.0.1", 0), Handler)
        self._thread = threading.Thread(target=self._httpd.serve_forever, daemon=True)
        self._thread.start()
        host, port = self._httpd.server_address
        return f"http://{host}:{port}/v2"

    def stop(self):
        if self._httpd:
            self._httpd.shutdown()
            self._httpd.server_close()


@pytest.fixture
def mock_server():
    servers = []

    def start(datasets, **kwargs):
        if isinstance(next(iter(datasets.values())), IndicatorDataset):
            datasets = {k: v.frame for k, v in datasets.items()}
        srv = MockWdiServer(datasets, **kwargs)
        url = srv.start()
        servers.append(srv)
        return srv, url

    yield start
    for srv in servers:
        srv.stop()


@pytest.fixture
def small_dataset() -> IndicatorDataset:
    """3 countries x 5 years, fully observed."""
    years = [2000, 2001, 2002, 2003, 2004]
    return make_dataset(
        {
            "Alpha": [1.0, 2.0, 3.0, 4.0, 5.0],
            "Beta": [2.5, 2.0, 3.5, 1.0, 4.0],
            "Gamma": [10.0, 11.0, 9.5, 10.5, 10.0],
        },
        years,
    )


def rng(seed: int = 0) -> np.random.Generator:
    return np.random.default_rng(seed)
