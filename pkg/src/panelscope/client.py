"""World Bank open-data API client with a local CSV cache.

Fetches one indicator at a time from the v2 JSON API (explicit per_page
pagination, followed until the declared page count is exhausted), joins the
country metadata needed for the 13-column layout, and stores the result
under the data directory as `<code>.csv` plus a `<code>.meta.json` sidecar.
Aggregate entities are kept at ingestion; the panel layer filters them.
"""

from __future__ import annotations

import json
import logging
import re
import threading
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

import pandas as pd
import requests

from .errors import CacheCorrupt, NetworkFailure, UnknownIndicator
from .panel import IndicatorDataset, schema_columns

log = logging.getLogger(__name__)

DEFAULT_BASE_URL = "https://api.worldbank.org/v2"
DEFAULT_DATA_DIR = "wdi_data"
CODE_PATTERN = re.compile(r"^[A-Z0-9._]+$")

# one lock per cache file so concurrent fetches of the same code serialize
_write_locks: dict[str, threading.Lock] = {}
_write_locks_guard = threading.Lock()


def _lock_for(path: Path) -> threading.Lock:
    key = str(path)
    with _write_locks_guard:
        return _write_locks.setdefault(key, threading.Lock())


@dataclass(frozen=True)
class IndicatorRequest:
    indicator_code: str
    refresh: bool = False

    def __post_init__(self):
        if not self.indicator_code or not CODE_PATTERN.match(self.indicator_code):
            raise ValueError(
                f"indicator code must match [A-Z0-9._]+, got {self.indicator_code!r}"
            )


class WdiClient:
    """HTTP client for indicator data with transparent file caching."""

    def __init__(
        self,
        data_dir: str | Path = DEFAULT_DATA_DIR,
        base_url: str = DEFAULT_BASE_URL,
        per_page: int = 1000,
        timeout: float = 30.0,
        retries: int = 3,
        backoff: float = 0.5,
        session: requests.Session | None = None,
    ):
        self.data_dir = Path(data_dir)
        self.base_url = base_url.rstrip("/")
        self.per_page = per_page
        self.timeout = timeout
        self.retries = retries
        self.backoff = backoff
        self.session = session or requests.Session()

    # --- paths ---------------------------------------------------------

    def cache_path(self, code: str) -> Path:
        return self.data_dir / f"{code}.csv"

    def meta_path(self, code: str) -> Path:
        return self.data_dir / f"{code}.meta.json"

    # --- HTTP ------------------------------------------------------------

    def _get_json(self, url: str, params: dict):
        last_exc: Exception | None = None
        for attempt in range(self.retries + 1):
            try:
                resp = self.session.get(url, params=params, timeout=self.timeout)
                resp.raise_for_status()
                return resp.json()
            except (requests.ConnectionError, requests.Timeout, requests.HTTPError) as exc:
                last_exc = exc
                if attempt < self.retries:
                    time.sleep(self.backoff * (2**attempt))
        raise NetworkFailure(f"request to {url} failed after retries: {last_exc}")

    def _paged(self, path: str, params: dict | None = None):
        """Yield data rows across pages until the declared page count."""
        params = dict(params or {})
        params.setdefault("format", "json")
        params.setdefault("per_page", self.per_page)
        page = 1
        pages = 1
        header = {}
        while page <= pages:
            params["page"] = page
            body = self._get_json(f"{self.base_url}{path}", params)
            if isinstance(body, list) and body and isinstance(body[0], dict) and "message" in body[0]:
                msg = body[0]["message"]
                raise UnknownIndicator(f"API error for {path}: {msg}")
            if not isinstance(body, list) or len(body) < 2 or body[1] is None:
                raise UnknownIndicator(f"unexpected API response shape for {path}")
            header = body[0]
            pages = int(header.get("pages", 1))
            for row in body[1]:
                yield header, row
            page += 1

    # --- fetch -----------------------------------------------------------

    def _country_metadata(self) -> dict[str, dict]:
        meta: dict[str, dict] = {}
        for _, row in self._paged("/country"):
            iso3 = row.get("id") or ""
            entry = {
                "iso2c": row.get("iso2Code") or "",
                "iso3c": iso3,
                "region": (row.get("region") or {}).get("value", "") or "",
                "capital": row.get("capitalCity") or "",
                "longitude": row.get("longitude") or "",
                "latitude": row.get("latitude") or "",
                "income": (row.get("incomeLevel") or {}).get("value", "") or "",
                "lending": (row.get("lendingType") or {}).get("value", "") or "",
            }
            if iso3:
                meta[iso3] = entry
            if entry["iso2c"]:
                meta[entry["iso2c"]] = entry
        return meta

    def _fetch_rows(self, code: str) -> pd.DataFrame:
        countries = self._country_metadata()
        records = []
        for header, row in self._paged(f"/country/all/indicator/{code}"):
            iso3 = row.get("countryiso3code") or ""
            iso2 = (row.get("country") or {}).get("id", "") or ""
            info = countries.get(iso3) or countries.get(iso2) or {}
            if not iso2 and not iso3:
                log.warning("row with no ISO codes for %r", (row.get("country") or {}).get("value"))
            records.append(
                {
                    "country": (row.get("country") or {}).get("value", "") or "",
                    "iso2c": iso2 or info.get("iso2c", ""),
                    "iso3c": iso3 or info.get("iso3c", ""),
                    "year": int(row["date"]),
                    code: row.get("value"),
                    "status": row.get("obs_status") or "",
                    "lastupdated": header.get("lastupdated", "") or "",
                    "region": info.get("region", ""),
                    "capital": info.get("capital", ""),
                    "longitude": info.get("longitude", ""),
                    "latitude": info.get("latitude", ""),
                    "income": info.get("income", ""),
                    "lending": info.get("lending", ""),
                }
            )
        frame = pd.DataFrame(records, columns=schema_columns(code))
        frame = frame.drop_duplicates(["country", "year"], keep="first")
        frame = frame.sort_values(["country", "year"]).reset_index(drop=True)
        frame[code] = frame[code].astype(float)
        return frame

    def fetch_indicator(self, req: IndicatorRequest | str) -> IndicatorDataset:
        """Return all rows for one indicator, caching them as CSV.

        A warm cache is served without network I/O unless refresh is set.
        On a transport failure a valid cache is used as fallback; with no
        usable cache the failure propagates as NetworkFailure.
        """
        if isinstance(req, str):
            req = IndicatorRequest(req)
        code = req.indicator_code
        if not req.refresh and self.cache_path(code).exists():
            return self.read_cache(code)
        try:
            frame = self._fetch_rows(code)
        except NetworkFailure:
            if self.cache_path(code).exists():
                log.warning("network failed for %s; serving cached copy", code)
                return self.read_cache(code)
            raise
        dataset = IndicatorDataset(frame, code)
        self.write_cache(dataset)
        return dataset

    def search_indicators(self, keyword: str) -> list[tuple[str, str]]:
        """Indicator (code, name) pairs matching a keyword, in API order."""
        if not keyword:
            raise ValueError("search keyword must be non-empty")
        needle = keyword.lower()
        out = []
        for _, row in self._paged("/indicator", {"q": keyword}):
            code = row.get("id", "")
            name = row.get("name", "") or ""
            if needle in name.lower() or needle in code.lower():
                out.append((code, name))
        return out

    # --- cache -----------------------------------------------------------

    def write_cache(self, dataset: IndicatorDataset) -> Path:
        code = dataset.indicator_code
        path = self.cache_path(code)
        with _lock_for(path):
            self.data_dir.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".csv.tmp")
            dataset.frame.to_csv(tmp, index=False, lineterminator="\n")
            tmp.replace(path)
            meta = {
                "indicator_code": code,
                "fetched_at": datetime.now(timezone.utc).isoformat(),
                "row_count": int(len(dataset.frame)),
            }
            self.meta_path(code).write_text(json.dumps(meta, indent=2) + "\n")
        return path

    def read_cache(self, code: str) -> IndicatorDataset:
        path = self.cache_path(code)
        try:
            frame = pd.read_csv(
                path,
                dtype={c: str for c in schema_columns(code) if c not in (code, "year")},
                keep_default_na=False,
                na_values=[],
            )
        except Exception as exc:
            raise CacheCorrupt(f"cannot parse {path}: {exc}") from exc
        if list(frame.columns) != schema_columns(code):
            raise CacheCorrupt(
                f"{path} columns {list(frame.columns)} do not match the 13-column layout"
            )
        try:
            frame["year"] = frame["year"].astype(int)
            frame[code] = pd.to_numeric(frame[code].replace("", None))
        except (TypeError, ValueError) as exc:
            raise CacheCorrupt(f"{path} has non-numeric year/value fields: {exc}") from exc
        meta_path = self.meta_path(code)
        if meta_path.exists():
            try:
                meta = json.loads(meta_path.read_text())
            except json.JSONDecodeError as exc:
                raise CacheCorrupt(f"cannot parse {meta_path}: {exc}") from exc
            if meta.get("row_count") != len(frame):
                raise CacheCorrupt(
                    f"{path} has {len(frame)} rows but sidecar declares {meta.get('row_count')}"
                )
        return IndicatorDataset(frame, code)
