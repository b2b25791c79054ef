"""Read-only JSON HTTP API over locally cached indicator data.

Every endpoint wraps its body in the same envelope:

    {"indicator_code": ..., "generated_at": ..., "payload_kind": ..., "payload": ...}

Diagnostics are memoized per (code, grouping); nothing here ever writes to
the cache directory.
"""

from __future__ import annotations

import threading
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware

from . import pipeline
from .client import WdiClient
from .errors import (
    CacheCorrupt,
    DataDirMissing,
    EmptyGroup,
    EmptyPanel,
    PanelscopeError,
    UnknownGroupVar,
    UnknownMetric,
)
from .indices import METRICS
from .panel import GROUP_VARS, IndicatorDataset

API_PREFIX = "/api/v1"

_stamp_lock = threading.Lock()
_last_stamp = [""]


def _generated_at() -> str:
    """ISO timestamp, strictly monotone within the process."""
    with _stamp_lock:
        now = datetime.now(timezone.utc).isoformat(timespec="microseconds")
        if now <= _last_stamp[0]:
            now = _last_stamp[0] + "0"
        _last_stamp[0] = now
        return now


def envelope(code: str, kind: str, payload) -> dict:
    return {
        "indicator_code": code,
        "generated_at": _generated_at(),
        "payload_kind": kind,
        "payload": payload,
    }


class ServiceState:
    """Cached datasets and memoized diagnostics runs."""

    def __init__(self, data_dir: Path):
        self.client = WdiClient(data_dir=data_dir)
        self._datasets: dict[str, IndicatorDataset] = {}
        self._runs: dict[tuple[str, str | None], pipeline.DiagnosticsRun] = {}
        self._lock = threading.Lock()

    def dataset(self, code: str) -> IndicatorDataset:
        with self._lock:
            if code in self._datasets:
                return self._datasets[code]
        if not self.client.cache_path(code).exists():
            raise HTTPException(status_code=404, detail=f"no cached data for {code!r}")
        try:
            ds = self.client.read_cache(code)
        except CacheCorrupt as exc:
            raise HTTPException(status_code=500, detail=str(exc)) from exc
        with self._lock:
            self._datasets[code] = ds
        return ds

    def run(self, code: str, group_var: str | None) -> pipeline.DiagnosticsRun:
        key = (code, group_var)
        with self._lock:
            if key in self._runs:
                return self._runs[key]
        result = pipeline.run_diagnostics(self.dataset(code), group_var)
        with self._lock:
            self._runs.setdefault(key, result)
            return self._runs[key]


def _check_group(group: str | None) -> str | None:
    if group is not None and group not in GROUP_VARS:
        raise HTTPException(
            status_code=400, detail=f"group must be one of {GROUP_VARS}"
        )
    return group


def create_app(data_dir: str | Path, cors_origin: str = "*") -> FastAPI:
    data_dir = Path(data_dir)
    if not data_dir.is_dir():
        raise DataDirMissing(f"data directory {data_dir} does not exist")
    state = ServiceState(data_dir)
    app = FastAPI(title="panelscope", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[cors_origin] if cors_origin != "*" else ["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    @app.get(API_PREFIX + "/indicators/{code}/series")
    def series(code: str, group: str | None = Query(default=None)):
        _check_group(group)
        try:
            run = state.run(code, group or "region")
        except EmptyPanel:
            return envelope(code, "series", {"years": [], "countries": []})
        payload = pipeline.series_payload(state.dataset(code), run.panel)
        return envelope(code, "series", payload)

    @app.get(API_PREFIX + "/indicators/{code}/diagnostics")
    def diagnostics(
        code: str,
        group: str | None = Query(default=None),
        metrics: str | None = Query(default=None),
    ):
        _check_group(group)
        try:
            run = state.run(code, group)
        except EmptyPanel:
            return envelope(code, "diagnostics", {"metrics": list(METRICS), "records": [], "normalized": {}})
        payload = pipeline.records_payload(run.records, group)
        if metrics:
            wanted = [m.strip() for m in metrics.split(",") if m.strip()]
            bad = [m for m in wanted if m not in METRICS]
            if bad:
                raise HTTPException(status_code=400, detail=f"unknown metrics {bad}")
            payload["metrics"] = wanted
            for row in payload["records"]:
                row["metrics"] = {m: row["metrics"][m] for m in wanted}
            for table in payload["normalized"].values():
                for country in table:
                    table[country] = {m: table[country][m] for m in wanted}
        return envelope(code, "diagnostics", payload)

    @app.get(API_PREFIX + "/indicators/{code}/missingness")
    def missingness(code: str, group: str = Query(default="region")):
        _check_group(group)
        try:
            payload = pipeline.missingness_payload(state.dataset(code), group)
        except UnknownGroupVar as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return envelope(code, "missingness", payload)

    @app.get(API_PREFIX + "/indicators/{code}/highlights")
    def highlights(
        code: str,
        metric: str = Query(...),
        percentile: float = Query(default=0.95, gt=0.0, lt=1.0),
        group: str | None = Query(default=None),
        absolute: bool = Query(default=False),
    ):
        _check_group(group)
        try:
            run = state.run(code, group)
            hs = pipeline.compute_highlights(run.records, metric, percentile, group, absolute)
        except (UnknownMetric, EmptyGroup) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        except EmptyPanel:
            return envelope(code, "highlights", {
                "metric": metric, "percentile": percentile,
                "scope": "global" if group is None else group,
                "absolute": absolute, "thresholds": {}, "highlighted": [],
            })
        return envelope(code, "highlights", pipeline.highlights_payload(hs))

    @app.get(API_PREFIX + "/indicators/{code}/groups")
    def groups(code: str):
        try:
            payload = pipeline.groups_payload(state.dataset(code))
        except PanelscopeError as exc:
            raise HTTPException(status_code=500, detail=str(exc)) from exc
        return envelope(code, "groups", payload)

    return app
