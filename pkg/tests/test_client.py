"""API client behaviour against a local mock of the v2 JSON endpoints."""

import json

import pandas as pd
import pytest

from panelscope.client import IndicatorRequest, WdiClient
from panelscope.errors import CacheCorrupt, NetworkFailure, UnknownIndicator

from conftest import DATA_DIR, PM_CODE


def make_client(url, tmp_path, **kwargs):
    kwargs.setdefault("retries", 1)
    kwargs.setdefault("backoff", 0.01)
    return WdiClient(data_dir=tmp_path / "wdi_data", base_url=url, **kwargs)


class TestIndicatorRequest:
    def test_valid_code(self):
        req = IndicatorRequest("EN.ATM.PM25.MC.M3")
        assert not req.refresh

    @pytest.mark.parametrize("bad", ["", "lower.case", "WITH SPACE", "SEMI;COLON"])
    def test_invalid_codes(self, bad):
        with pytest.raises(ValueError):
            IndicatorRequest(bad)


class TestFetchIndicator:
    def test_small_fixture_roundtrip(self, mock_server, small_dataset, tmp_path):
        srv, url = mock_server({small_dataset.indicator_code: small_dataset})
        client = make_client(url, tmp_path)
        ds = client.fetch_indicator(small_dataset.indicator_code)
        assert ds.frame.shape == (15, 13)
        golden = small_dataset.frame.sort_values(["country", "year"]).reset_index(drop=True)
        pd.testing.assert_frame_equal(ds.frame, golden)

    def test_snapshot_dimensions_via_mock(self, mock_server, pm_dataset, tmp_path):
        srv, url = mock_server({PM_CODE: pm_dataset})
        client = make_client(url, tmp_path, per_page=4000)
        ds = client.fetch_indicator(PM_CODE)
        assert ds.frame.shape == (13910, 13)
        assert ds.frame["lastupdated"].iloc[0] == "2025-07-01"

    def test_warm_cache_identical_and_offline(self, mock_server, small_dataset, tmp_path):
        code = small_dataset.indicator_code
        srv, url = mock_server({code: small_dataset})
        client = make_client(url, tmp_path)
        first = client.fetch_indicator(code)
        seen = srv.request_count
        second = client.fetch_indicator(IndicatorRequest(code, refresh=False))
        assert srv.request_count == seen  # no network traffic on a warm cache
        pd.testing.assert_frame_equal(first.frame, second.frame)

    def test_refresh_bypasses_cache(self, mock_server, small_dataset, tmp_path):
        code = small_dataset.indicator_code
        srv, url = mock_server({code: small_dataset})
        client = make_client(url, tmp_path)
        client.fetch_indicator(code)
        seen = srv.request_count
        client.fetch_indicator(IndicatorRequest(code, refresh=True))
        assert srv.request_count > seen

    def test_pagination_completeness(self, mock_server, pm_dataset, tmp_path):
        srv, url = mock_server({PM_CODE: pm_dataset}, per_page_cap=977)
        client = make_client(url, tmp_path, per_page=977)
        ds = client.fetch_indicator(PM_CODE)
        assert len(ds.frame) == 13910  # equals the server-declared total

    def test_fields_preserved_verbatim(self, mock_server, small_dataset, tmp_path):
        frame = small_dataset.frame.copy()
        frame.loc[frame["country"] == "Alpha", "capital"] = "  Padded City  "
        padded = type(small_dataset)(frame, small_dataset.indicator_code)
        srv, url = mock_server({padded.indicator_code: padded})
        client = make_client(url, tmp_path)
        ds = client.fetch_indicator(padded.indicator_code)
        assert (ds.frame.loc[ds.frame["country"] == "Alpha", "capital"]
                == "  Padded City  ").all()
        # and the cache round-trips it byte-for-byte
        again = client.read_cache(padded.indicator_code)
        pd.testing.assert_frame_equal(ds.frame, again.frame)

    def test_unknown_indicator(self, mock_server, small_dataset, tmp_path):
        srv, url = mock_server({small_dataset.indicator_code: small_dataset})
        client = make_client(url, tmp_path)
        with pytest.raises(UnknownIndicator):
            client.fetch_indicator("NO.SUCH.CODE")

    def test_network_failure_without_cache(self, mock_server, small_dataset, tmp_path):
        srv, url = mock_server(
            {small_dataset.indicator_code: small_dataset}, fail_requests=10
        )
        client = make_client(url, tmp_path)
        with pytest.raises(NetworkFailure):
            client.fetch_indicator(small_dataset.indicator_code)

    def test_network_failure_falls_back_to_cache(self, mock_server, small_dataset, tmp_path):
        code = small_dataset.indicator_code
        srv, url = mock_server({code: small_dataset})
        client = make_client(url, tmp_path)
        first = client.fetch_indicator(code)
        srv.fail_requests = 10**6
        fallback = client.fetch_indicator(IndicatorRequest(code, refresh=True))
        pd.testing.assert_frame_equal(first.frame, fallback.frame)

    def test_retries_recover_from_transient_failures(self, mock_server, small_dataset, tmp_path):
        code = small_dataset.indicator_code
        srv, url = mock_server({code: small_dataset}, fail_requests=1)
        client = make_client(url, tmp_path, retries=3)
        ds = client.fetch_indicator(code)
        assert len(ds.frame) == 15


class TestSearchIndicators:
    SEARCH_ROWS = [
        ("EN.ATM.PM25.MC.M3", "PM2.5 air pollution, mean annual exposure"),
        ("EN.ATM.PM25.MC.ZS", "PM2.5 air pollution, population exposed"),
        ("NY.GDP.MKTP.CD", "GDP (current US$)"),
    ]

    def test_keyword_match(self, mock_server, small_dataset, tmp_path):
        srv, url = mock_server(
            {small_dataset.indicator_code: small_dataset}, search_rows=self.SEARCH_ROWS
        )
        client = make_client(url, tmp_path)
        results = client.search_indicators("air pollution")
        codes = [c for c, _ in results]
        assert "EN.ATM.PM25.MC.M3" in codes
        assert len(results) == 2

    def test_no_match_is_empty(self, mock_server, small_dataset, tmp_path):
        srv, url = mock_server(
            {small_dataset.indicator_code: small_dataset}, search_rows=self.SEARCH_ROWS
        )
        client = make_client(url, tmp_path)
        assert client.search_indicators("zzzz-no-such-term") == []

    def test_empty_keyword_rejected(self, mock_server, small_dataset, tmp_path):
        srv, url = mock_server({small_dataset.indicator_code: small_dataset})
        client = make_client(url, tmp_path)
        with pytest.raises(ValueError):
            client.search_indicators("")


class TestCache:
    def test_snapshot_cache_loads(self):
        ds = WdiClient(data_dir=DATA_DIR).read_cache(PM_CODE)
        assert ds.frame.shape == (13910, 13)
        assert ds.indicator_code == PM_CODE

    def test_write_then_read_equals(self, small_dataset, tmp_path):
        client = WdiClient(data_dir=tmp_path)
        client.write_cache(small_dataset)
        back = client.read_cache(small_dataset.indicator_code)
        pd.testing.assert_frame_equal(small_dataset.frame, back.frame)

    def test_meta_sidecar_contents(self, small_dataset, tmp_path):
        client = WdiClient(data_dir=tmp_path)
        client.write_cache(small_dataset)
        meta = json.loads(client.meta_path(small_dataset.indicator_code).read_text())
        assert meta["indicator_code"] == small_dataset.indicator_code
        assert meta["row_count"] == 15
        assert "fetched_at" in meta

    def test_corrupt_cache_detected(self, small_dataset, tmp_path):
        client = WdiClient(data_dir=tmp_path)
        path = client.write_cache(small_dataset)
        lines = path.read_text().splitlines()
        path.write_text("\n".join([lines[0].replace("income", "riches")] + lines[1:]))
        with pytest.raises(CacheCorrupt):
            client.read_cache(small_dataset.indicator_code)

    def test_row_count_mismatch_detected(self, small_dataset, tmp_path):
        client = WdiClient(data_dir=tmp_path)
        path = client.write_cache(small_dataset)
        lines = path.read_text().splitlines()
        path.write_text("\n".join(lines[:-1]) + "\n")
        with pytest.raises(CacheCorrupt):
            client.read_cache(small_dataset.indicator_code)

    def test_concurrent_writes_leave_cache_valid(self, small_dataset, tmp_path):
        import threading

        client = WdiClient(data_dir=tmp_path)
        threads = [
            threading.Thread(target=client.write_cache, args=(small_dataset,))
            for _ in range(8)
        ]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        back = client.read_cache(small_dataset.indicator_code)
        pd.testing.assert_frame_equal(small_dataset.frame, back.frame)


class TestNormalization:
    def test_duplicate_rows_deduplicated(self, mock_server, small_dataset, tmp_path):
        # serve a raw frame with a repeated (country, year) row
        frame = pd.concat(
            [small_dataset.frame, small_dataset.frame.iloc[[0]]], ignore_index=True
        )
        srv, url = mock_server({small_dataset.indicator_code: frame})
        client = make_client(url, tmp_path)
        ds = client.fetch_indicator(small_dataset.indicator_code)
        assert len(ds.frame) == 15
        assert not ds.frame.duplicated(["country", "year"]).any()
