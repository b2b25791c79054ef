"""Command-line workflow driver.

Subcommands: fetch, validate, diagnose, highlights, export-plots, serve.
Exit codes: 0 success, 1 user error, 2 I/O or network failure.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import pipeline
from .client import IndicatorRequest, WdiClient
from .config import load_config_file, resolve
from .errors import (
    CacheCorrupt,
    DataDirMissing,
    EmptyGroup,
    EmptyPanel,
    NetworkFailure,
    PanelscopeError,
    PortInUse,
    SchemaMismatch,
    UnknownGroupVar,
    UnknownIndicator,
    UnknownMetric,
    UnknownPlot,
)
from .indices import METRICS, records_to_frame

USER_ERRORS = (
    UnknownIndicator,
    UnknownMetric,
    UnknownGroupVar,
    UnknownPlot,
    EmptyGroup,
    EmptyPanel,
    SchemaMismatch,
    ValueError,
)
IO_ERRORS = (NetworkFailure, CacheCorrupt, DataDirMissing, PortInUse, OSError)


def _fail(exc: Exception) -> "click.exceptions.Exit":
    click.echo(f"error: {exc}", err=True)
    code = 1 if isinstance(exc, USER_ERRORS) else 2
    return click.exceptions.Exit(code)


def _client(data_dir: str | None, config_path: str | None) -> WdiClient:
    config = load_config_file(config_path)
    resolved = resolve("data_dir", data_dir, "wdi_data", config)
    base_url = resolve("base_url", None, None, config)
    kwargs = {"base_url": base_url} if base_url else {}
    return WdiClient(data_dir=resolved, **kwargs)


data_dir_option = click.option("--data-dir", default=None, help="cache directory")
config_option = click.option("--config", "config_path", default=None, help="config file path")
group_var_option = click.option(
    "--group-var", default=None, type=click.Choice(["region", "income", "lending"]),
    help="grouping variable",
)


@click.group()
def main():
    """Panel-data diagnostics for country-level indicator series."""


@main.command()
@click.argument("indicator_code")
@click.option("--refresh", is_flag=True, help="bypass the cache and refetch")
@data_dir_option
@config_option
def fetch(indicator_code, refresh, data_dir, config_path):
    """Download an indicator and store it in the local cache."""
    client = _client(data_dir, config_path)
    cached_before = client.cache_path(indicator_code).exists() and not refresh
    try:
        dataset = client.fetch_indicator(IndicatorRequest(indicator_code, refresh=refresh))
    except PanelscopeError as exc:
        raise _fail(exc)
    except ValueError as exc:
        raise _fail(exc)
    rows, cols = dataset.frame.shape
    source = "cache hit" if cached_before else "fetched"
    click.echo(f"{source}: {rows:,} rows x {cols} cols -> {client.cache_path(indicator_code)}")


@main.command()
@click.argument("indicator_code")
@data_dir_option
@config_option
def validate(indicator_code, data_dir, config_path):
    """Report countries and years excluded for having no data at all."""
    client = _client(data_dir, config_path)
    try:
        dataset = client.fetch_indicator(indicator_code)
        from .panel import get_valid_data

        panel, report = get_valid_data(dataset)
    except PanelscopeError as exc:
        raise _fail(exc)
    click.echo(report.describe())
    click.echo(
        f"\nRetained {report.retained_country_count} countries x "
        f"{report.retained_year_count} years."
    )


@main.command()
@click.argument("indicator_code")
@group_var_option
@click.option("--out", "fmt", default="csv", type=click.Choice(["csv", "json"]))
@click.option("--output", "-o", default=None, help="output file path")
@data_dir_option
@config_option
def diagnose(indicator_code, group_var, fmt, output, data_dir, config_path):
    """Compute the ten diagnostic indices for every retained country."""
    client = _client(data_dir, config_path)
    try:
        dataset = client.fetch_indicator(indicator_code)
        run = pipeline.run_diagnostics(dataset, group_var)
    except PanelscopeError as exc:
        raise _fail(exc)
    click.echo(run.report.describe(), err=True)
    out_path = Path(output) if output else Path(f"{indicator_code}.diagnostics.{fmt}")
    if fmt == "csv":
        records_to_frame(run.records).to_csv(out_path, index=False, lineterminator="\n")
    else:
        payload = pipeline.records_payload(run.records, group_var)
        out_path.write_text(json.dumps(payload, indent=2, allow_nan=False) + "\n")
    click.echo(f"wrote {len(run.records)} records -> {out_path}")


@main.command()
@click.argument("indicator_code")
@click.option("--metric", required=True, type=click.Choice(list(METRICS)))
@click.option("--percentile", default=0.95, type=click.FloatRange(0, 1, min_open=True, max_open=True))
@group_var_option
@click.option("--absolute", is_flag=True, help="rank by absolute value")
@click.option("--output", "-o", default=None, help="output file path")
@data_dir_option
@config_option
def highlights(indicator_code, metric, percentile, group_var, absolute, output,
               data_dir, config_path):
    """Countries whose metric value strictly exceeds a quantile threshold."""
    client = _client(data_dir, config_path)
    try:
        dataset = client.fetch_indicator(indicator_code)
        run = pipeline.run_diagnostics(dataset, group_var)
        hs = pipeline.compute_highlights(run.records, metric, percentile, group_var, absolute)
    except PanelscopeError as exc:
        raise _fail(exc)
    payload = pipeline.highlights_payload(hs)
    text = json.dumps(payload, indent=2, allow_nan=False)
    if output:
        Path(output).write_text(text + "\n")
        click.echo(f"wrote highlight set -> {output}")
    else:
        click.echo(text)


@main.command("export-plots")
@click.argument("indicator_code")
@click.option("--plot", "kind", required=True,
              type=click.Choice(["distribution", "partition", "missingness"]))
@group_var_option
@click.option("--metric", default=None, type=click.Choice(list(METRICS)))
@click.option("--output", "-o", default=None, help="output file path (.svg)")
@data_dir_option
@config_option
def export_plots(indicator_code, kind, group_var, metric, output, data_dir, config_path):
    """Write a static vector-graphics plot file."""
    from .plots import export_plot

    client = _client(data_dir, config_path)
    gv = group_var or "region"
    try:
        dataset = client.fetch_indicator(indicator_code)
        records = None
        if kind in ("distribution", "partition"):
            records = pipeline.run_diagnostics(dataset, gv).records
        out_path = Path(output) if output else Path(f"{indicator_code}.{kind}.svg")
        export_plot(kind, out_path, records=records, dataset=dataset,
                    group_var=gv, metric=metric)
    except PanelscopeError as exc:
        raise _fail(exc)
    click.echo(f"wrote {kind} plot -> {out_path}")


@main.command()
@click.option("--port", default=None, type=int, help="listen port")
@click.option("--host", default="127.0.0.1", help="bind address")
@click.option("--cors-origin", default="*", help="allowed browser origin")
@data_dir_option
@config_option
def serve(port, host, cors_origin, data_dir, config_path):
    """Serve the read-only JSON API over the local cache."""
    import uvicorn

    from .service import create_app

    config = load_config_file(config_path)
    resolved_dir = resolve("data_dir", data_dir, "wdi_data", config)
    resolved_port = int(resolve("port", port, 8000, config))
    try:
        app = create_app(resolved_dir, cors_origin=cors_origin)
        uvicorn.run(app, host=host, port=resolved_port, log_level="warning")
    except DataDirMissing as exc:
        raise _fail(exc)
    except OSError as exc:
        raise _fail(PortInUse(f"cannot bind port {resolved_port}: {exc}"))


if __name__ == "__main__":
    main()
