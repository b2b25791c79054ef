// Static-layout views with hover labels: distribution dot panels,
// partition bars over group-average underlays, and the missingness grid.

import * as d3 from "d3";

import type { DiagnosticsPayload, MissingnessPayload } from "../api";
import { groupColorScale } from "../colors";
import { formatMetricValue, tooltipText } from "../format";
import { hideTooltip, showTooltip } from "../tooltip";
import type { ViewState } from "../state";
import { clear, makeSvg, stableJitter } from "./common";

export function renderDistribution(
  container: HTMLElement,
  diagnostics: DiagnosticsPayload,
  state: ViewState,
): void {
  clear(container);
  if (!diagnostics.records.length) {
    const empty = container.ownerDocument.createElement("div");
    empty.className = "empty-state";
    empty.textContent = "No diagnostics to display.";
    container.appendChild(empty);
    return;
  }
  const colourVar = state.groupVar ?? "region";
  const colour = groupColorScale(
    diagnostics.records.map((r) => r.labels[colourVar] ?? r.group),
  );
  const width = 430;
  const height = 120;

  for (const metric of diagnostics.metrics) {
    const values = diagnostics.records
      .map((r) => r.metrics[metric])
      .filter((v): v is number => v !== null);
    const panel = container.ownerDocument.createElement("div");
    panel.className = "distribution-panel";
    panel.dataset.metric = metric;
    container.appendChild(panel);
    const title = container.ownerDocument.createElement("h4");
    title.textContent = metric;
    panel.appendChild(title);
    if (!values.length) continue;

    const lo = Math.min(...values);
    const hi = Math.max(...values);
    const x = d3
      .scaleLinear()
      .domain(lo === hi ? [lo - 1, hi + 1] : [lo, hi])
      .range([14, width - 14]);
    const svg = makeSvg(panel, { width, height });
    for (const rec of diagnostics.records) {
      const v = rec.metrics[metric];
      if (v === null) continue;
      const dot = svg
        .append("circle")
        .attr("class", "dot")
        .attr("cx", x(v))
        .attr("cy", 18 + stableJitter(rec.country + metric) * (height - 36))
        .attr("r", 3)
        .attr("fill", colour(rec.labels[colourVar] ?? rec.group))
        .attr("data-country", rec.country)
        .attr("data-metric", metric)
        .attr("data-raw", String(v));
      dot.on("mouseover", (event: MouseEvent) => {
        showTooltip(
          container,
          tooltipText(rec.country, metric, v),
          v,
          event.clientX ?? 0,
          event.clientY ?? 0,
        );
      });
      dot.on("mouseout", () => hideTooltip(container));
    }
  }
}

export function renderPartition(
  container: HTMLElement,
  diagnostics: DiagnosticsPayload,
  state: ViewState,
): void {
  clear(container);
  const metric = state.metric ?? "sil_width";
  const colourVar = state.groupVar ?? "region";
  const colour = groupColorScale(
    diagnostics.records.map((r) => r.labels[colourVar] ?? r.group),
  );

  const groups = new Map<string, { country: string; value: number }[]>();
  for (const rec of diagnostics.records) {
    const v = rec.metrics[metric];
    if (v === null) continue;
    const level = rec.labels[colourVar] ?? rec.group;
    if (!groups.has(level)) groups.set(level, []);
    groups.get(level)!.push({ country: rec.country, value: v });
  }
  if (!groups.size) {
    const empty = container.ownerDocument.createElement("div");
    empty.className = "empty-state";
    empty.textContent = "No values for this metric.";
    container.appendChild(empty);
    return;
  }

  const all = [...groups.values()].flat().map((d) => d.value);
  const width = 880;
  const height = 360;
  const y = d3
    .scaleLinear()
    .domain([Math.min(0, Math.min(...all)), Math.max(0, Math.max(...all))])
    .range([height - 30, 16]);
  const svg = makeSvg(container, { width, height });

  const total = [...groups.values()].reduce((acc, g) => acc + g.length, 0);
  const gapCount = groups.size + 1;
  const barWidth = (width - 70 - gapCount * 10) / total;
  let xCursor = 70;

  for (const level of [...groups.keys()].sort()) {
    const members = groups.get(level)!;
    members.sort((a, b) => b.value - a.value);
    const mean = members.reduce((acc, m) => acc + m.value, 0) / members.length;
    const groupWidth = members.length * barWidth;
    svg
      .append("rect")
      .attr("class", "group-avg")
      .attr("data-group", level)
      .attr("data-raw", String(mean))
      .attr("x", xCursor)
      .attr("width", groupWidth)
      .attr("y", Math.min(y(mean), y(0)))
      .attr("height", Math.abs(y(mean) - y(0)))
      .attr("fill", colour(level))
      .attr("opacity", 0.25);

    members.forEach((m, i) => {
      const bar = svg
        .append("rect")
        .attr("class", "bar")
        .attr("data-country", m.country)
        .attr("data-raw", String(m.value))
        .attr("x", xCursor + i * barWidth + barWidth * 0.08)
        .attr("width", barWidth * 0.84)
        .attr("y", Math.min(y(m.value), y(0)))
        .attr("height", Math.abs(y(m.value) - y(0)))
        .attr("fill", colour(level));
      bar.on("mouseover", (event: MouseEvent) => {
        showTooltip(
          container,
          tooltipText(m.country, metric, m.value),
          m.value,
          event.clientX ?? 0,
          event.clientY ?? 0,
        );
      });
      bar.on("mouseout", () => hideTooltip(container));
    });
    xCursor += groupWidth + 10;
  }
}

export function renderMissingness(
  container: HTMLElement,
  payload: MissingnessPayload,
): void {
  clear(container);
  if (!payload.countries.length) {
    const empty = container.ownerDocument.createElement("div");
    empty.className = "empty-state";
    empty.textContent = "No data availability to display.";
    container.appendChild(empty);
    return;
  }
  const caption = container.ownerDocument.createElement("div");
  caption.className = "missingness-caption";
  caption.dataset.rawMissing = String(payload.overall_pct_missing);
  caption.dataset.rawPresent = String(payload.overall_pct_present);
  caption.textContent =
    `missing ${formatMetricValue(payload.overall_pct_missing)}% / ` +
    `present ${formatMetricValue(payload.overall_pct_present)}%`;
  container.appendChild(caption);

  const cell = 6;
  const width = 80 + payload.years.length * cell;
  const height = 20 + payload.countries.length * cell;
  const svg = makeSvg(container, { width, height });
  payload.countries.forEach((row, i) => {
    row.missing.forEach((isMissing, j) => {
      svg
        .append("rect")
        .attr("class", `cell ${isMissing ? "missing" : "present"}`)
        .attr("data-country", row.country)
        .attr("data-year", payload.years[j])
        .attr("x", 80 + j * cell)
        .attr("y", 10 + i * cell)
        .attr("width", cell - 0.5)
        .attr("height", cell - 0.5)
        .attr("fill", isMissing ? "#000000" : "#d9d9d9");
    });
  });
}
