// Linked scatter + trajectories: hovering a point highlights the matching
// series line (and vice versa); clicking pins the selection.  Grouped mode
// facets both panels by group level.

import * as d3 from "d3";

import type { DiagnosticsPayload, SeriesPayload } from "../api";
import { groupColorScale } from "../colors";
import { formatMetricValue, tooltipText } from "../format";
import { hideTooltip, showTooltip } from "../tooltip";
import type { ViewState } from "../state";
import { clear, facetLevels, gappedPath, makeSvg } from "./common";

export interface LinkviewData {
  series: SeriesPayload;
  diagnostics: DiagnosticsPayload;
}

const SCATTER = { width: 420, height: 320, pad: 42 };
const LINES = { width: 440, height: 320, pad: 36 };

export function renderLinkview(
  container: HTMLElement,
  data: LinkviewData,
  state: ViewState,
): void {
  clear(container);
  const pair = state.metricPair;
  const { diagnostics, series } = data;
  if (
    !pair ||
    !diagnostics.metrics.includes(pair[0]) ||
    !diagnostics.metrics.includes(pair[1])
  ) {
    const err = container.ownerDocument.createElement("div");
    err.className = "error-message";
    err.textContent = `Unknown metric pair: ${pair ? pair.join(", ") : "(none)"}`;
    container.appendChild(err);
    return;
  }
  const [mx, my] = pair;

  const colourVar = state.groupVar ?? "region";
  const colour = groupColorScale(
    diagnostics.records.map((r) => r.labels[colourVar] ?? r.group),
  );
  const facets = state.groupVar
    ? facetLevels(diagnostics.records.map((r) => r.labels[colourVar] ?? r.group))
    : ["all"];

  const related = (country: string) =>
    [...container.querySelectorAll<Element>("[data-country]")].filter(
      (el) => el.getAttribute("data-country") === country,
    );
  const linked = (country: string, on: boolean) => {
    for (const el of related(country)) el.classList.toggle("linked-hover", on);
  };
  const pinned = (country: string) => {
    const already = related(country).some((el) => el.classList.contains("pinned"));
    for (const el of related(country)) el.classList.toggle("pinned", !already);
  };

  const xs = diagnostics.records
    .map((r) => r.metrics[mx])
    .filter((v): v is number => v !== null);
  const ys = diagnostics.records
    .map((r) => r.metrics[my])
    .filter((v): v is number => v !== null);
  const xScale = d3
    .scaleLinear()
    .domain([Math.min(...xs), Math.max(...xs)])
    .range([SCATTER.pad, SCATTER.width - 12])
    .nice();
  const yScale = d3
    .scaleLinear()
    .domain([Math.min(...ys), Math.max(...ys)])
    .range([SCATTER.height - SCATTER.pad, 16])
    .nice();

  const allValues = series.countries.flatMap((c) =>
    c.values.filter((v): v is number => v !== null),
  );
  const tX = d3
    .scaleLinear()
    .domain([series.years[0], series.years[series.years.length - 1]])
    .range([LINES.pad, LINES.width - 10]);
  const tY = d3
    .scaleLinear()
    .domain([Math.min(...allValues), Math.max(...allValues)])
    .range([LINES.height - 24, 14]);

  const seriesByCountry = new Map(series.countries.map((c) => [c.country, c]));

  for (const level of facets) {
    const facetDiv = container.ownerDocument.createElement("div");
    facetDiv.className = "linkview-facet";
    facetDiv.dataset.facet = level;
    container.appendChild(facetDiv);
    if (facets.length > 1) {
      const title = container.ownerDocument.createElement("h3");
      title.textContent = level;
      facetDiv.appendChild(title);
    }

    const members =
      level === "all"
        ? diagnostics.records
        : diagnostics.records.filter(
            (r) => (r.labels[colourVar] ?? r.group) === level,
          );

    const scatter = makeSvg(facetDiv, { width: SCATTER.width, height: SCATTER.height });
    scatter.attr("class", "scatter-panel");
    const lines = makeSvg(facetDiv, { width: LINES.width, height: LINES.height });
    lines.attr("class", "lines-panel");

    for (const rec of members) {
      const vx = rec.metrics[mx];
      const vy = rec.metrics[my];
      const stroke = colour(rec.labels[colourVar] ?? rec.group);
      if (vx !== null && vy !== null) {
        const point = scatter
          .append("circle")
          .attr("class", "scatter-point")
          .attr("cx", xScale(vx))
          .attr("cy", yScale(vy))
          .attr("r", 3.2)
          .attr("fill", stroke)
          .attr("data-country", rec.country)
          .attr("data-x", String(vx))
          .attr("data-y", String(vy));
        point.on("mouseover", (event: MouseEvent) => {
          linked(rec.country, true);
          showTooltip(
            container,
            `${tooltipText(rec.country, mx, vx)}; ${my}: ${formatMetricValue(vy)}`,
            vx,
            event.clientX ?? 0,
            event.clientY ?? 0,
          );
        });
        point.on("mouseout", () => {
          linked(rec.country, false);
          hideTooltip(container);
        });
        point.on("click", () => pinned(rec.country));
      }

      const c = seriesByCountry.get(rec.country);
      if (c) {
        const pts = c.values.map((v, i) =>
          v === null ? null : ([tX(series.years[i]), tY(v)] as [number, number]),
        );
        const path = lines
          .append("path")
          .attr("class", "series-line")
          .attr("fill", "none")
          .attr("stroke", stroke)
          .attr("data-country", rec.country)
          .attr("d", gappedPath(pts));
        path.on("mouseover", (event: MouseEvent) => {
          linked(rec.country, true);
          showTooltip(container, rec.country, null, event.clientX ?? 0, event.clientY ?? 0);
        });
        path.on("mouseout", () => {
          linked(rec.country, false);
          hideTooltip(container);
        });
        path.on("click", () => pinned(rec.country));
      }
    }
  }
}
