// Interactive line view: all series in grey, highlighted countries drawn
// with a colour gradient over their metric values, tooltips on hover.
// With a grouping the view facets into one panel per group level.

import * as d3 from "d3";

import type {
  DiagnosticsPayload,
  HighlightsPayload,
  SeriesPayload,
} from "../api";
import { highlightGradient } from "../colors";
import { tooltipText } from "../format";
import { hideTooltip, showTooltip } from "../tooltip";
import type { ViewState } from "../state";
import { MARGIN, clear, facetLevels, gappedPath, makeSvg } from "./common";

export interface TrajectoriesData {
  series: SeriesPayload;
  diagnostics: DiagnosticsPayload | null;
  highlights: HighlightsPayload | null;
}

export function renderTrajectories(
  container: HTMLElement,
  data: TrajectoriesData,
  state: ViewState,
): void {
  clear(container);
  const { series, diagnostics, highlights } = data;
  if (!series.countries.length) {
    const empty = container.ownerDocument.createElement("div");
    empty.className = "empty-state";
    empty.textContent = "No series to display.";
    container.appendChild(empty);
    return;
  }

  const metric = highlights?.metric ?? state.metric ?? null;
  const metricValues = new Map<string, number | null>();
  if (diagnostics && metric) {
    for (const rec of diagnostics.records) {
      metricValues.set(rec.country, rec.metrics[metric] ?? null);
    }
  }
  const highlighted = new Set(highlights?.highlighted ?? []);
  const gradientInput = [...highlighted]
    .map((c) => metricValues.get(c))
    .filter((v): v is number => v !== null && v !== undefined)
    .map((v) => (highlights?.absolute ? Math.abs(v) : v));
  const gradient = highlightGradient(gradientInput);

  const facets = state.groupVar
    ? facetLevels(series.countries.map((c) => c.labels[state.groupVar as string]))
    : ["all"];

  const allValues = series.countries.flatMap((c) =>
    c.values.filter((v): v is number => v !== null),
  );
  const y = d3
    .scaleLinear()
    .domain([Math.min(...allValues), Math.max(...allValues)])
    .nice();
  const x = d3
    .scaleLinear()
    .domain([series.years[0], series.years[series.years.length - 1]]);

  for (const level of facets) {
    const panelHeight = facets.length > 1 ? 220 : 400;
    const svg = makeSvg(container, { width: 880, height: panelHeight });
    svg.attr("data-facet", level);
    x.range([MARGIN.left, 880 - MARGIN.right]);
    y.range([panelHeight - MARGIN.bottom, MARGIN.top]);

    if (facets.length > 1) {
      svg
        .append("text")
        .attr("class", "facet-title")
        .attr("x", MARGIN.left)
        .attr("y", 14)
        .text(level);
    }

    const members =
      level === "all"
        ? series.countries
        : series.countries.filter(
            (c) => c.labels[state.groupVar as string] === level,
          );

    for (const country of members) {
      const points = country.values.map((v, i) =>
        v === null ? null : ([x(series.years[i]), y(v)] as [number, number]),
      );
      const isHighlighted = highlighted.has(country.country);
      const value = metricValues.get(country.country) ?? null;
      const path = svg
        .append("path")
        .attr("class", `series-line${isHighlighted ? " highlighted" : ""}`)
        .attr("d", gappedPath(points))
        .attr("fill", "none")
        .attr("data-country", country.country)
        .attr(
          "stroke",
          isHighlighted && value !== null
            ? gradient(highlights?.absolute ? Math.abs(value) : value)
            : "#bbbbbb",
        )
        .attr("stroke-width", isHighlighted ? 2.2 : 1);
      if (value !== null) path.attr("data-raw", String(value));

      path.on("mouseover", (event: MouseEvent) => {
        path.classed("hovered", true);
        const text = metric
          ? tooltipText(country.country, metric, value)
          : country.country;
        showTooltip(container, text, value, event.clientX ?? 0, event.clientY ?? 0);
      });
      path.on("mouseout", () => {
        path.classed("hovered", false);
        hideTooltip(container);
      });
    }
  }
}
