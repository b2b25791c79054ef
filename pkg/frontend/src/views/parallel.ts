// Parallel coordinates over the ten diagnostic indices.  Axis positions
// come from the server's [0,1] normalization (per group level in grouped
// mode): the view never rescales numbers itself.  Missing values break
// the polyline into gaps rather than dropping to zero.

import type { DiagnosticsPayload, NormalizedTable } from "../api";
import { groupColorScale } from "../colors";
import { tooltipText } from "../format";
import { hideTooltip, showTooltip } from "../tooltip";
import type { ViewState } from "../state";
import { MARGIN, clear, facetLevels, gappedPath, makeSvg } from "./common";

const AXIS_TOP = 36;
const AXIS_BOTTOM = 28;

export function renderParallel(
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
  const grouped = state.groupVar !== null && diagnostics.normalized.by_group;
  const table: NormalizedTable = grouped
    ? (diagnostics.normalized.by_group as NormalizedTable)
    : diagnostics.normalized.global;

  const facets = grouped
    ? facetLevels(diagnostics.records.map((r) => r.labels[colourVar] ?? r.group))
    : ["all"];

  const metrics = diagnostics.metrics;
  const width = 880;

  for (const level of facets) {
    const height = facets.length > 1 ? 240 : 420;
    const svg = makeSvg(container, { width, height });
    svg.attr("data-facet", level);
    const xStep = (width - MARGIN.left - MARGIN.right) / Math.max(1, metrics.length - 1);
    const yTop = AXIS_TOP;
    const yBottom = height - AXIS_BOTTOM;
    const yFor = (norm: number) => yBottom - norm * (yBottom - yTop);

    metrics.forEach((metric, i) => {
      const xPos = MARGIN.left + i * xStep;
      svg
        .append("line")
        .attr("class", "axis")
        .attr("data-metric", metric)
        .attr("x1", xPos)
        .attr("x2", xPos)
        .attr("y1", yTop)
        .attr("y2", yBottom);
      svg
        .append("text")
        .attr("class", "axis-label")
        .attr("x", xPos)
        .attr("y", yTop - 8)
        .attr("text-anchor", "middle")
        .text(metric);
    });

    const members =
      level === "all"
        ? diagnostics.records
        : diagnostics.records.filter(
            (r) => (r.labels[colourVar] ?? r.group) === level,
          );

    for (const rec of members) {
      const norms = table[rec.country] ?? {};
      const points = metrics.map((metric, i) => {
        const n = norms[metric];
        if (n === null || n === undefined) return null;
        return [MARGIN.left + i * xStep, yFor(n)] as [number, number];
      });
      const stroke = colour(rec.labels[colourVar] ?? rec.group);
      const path = svg
        .append("path")
        .attr("class", "parallel-line")
        .attr("fill", "none")
        .attr("stroke", stroke)
        .attr("data-country", rec.country)
        .attr("d", gappedPath(points));
      path.on("mouseover", (event: MouseEvent) => {
        path.classed("hovered", true);
        showTooltip(container, rec.country, null, event.clientX ?? 0, event.clientY ?? 0);
      });
      path.on("mouseout", () => {
        path.classed("hovered", false);
        hideTooltip(container);
      });

      metrics.forEach((metric, i) => {
        const n = norms[metric];
        if (n === null || n === undefined) return;
        const raw = rec.metrics[metric];
        const vertex = svg
          .append("circle")
          .attr("class", "parallel-vertex")
          .attr("cx", MARGIN.left + i * xStep)
          .attr("cy", yFor(n))
          .attr("r", 2.4)
          .attr("fill", stroke)
          .attr("data-country", rec.country)
          .attr("data-metric", metric)
          .attr("data-norm", String(n))
          .attr("data-raw", raw === null ? "" : String(raw));
        vertex.on("mouseover", (event: MouseEvent) => {
          showTooltip(
            container,
            tooltipText(rec.country, metric, raw),
            raw,
            event.clientX ?? 0,
            event.clientY ?? 0,
          );
        });
        vertex.on("mouseout", () => hideTooltip(container));
      });
    }
  }
}
