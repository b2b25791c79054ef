// Small shared helpers for the SVG views.

import * as d3 from "d3";

export interface Size {
  width: number;
  height: number;
}

export const PANEL: Size = { width: 880, height: 400 };
export const MARGIN = { top: 24, right: 16, bottom: 28, left: 56 };

export function makeSvg(
  container: HTMLElement,
  { width, height }: Size = PANEL,
): d3.Selection<SVGSVGElement, unknown, null, undefined> {
  return d3
    .select(container)
    .append("svg")
    .attr("viewBox", `0 0 ${width} ${height}`)
    .attr("width", width)
    .attr("height", height);
}

export function clear(container: HTMLElement): void {
  container.innerHTML = "";
}

export function facetLevels(labels: (string | undefined)[]): string[] {
  return [...new Set(labels.map((l) => l ?? ""))].filter((l) => l !== "").sort();
}

/** Deterministic jitter in [0, 1) keyed by a string. */
export function stableJitter(key: string): number {
  let h = 2166136261;
  for (let i = 0; i < key.length; i += 1) {
    h ^= key.charCodeAt(i);
    h = Math.imul(h, 16777619);
  }
  return ((h >>> 0) % 1000) / 1000;
}

/** Build a path string through points, breaking at null values (gaps). */
export function gappedPath(
  points: ([number, number] | null)[],
): string {
  let d = "";
  let pen = false;
  for (const p of points) {
    if (p === null) {
      pen = false;
      continue;
    }
    d += `${pen ? "L" : "M"}${p[0].toFixed(2)},${p[1].toFixed(2)}`;
    pen = true;
  }
  return d;
}
