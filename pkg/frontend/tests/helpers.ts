// Canned payloads captured from the real service (tools/make_ui_fixtures.py)
// plus a stubbed fetch for request-level tests.

import type {
  DiagnosticsPayload,
  Envelope,
  HighlightsPayload,
  MissingnessPayload,
  SeriesPayload,
} from "../src/api";

import seriesFx from "./fixtures/series.json";
import diagnosticsRegionFx from "./fixtures/diagnostics_region.json";
import diagnosticsGlobalFx from "./fixtures/diagnostics_global.json";
import missingnessFx from "./fixtures/missingness_region.json";
import highlightsGlobalAvgFx from "./fixtures/highlights_global_avg.json";
import highlightsRegionAvgFx from "./fixtures/highlights_region_avg.json";
import highlightsAbsLinearityFx from "./fixtures/highlights_abs_linearity.json";
import highlightsExtremeFx from "./fixtures/highlights_extreme.json";

export const series = (seriesFx as Envelope<SeriesPayload>).payload;
export const diagnosticsRegion = (
  diagnosticsRegionFx as Envelope<DiagnosticsPayload>
).payload;
export const diagnosticsGlobal = (
  diagnosticsGlobalFx as Envelope<DiagnosticsPayload>
).payload;
export const missingness = (
  missingnessFx as Envelope<MissingnessPayload>
).payload;
export const highlightsGlobalAvg = (
  highlightsGlobalAvgFx as Envelope<HighlightsPayload>
).payload;
export const highlightsRegionAvg = (
  highlightsRegionAvgFx as Envelope<HighlightsPayload>
).payload;
export const highlightsAbsLinearity = (
  highlightsAbsLinearityFx as Envelope<HighlightsPayload>
).payload;
export const highlightsExtreme = (
  highlightsExtremeFx as Envelope<HighlightsPayload>
).payload;

export function container(): HTMLElement {
  const el = document.createElement("div");
  document.body.appendChild(el);
  return el;
}

export function hover(el: Element): void {
  el.dispatchEvent(new MouseEvent("mouseover", { bubbles: true }));
}

export function unhover(el: Element): void {
  el.dispatchEvent(new MouseEvent("mouseout", { bubbles: true }));
}

export function click(el: Element): void {
  el.dispatchEvent(new MouseEvent("click", { bubbles: true }));
}

export interface StubCall {
  url: string;
  signal?: AbortSignal;
}

export function stubFetch(bodies: Record<string, unknown>) {
  const calls: StubCall[] = [];
  const fetchFn = (url: string, init?: { signal?: AbortSignal }) => {
    calls.push({ url, signal: init?.signal });
    const key = Object.keys(bodies).find((k) => url.includes(k));
    if (!key) {
      return Promise.resolve({
        ok: false,
        status: 404,
        json: () => Promise.resolve({}),
      });
    }
    return Promise.resolve({
      ok: true,
      status: 200,
      json: () => Promise.resolve(bodies[key]),
    });
  };
  return { fetchFn, calls };
}
