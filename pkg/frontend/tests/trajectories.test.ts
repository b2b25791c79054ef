import { describe, expect, it } from "vitest";

import { renderTrajectories } from "../src/views/trajectories";
import { formatMetricValue } from "../src/format";
import { defaultState } from "../src/state";
import {
  container,
  diagnosticsGlobal,
  diagnosticsRegion,
  highlightsExtreme,
  highlightsGlobalAvg,
  highlightsRegionAvg,
  hover,
  series,
  unhover,
} from "./helpers";

describe("trajectories view", () => {
  it("highlights exactly the server's highlight set", () => {
    const el = container();
    renderTrajectories(
      el,
      { series, diagnostics: diagnosticsGlobal, highlights: highlightsGlobalAvg },
      { ...defaultState("X"), metric: "country_avg_dist" },
    );
    const drawn = [...el.querySelectorAll(".series-line.highlighted")].map(
      (p) => p.getAttribute("data-country"),
    );
    expect(new Set(drawn)).toEqual(new Set(highlightsGlobalAvg.highlighted));
    const grey = el.querySelectorAll(".series-line:not(.highlighted)");
    expect(grey.length).toBe(series.countries.length - drawn.length);
  });

  it("an extreme percentile highlights at most one series", () => {
    const el = container();
    renderTrajectories(
      el,
      { series, diagnostics: diagnosticsGlobal, highlights: highlightsExtreme },
      { ...defaultState("X"), metric: "country_avg_dist", percentile: 0.999 },
    );
    expect(el.querySelectorAll(".series-line.highlighted").length)
      .toBeLessThanOrEqual(1);
  });

  it("tooltip text is the formatted payload value, byte for byte", () => {
    const el = container();
    renderTrajectories(
      el,
      { series, diagnostics: diagnosticsGlobal, highlights: highlightsGlobalAvg },
      { ...defaultState("X"), metric: "country_avg_dist" },
    );
    const target = highlightsGlobalAvg.highlighted[0];
    const line = [...el.querySelectorAll(".series-line")].find(
      (p) => p.getAttribute("data-country") === target,
    )!;
    hover(line);
    const tip = el.querySelector<HTMLElement>(".tooltip")!;
    const raw = diagnosticsGlobal.records.find((r) => r.country === target)!
      .metrics.country_avg_dist as number;
    expect(tip.textContent).toBe(
      `${target} — country_avg_dist: ${formatMetricValue(raw)}`,
    );
    expect(tip.dataset.raw).toBe(String(raw));
    expect(line.classList.contains("hovered")).toBe(true);
    unhover(line);
    expect(tip.style.display).toBe("none");
  });

  it("grouped mode facets by the grouping variable", () => {
    const el = container();
    renderTrajectories(
      el,
      { series, diagnostics: diagnosticsRegion, highlights: highlightsRegionAvg },
      { ...defaultState("X"), groupVar: "region", metric: "country_avg_dist" },
    );
    const facets = [...el.querySelectorAll("svg")].map((s) =>
      s.getAttribute("data-facet"),
    );
    expect(facets).toEqual(["Middle Belt", "North Cluster", "South Range"]);
    const drawn = [...el.querySelectorAll(".series-line.highlighted")].map(
      (p) => p.getAttribute("data-country"),
    );
    expect(new Set(drawn)).toEqual(new Set(highlightsRegionAvg.highlighted));
  });

  it("renders an empty-state panel on an empty payload", () => {
    const el = container();
    renderTrajectories(
      el,
      { series: { years: [], countries: [] }, diagnostics: null, highlights: null },
      defaultState("X"),
    );
    expect(el.querySelector(".empty-state")).not.toBeNull();
  });

  it("series with a gap produce a broken path, not a zero", () => {
    const el = container();
    renderTrajectories(
      el,
      { series, diagnostics: null, highlights: null },
      defaultState("X"),
    );
    const gappy = [...el.querySelectorAll(".series-line")].find(
      (p) => p.getAttribute("data-country") === "Kestrel Bay",
    )!;
    const d = gappy.getAttribute("d")!;
    expect((d.match(/M/g) ?? []).length).toBe(2);
  });
});
