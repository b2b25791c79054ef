import { describe, expect, it } from "vitest";

import { renderLinkview } from "../src/views/linkview";
import { defaultState, withView } from "../src/state";
import {
  click,
  container,
  diagnosticsRegion,
  hover,
  series,
  unhover,
} from "./helpers";

function linkState(extra: Partial<ReturnType<typeof defaultState>> = {}) {
  return { ...withView(defaultState("X"), "linkview"), ...extra };
}

describe("link view", () => {
  it("hovering a scatter point highlights the matching trajectory", () => {
    const el = container();
    renderLinkview(el, { series, diagnostics: diagnosticsRegion }, linkState());
    const point = [...el.querySelectorAll(".scatter-point")].find(
      (p) => p.getAttribute("data-country") === "Harland",
    )!;
    hover(point);
    const line = [...el.querySelectorAll(".series-line")].find(
      (p) => p.getAttribute("data-country") === "Harland",
    )!;
    expect(line.classList.contains("linked-hover")).toBe(true);
    unhover(point);
    expect(line.classList.contains("linked-hover")).toBe(false);
  });

  it("hovering a trajectory highlights the matching point (reverse link)", () => {
    const el = container();
    renderLinkview(el, { series, diagnostics: diagnosticsRegion }, linkState());
    const line = [...el.querySelectorAll(".series-line")].find(
      (p) => p.getAttribute("data-country") === "Dorado",
    )!;
    hover(line);
    const point = [...el.querySelectorAll(".scatter-point")].find(
      (p) => p.getAttribute("data-country") === "Dorado",
    )!;
    expect(point.classList.contains("linked-hover")).toBe(true);
  });

  it("clicking pins both sides until clicked again", () => {
    const el = container();
    renderLinkview(el, { series, diagnostics: diagnosticsRegion }, linkState());
    const point = [...el.querySelectorAll(".scatter-point")].find(
      (p) => p.getAttribute("data-country") === "Lunara",
    )!;
    click(point);
    const both = [...el.querySelectorAll("[data-country]")].filter(
      (e) => e.getAttribute("data-country") === "Lunara",
    );
    expect(both.every((e) => e.classList.contains("pinned"))).toBe(true);
    click(point);
    expect(both.some((e) => e.classList.contains("pinned"))).toBe(false);
  });

  it("scatter points carry the raw metric pair values", () => {
    const el = container();
    renderLinkview(el, { series, diagnostics: diagnosticsRegion }, linkState());
    const rec = diagnosticsRegion.records.find((r) => r.country === "Arden")!;
    const point = [...el.querySelectorAll(".scatter-point")].find(
      (p) => p.getAttribute("data-country") === "Arden",
    )!;
    expect(point.getAttribute("data-x")).toBe(String(rec.metrics.linearity));
    expect(point.getAttribute("data-y")).toBe(String(rec.metrics.curvature));
  });

  it("grouped mode facets both panels per group level", () => {
    const el = container();
    renderLinkview(
      el,
      { series, diagnostics: diagnosticsRegion },
      linkState({ groupVar: "region", metricPair: ["acf", "flat_spot"] }),
    );
    const facets = [...el.querySelectorAll(".linkview-facet")];
    expect(facets).toHaveLength(3);
    for (const facet of facets) {
      expect(facet.querySelector(".scatter-panel")).not.toBeNull();
      expect(facet.querySelector(".lines-panel")).not.toBeNull();
    }
  });

  it("rejects unknown metric pairs with a user-facing message", () => {
    const el = container();
    renderLinkview(
      el,
      { series, diagnostics: diagnosticsRegion },
      linkState({ metricPair: ["sparkle", "curvature"] }),
    );
    expect(el.querySelector(".error-message")?.textContent).toContain("sparkle");
    expect(el.querySelectorAll(".scatter-point")).toHaveLength(0);
  });
});
