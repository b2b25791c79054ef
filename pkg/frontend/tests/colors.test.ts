import { describe, expect, it } from "vitest";

import { groupColorScale, highlightGradient } from "../src/colors";

describe("colour assignment", () => {
  it("is stable for a group level regardless of input order", () => {
    const a = groupColorScale(["South Range", "North Cluster", "Middle Belt"]);
    const b = groupColorScale(["Middle Belt", "South Range", "North Cluster", "Middle Belt"]);
    for (const level of ["North Cluster", "Middle Belt", "South Range"]) {
      expect(a(level)).toBe(b(level));
    }
  });

  it("maps distinct levels to distinct colours", () => {
    const scale = groupColorScale(["a", "b", "c"]);
    expect(new Set([scale("a"), scale("b"), scale("c")]).size).toBe(3);
  });

  it("gradient spans the highlighted subset's metric range", () => {
    const gradient = highlightGradient([10, 20, 30]);
    expect(gradient(10)).not.toBe(gradient(30));
    expect(gradient(20)).not.toBe(gradient(10));
  });

  it("degenerate ranges still yield a colour", () => {
    const gradient = highlightGradient([5]);
    expect(typeof gradient(5)).toBe("string");
  });
});
