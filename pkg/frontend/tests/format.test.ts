import { describe, expect, it } from "vitest";

import { formatMetricValue, tooltipText } from "../src/format";

describe("metric formatting", () => {
  it("renders three significant figures", () => {
    expect(formatMetricValue(497.99848335538474)).toBe("498");
    expect(formatMetricValue(-0.16809989)).toBe("-0.168");
    expect(formatMetricValue(0.0031912)).toBe("0.00319");
    expect(formatMetricValue(12345.6)).toBe("12300");
  });

  it("keeps integer-valued metrics unrounded", () => {
    expect(formatMetricValue(10)).toBe("10");
    expect(formatMetricValue(18)).toBe("18");
  });

  it("marks missing values", () => {
    expect(formatMetricValue(null)).toBe("n/a");
    expect(formatMetricValue(Number.NaN)).toBe("n/a");
  });

  it("builds the fixed tooltip shape", () => {
    expect(tooltipText("Qatar", "country_avg_dist", 497.99848335538474)).toBe(
      "Qatar — country_avg_dist: 498",
    );
  });
});
