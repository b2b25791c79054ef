// Number formatting shared by every view: tooltips show metric values to
// three significant figures, in the fixed "<country> — <metric>: <value>"
// shape.  The raw payload value always rides along in a data attribute so
// nothing on screen is ever a recomputed number.

export function formatMetricValue(value: number | null): string {
  if (value === null || Number.isNaN(value)) return "n/a";
  if (Number.isInteger(value) && Math.abs(value) < 1e15) return String(value);
  return String(Number(value.toPrecision(3)));
}

export function tooltipText(
  country: string,
  metric: string,
  value: number | null,
): string {
  return `${country} — ${metric}: ${formatMetricValue(value)}`;
}
