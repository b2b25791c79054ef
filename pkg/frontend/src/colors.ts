// Stable colour assignment: a group level keeps one colour across every
// view in a session, and highlighted series use a perceptually uniform
// multi-hue ramp over the highlighted subset's metric range.

import { interpolateViridis, schemeTableau10 } from "d3";

export function groupColorScale(levels: string[]): (level: string) => string {
  const ordered = [...new Set(levels)].sort();
  const index = new Map(ordered.map((lvl, i) => [lvl, i]));
  return (level: string) =>
    schemeTableau10[(index.get(level) ?? ordered.length) % 10];
}

export function highlightGradient(
  values: number[],
): (value: number) => string {
  const finite = values.filter((v) => Number.isFinite(v));
  if (finite.length === 0) return () => interpolateViridis(0.5);
  const lo = Math.min(...finite);
  const hi = Math.max(...finite);
  if (hi === lo) return () => interpolateViridis(0.5);
  return (value: number) => interpolateViridis((value - lo) / (hi - lo));
}
