/** Pure geometry for the interval-band chart.
 *
 * Maps score intervals to pixel lanes: an affine map score -> x, one lane
 * per alternative, crisp scores as zero-width lines.  Rendering to DOM
 * happens in main.ts; keeping the layout pure makes it testable.
 */

import type { EvaluationResult } from "./types.js";

export interface LaneLayout {
  id: string;
  lane: number;
  y: number;
  height: number;
  /** x of the interval's low end, in pixels. */
  x: number;
  /** pixel width; 0 for a crisp score. */
  width: number;
  crisp: boolean;
  selected: boolean;
  caption: string;
}

export interface ChartLayout {
  width: number;
  height: number;
  axisY: number;
  ticks: { x: number; value: number }[];
  lanes: LaneLayout[];
  scoreToX: (score: number) => number;
}

export const LANE_HEIGHT = 40;
const MARGIN = { left: 70, right: 90, top: 16, bottom: 36 };
const AXIS_MARGIN_FRACTION = 0.05;

function formatScore(value: number): string {
  return Number.isInteger(value) ? String(value) : String(Number(value.toFixed(6)));
}

export function layoutChart(result: EvaluationResult, ids: string[], width = 720): ChartLayout {
  const los = result.intervals.map((iv) => iv[0]);
  const his = result.intervals.map((iv) => iv[1]);
  const lo = Math.min(...los);
  const hi = Math.max(...his);
  const span = hi - lo;
  const margin = span > 0 ? span * AXIS_MARGIN_FRACTION : Math.max(Math.abs(hi), 1) * AXIS_MARGIN_FRACTION;
  const axisLo = lo - margin;
  const axisHi = hi + margin;
  const plotWidth = width - MARGIN.left - MARGIN.right;

  const scoreToX = (score: number) =>
    MARGIN.left + ((score - axisLo) / (axisHi - axisLo)) * plotWidth;

  const lanes: LaneLayout[] = result.intervals.map(([ivLo, ivHi], index) => {
    const crisp = ivLo === ivHi;
    return {
      id: ids[index],
      lane: index,
      y: MARGIN.top + index * LANE_HEIGHT + 6,
      height: LANE_HEIGHT - 16,
      x: scoreToX(ivLo),
      width: crisp ? 0 : scoreToX(ivHi) - scoreToX(ivLo),
      crisp,
      selected: ids[index] === result.selected,
      caption: crisp ? formatScore(ivLo) : `[${formatScore(ivLo)}, ${formatScore(ivHi)}]`,
    };
  });

  const axisY = MARGIN.top + result.intervals.length * LANE_HEIGHT + 8;
  const ticks = Array.from({ length: 6 }, (_, t) => {
    const value = axisLo + ((axisHi - axisLo) * t) / 5;
    return { x: scoreToX(value), value: Number(value.toFixed(4)) };
  });

  return {
    width,
    height: axisY + MARGIN.bottom,
    axisY,
    ticks,
    lanes,
    scoreToX,
  };
}

/** Default slider upper bound: the largest admissible contention margin plus
 * headroom, so any selection flip is reachable; at least 1. */
export function suggestedKMax(result: EvaluationResult): number {
  const critical = result.contentions.map((c) => Math.max(c.kCritical, 0));
  const top = critical.length ? Math.max(...critical) : 0;
  return Math.max(1, top + 0.5);
}
