import type { SweepResponse, SweepPoint } from "./types.js";

// The graph is piecewise constant in c*: each segment of the strip covers
// the half-open interval ending at one critical threshold (inclusive), and
// the whole segment shares that threshold's sweep point.

export interface StripSegment {
  /** exclusive lower end (0 for the first segment, which includes 0) */
  from: number;
  /** inclusive upper end: a critical threshold */
  to: number;
  /** c* value a click should jump to (segment midpoint) */
  representative: number;
  point: SweepPoint;
}

export function stripSegments(sweep: SweepResponse): StripSegment[] {
  const segments: StripSegment[] = [];
  let lower = 0;
  for (const critical of sweep.critical_thresholds) {
    const point = sweep.points.find((p) => p.c_star === critical);
    if (!point) continue;
    segments.push({
      from: lower,
      to: critical,
      representative: (lower + critical) / 2,
      point,
    });
    lower = critical;
  }
  return segments;
}

export function segmentAt(segments: StripSegment[], value: number): StripSegment | null {
  for (const segment of segments) {
    if (value <= segment.to) return segment;
  }
  return segments.length > 0 ? segments[segments.length - 1] : null;
}

/** Edge counts along the strip; nonincreasing left to right by construction. */
export function sparkline(sweep: SweepResponse): { c_star: number; edge_count: number }[] {
  return sweep.points.map((p) => ({ c_star: p.c_star, edge_count: p.edge_count }));
}

export function isNonincreasing(counts: number[]): boolean {
  for (let i = 1; i < counts.length; i++) {
    if (counts[i] > counts[i - 1]) return false;
  }
  return true;
}
