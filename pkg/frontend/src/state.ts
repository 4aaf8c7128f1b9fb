import type {
  AnalyzeRequest,
  AnalyzeResponse,
  MatrixPayload,
  SweepResponse,
} from "./types.js";

export interface ExplorerState {
  matrix: MatrixPayload;
  /** Raw slider values; the displayed weights are these renormalized. */
  weights: number[];
  cStar: number;
  dStar: { unbounded: boolean; value: number };
  lastReport: AnalyzeResponse | null;
  lastSweep: SweepResponse | null;
}

export function initialState(matrix: MatrixPayload): ExplorerState {
  return {
    matrix: cloneMatrix(matrix),
    weights: matrix.criteria.map((c) => c.weight),
    cStar: 0.75,
    dStar: { unbounded: true, value: 1.0 },
    lastReport: null,
    lastSweep: null,
  };
}

export function cloneMatrix(matrix: MatrixPayload): MatrixPayload {
  return {
    alternatives: matrix.alternatives.map((a) => ({ ...a })),
    criteria: matrix.criteria.map((c) => ({ ...c })),
    scores: matrix.scores.map((row) => [...row]),
  };
}

/** Weights as shown next to the sliders: always summing to 1. */
export function displayedWeights(weights: number[]): number[] {
  const total = weights.reduce((s, w) => s + w, 0);
  if (total <= 0) return weights.map(() => 1 / weights.length);
  return weights.map((w) => w / total);
}

export function setWeight(state: ExplorerState, index: number, value: number): void {
  state.weights[index] = Math.max(0, value);
}

export function setScore(state: ExplorerState, row: number, col: number, value: number): void {
  state.matrix.scores[row][col] = value;
}

export function setCStar(state: ExplorerState, value: number): void {
  state.cStar = Math.min(1, Math.max(0, value));
}

/** Detents for the c* slider: the critical thresholds of the last sweep. */
export function detents(state: ExplorerState): number[] {
  return state.lastSweep ? [...state.lastSweep.critical_thresholds] : [];
}

/** Snap a slider value to the nearest detent within the given radius. */
export function snapToDetent(value: number, detentValues: number[], radius = 0.015): number {
  let best = value;
  let bestDistance = radius;
  for (const detent of detentValues) {
    const distance = Math.abs(detent - value);
    if (distance <= bestDistance) {
      best = detent;
      bestDistance = distance;
    }
  }
  return best;
}

export function buildAnalyzeRequest(state: ExplorerState, includeSweep: boolean): AnalyzeRequest {
  const weights = displayedWeights(state.weights);
  const matrix = cloneMatrix(state.matrix);
  matrix.criteria = matrix.criteria.map((c, j) => ({ ...c, weight: weights[j] }));
  return {
    matrix,
    c_star: state.cStar,
    d_star: state.dStar.unbounded ? "inf" : state.dStar.value,
    options: { include_sweep: includeSweep },
  };
}

export function applyReport(state: ExplorerState, report: AnalyzeResponse): void {
  state.lastReport = report;
  if (report.sweep) state.lastSweep = report.sweep;
}
