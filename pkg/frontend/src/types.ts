// Wire types for the analysis service (v1). The UI never computes any of
// these values itself: everything displayed comes from a service response.

export type DirectionName = "maximize" | "minimize";

export interface AlternativePayload {
  id: string;
  label?: string;
}

export interface CriterionPayload {
  id: string;
  label?: string;
  direction?: DirectionName;
  weight: number;
  veto?: number | null;
}

export interface MatrixPayload {
  alternatives: AlternativePayload[];
  criteria: CriterionPayload[];
  scores: number[][];
}

export interface AnalyzeRequest {
  matrix: MatrixPayload;
  c_star: number;
  d_star: number | "inf";
  options?: { include_sweep: boolean };
}

export interface SweepRequest {
  matrix: MatrixPayload;
  d_star: number | "inf";
}

export interface PositionEntry {
  rank: number;
  alternative: string;
  score: number;
}

export interface BenchmarkColumn {
  leaders: string[];
  scores: Record<string, number>;
}

export interface Provenance {
  c_star?: number;
  d_star: number | "inf";
  weights: number[];
}

export interface AnalyzeResponse {
  kernel: string[];
  levels: string[][];
  incomparable_pairs: string[][];
  positioning: Record<string, PositionEntry[]>;
  averages: Record<string, number>;
  average_order: string[];
  benchmark_leaders: Record<string, BenchmarkColumn>;
  provenance: Provenance;
  graph: { nodes: string[]; edges: [string, string][] };
  concordance: { sets: (string[] | null)[][]; indices: (number | null)[][] };
  discordance: { distances: number[][] };
  sweep?: SweepResponse;
}

export interface SweepPoint {
  c_star: number;
  edge_count: number;
  kernel: string[];
  levels: string[][];
  graph_fingerprint: string;
}

export interface SweepResponse {
  points: SweepPoint[];
  critical_thresholds: number[];
  provenance: Provenance;
}

export interface ViolationBody {
  violations: { path: string; message: string }[];
}
