import type {
  AnalyzeRequest,
  AnalyzeResponse,
  SweepRequest,
  SweepResponse,
  ViolationBody,
} from "./types.js";

export type FetchLike = (url: string, init: RequestInit) => Promise<Response>;

export class ServiceError extends Error {
  constructor(
    public status: number,
    public violations: { path: string; message: string }[],
  ) {
    super(violations.map((v) => `${v.path}: ${v.message}`).join("; ") || `HTTP ${status}`);
  }
}

/** Result of a sequenced call: stale responses come back with ok=false. */
export type Sequenced<T> = { stale: true } | { stale: false; value: T };

// Requests carry a sequence number; only the newest response may be
// applied, so a slow early response can never overwrite a fresh one.
export class AnalysisClient {
  private seq = 0;

  constructor(
    private baseUrl: string = "",
    private fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) {
      let violations: ViolationBody["violations"] = [];
      try {
        violations = ((await response.json()) as ViolationBody).violations ?? [];
      } catch {
        // non-JSON error body: report the status alone
      }
      throw new ServiceError(response.status, violations);
    }
    return (await response.json()) as T;
  }

  /** Analyze with supersession: returns stale=true for superseded responses. */
  async analyze(request: AnalyzeRequest): Promise<Sequenced<AnalyzeResponse>> {
    const ticket = ++this.seq;
    const value = await this.post<AnalyzeResponse>("/api/v1/analyze", request);
    if (ticket !== this.seq) return { stale: true };
    return { stale: false, value };
  }

  async sweep(request: SweepRequest): Promise<SweepResponse> {
    return this.post<SweepResponse>("/api/v1/sweep", request);
  }
}
