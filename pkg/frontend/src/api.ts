import type {
  EvaluationControls,
  EvaluationResult,
  ProblemDocument,
  SensitivityStep,
} from "./types.js";

export interface SavedRef {
  id: string;
  revision: number;
}

/** The service surface the UI depends on; tests substitute a fake. */
export interface ApiClient {
  sample(): Promise<ProblemDocument>;
  create(doc: ProblemDocument): Promise<SavedRef>;
  update(id: string, doc: ProblemDocument, revision: number): Promise<SavedRef>;
  evaluate(id: string, controls: EvaluationControls): Promise<EvaluationResult>;
  sensitivity(id: string, controls: EvaluationControls): Promise<SensitivityStep[]>;
}

export class ApiError extends Error {
  constructor(message: string, readonly status: number, readonly diagnostics: string[] = []) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class HttpApiClient implements ApiClient {
  constructor(
    private readonly baseUrl = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    const body = await response.json().catch(() => ({}));
    if (!response.ok) {
      const message = typeof body?.error === "string" ? body.error : `HTTP ${response.status}`;
      throw new ApiError(message, response.status, body?.diagnostics ?? []);
    }
    return body as T;
  }

  sample(): Promise<ProblemDocument> {
    return this.request("/api/sample");
  }

  create(doc: ProblemDocument): Promise<SavedRef> {
    return this.request("/api/problems", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(doc),
    });
  }

  update(id: string, doc: ProblemDocument, revision: number): Promise<SavedRef> {
    return this.request(`/api/problems/${id}`, {
      method: "PUT",
      headers: { "Content-Type": "application/json", "If-Match": String(revision) },
      body: JSON.stringify(doc),
    });
  }

  evaluate(id: string, controls: EvaluationControls): Promise<EvaluationResult> {
    const query = new URLSearchParams({
      iMin: String(controls.iMin),
      iMax: String(controls.iMax),
      k: String(controls.k),
    });
    return this.request(`/api/problems/${id}/evaluate?${query}`);
  }

  sensitivity(id: string, controls: EvaluationControls): Promise<SensitivityStep[]> {
    const query = new URLSearchParams({
      iMin: String(controls.iMin),
      iMax: String(controls.iMax),
    });
    return this.request(`/api/problems/${id}/sensitivity?${query}`);
  }
}
