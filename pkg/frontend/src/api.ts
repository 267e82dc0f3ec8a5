// Client for the simbloom loopback service. The candidate password is
// only ever placed in a POST body to the configured origin -- never in
// a URL, query string or any storage API.

export interface CheckDecision {
  deltas: Record<string, number>;
  max_delta: number;
  threshold: number;
  verdict: "accept" | "warn";
}

export interface FilterEntry {
  label: string;
  created_at: string;
  nu: number;
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ServiceError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class ApiClient {
  constructor(
    private origin: string,
    private fetchImpl: FetchLike = (...args) => fetch(...args),
  ) {}

  async listFilters(): Promise<FilterEntry[]> {
    const resp = await this.fetchImpl(`${this.origin}/v1/filters`);
    if (!resp.ok) throw new ServiceError(resp.status, "cannot list filters");
    return resp.json();
  }

  async addFilter(label: string, password: string): Promise<void> {
    const resp = await this.fetchImpl(
      `${this.origin}/v1/filters/${encodeURIComponent(label)}`,
      {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ password }),
      },
    );
    if (!resp.ok) {
      const detail =
        resp.status === 409 ? `label "${label}" already exists` : "cannot add filter";
      throw new ServiceError(resp.status, detail);
    }
  }

  async check(candidate: string): Promise<CheckDecision> {
    const resp = await this.fetchImpl(`${this.origin}/v1/check`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ password: candidate }),
    });
    if (!resp.ok) throw new ServiceError(resp.status, "check failed");
    return resp.json();
  }
}
