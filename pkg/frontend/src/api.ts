// Typed client for the explorer session service. The UI never computes
// mutation locally: every number it shows comes through this module.

export interface SessionState {
  id: string;
  n: number;
  m: number;
  matrix: number[][];
  degrees: number[][];
  denominators: number[][];
  last_variable_degree: number[] | null;
  history: number[];
  labels: string[] | null;
}

export interface ApiFailure {
  status: number;
  error: string;
}

export class ApiError extends Error {
  status: number;
  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

type Fetcher = (url: string, init?: RequestInit) => Promise<Response>;

export class ExplorerClient {
  base: string;
  fetcher: Fetcher;

  constructor(base: string, fetcher?: Fetcher) {
    this.base = base.replace(/\/$/, "");
    this.fetcher = fetcher ?? ((url, init) => fetch(url, init));
  }

  private async call<T>(path: string, method: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { "Content-Type": "application/json" } };
    if (body !== undefined) init.body = JSON.stringify(body);
    const resp = await this.fetcher(this.base + path, init);
    const data = await resp.json();
    if (!resp.ok) {
      throw new ApiError(resp.status, (data as { error?: string }).error ?? "request failed");
    }
    return data as T;
  }

  presets(): Promise<{ presets: string[] }> {
    return this.call("/presets", "GET");
  }

  async createSession(preset: string): Promise<SessionState> {
    const data = await this.call<{ id: string; state: SessionState }>(
      "/sessions", "POST", { preset });
    return data.state;
  }

  getSession(id: string): Promise<SessionState> {
    return this.call(`/sessions/${id}`, "GET");
  }

  mutate(id: string, vertex: number): Promise<SessionState> {
    return this.call(`/sessions/${id}/mutate`, "POST", { vertex });
  }

  undo(id: string): Promise<SessionState> {
    return this.call(`/sessions/${id}/undo`, "POST");
  }

  search(id: string, target: number | number[], maxDepth: number):
      Promise<{ path: number[] | null }> {
    return this.call(`/sessions/${id}/search`, "POST",
      { target_degree: target, max_depth: maxDepth });
  }

  drop(id: string): Promise<{ deleted: string }> {
    return this.call(`/sessions/${id}`, "DELETE");
  }
}
