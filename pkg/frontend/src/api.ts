import {
  ApiError,
  JacobianTable,
  QpDocument,
  SessionApi,
  SessionView,
} from "./types.js";

async function parseBody(response: Response): Promise<unknown> {
  const text = await response.text();
  try {
    return text ? JSON.parse(text) : {};
  } catch {
    throw new ApiError(response.status, "BadResponse", "response was not JSON");
  }
}

async function check(response: Response): Promise<unknown> {
  const body = await parseBody(response);
  if (!response.ok) {
    const rec = body as { code?: string; message?: string };
    throw new ApiError(
      response.status,
      rec.code ?? "HttpError",
      rec.message ?? `HTTP ${response.status}`,
    );
  }
  return body;
}

/** HTTP client for the cyforge session service. */
export class HttpSessionApi implements SessionApi {
  constructor(private readonly baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  private async post(path: string, body?: unknown): Promise<unknown> {
    const response = await fetch(this.url(path), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    return check(response);
  }

  private async get(path: string): Promise<unknown> {
    return check(await fetch(this.url(path)));
  }

  async createSession(doc: QpDocument): Promise<string> {
    const body = (await this.post("/sessions", doc)) as { session_id: string };
    return body.session_id;
  }

  async getSession(id: string): Promise<SessionView> {
    return (await this.get(`/sessions/${id}`)) as SessionView;
  }

  async mutate(id: string, vertex: string, reduce: boolean): Promise<SessionView> {
    return (await this.post(`/sessions/${id}/mutate`, { vertex, reduce })) as SessionView;
  }

  async undo(id: string): Promise<SessionView> {
    return (await this.post(`/sessions/${id}/undo`)) as SessionView;
  }

  async jacobian(id: string, maxLen: number): Promise<JacobianTable> {
    return (await this.get(`/sessions/${id}/jacobian?max_len=${maxLen}`)) as JacobianTable;
  }

  async dot(id: string): Promise<string> {
    const body = (await this.get(`/sessions/${id}/dot`)) as { dot: string };
    return body.dot;
  }
}
