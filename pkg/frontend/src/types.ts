/** Wire types mirroring the session service's document dialect. */

export interface ArrowRecord {
  name: string;
  source: string;
  target: string;
  degree: number;
}

export interface PotentialTerm {
  coef: string;
  path: string[];
  vertex?: string;
}

export interface QpDocument {
  vertices: string[];
  arrows: ArrowRecord[];
  potential: PotentialTerm[];
}

export interface HistoryEntry {
  vertex: string;
  reduce: boolean;
  removed: Array<[string, string]>;
}

export interface SessionView {
  session_id: string;
  qp: QpDocument;
  history: HistoryEntry[];
}

export interface JacobianTable {
  dims: number[];
  total: number;
  stabilized: boolean;
}

/** Structured error body: {code, message} with the HTTP status attached. */
export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

/** The session API surface the explorer consumes. */
export interface SessionApi {
  createSession(doc: QpDocument): Promise<string>;
  getSession(id: string): Promise<SessionView>;
  mutate(id: string, vertex: string, reduce: boolean): Promise<SessionView>;
  undo(id: string): Promise<SessionView>;
  jacobian(id: string, maxLen: number): Promise<JacobianTable>;
  dot(id: string): Promise<string>;
}
