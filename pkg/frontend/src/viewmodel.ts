import { potentialLines, renderSvg } from "./render.js";
import {
  ApiError,
  HistoryEntry,
  JacobianTable,
  QpDocument,
  SessionApi,
  SessionView,
} from "./types.js";

/**
 * Client-side mirror of one mutation session.
 *
 * The view model never mutates state locally: every write goes to the
 * server and the mirror is replaced by the acknowledged response, so after
 * any sequence of acknowledged operations the state equals a fresh fetch of
 * the session.  Failed writes leave the mirror untouched and surface the
 * server's structured error code verbatim.
 */
export class ExplorerViewModel {
  private sessionId: string | null = null;
  private doc: QpDocument | null = null;
  private history: HistoryEntry[] = [];
  private jacobianCache: JacobianTable | null = null;
  selection: string | null = null;
  reduceEnabled = false;
  lastError: ApiError | null = null;
  offline = false;

  constructor(private readonly api: SessionApi) {}

  get document(): QpDocument | null {
    return this.doc;
  }

  get historyEntries(): readonly HistoryEntry[] {
    return this.history;
  }

  get id(): string | null {
    return this.sessionId;
  }

  /** Vertices carrying a loop; the server would reject mutation there. */
  blockedVertices(): Set<string> {
    const blocked = new Set<string>();
    for (const arrow of this.doc?.arrows ?? []) {
      if (arrow.source === arrow.target) blocked.add(arrow.source);
    }
    return blocked;
  }

  private accept(view: SessionView): void {
    this.sessionId = view.session_id;
    this.doc = view.qp;
    this.history = view.history;
    this.jacobianCache = null;
    this.lastError = null;
    this.offline = false;
  }

  private fail(error: unknown): ApiError {
    if (error instanceof ApiError) {
      this.lastError = error;
      return error;
    }
    this.offline = true;
    const wrapped = new ApiError(0, "Offline", String(error));
    this.lastError = wrapped;
    return wrapped;
  }

  async loadDocument(doc: QpDocument): Promise<void> {
    try {
      const id = await this.api.createSession(doc);
      this.accept(await this.api.getSession(id));
    } catch (error) {
      throw this.fail(error);
    }
  }

  /** Issue a mutation at the clicked vertex; state changes only on ack. */
  async clickVertex(vertex: string): Promise<boolean> {
    if (!this.sessionId) return false;
    this.selection = vertex;
    try {
      this.accept(await this.api.mutate(this.sessionId, vertex, this.reduceEnabled));
      return true;
    } catch (error) {
      this.fail(error);
      return false;
    }
  }

  async undo(): Promise<void> {
    if (!this.sessionId) return;
    try {
      this.accept(await this.api.undo(this.sessionId));
    } catch (error) {
      this.fail(error);
    }
  }

  async showJacobian(maxLen: number): Promise<JacobianTable | null> {
    if (!this.sessionId) return null;
    if (this.jacobianCache && this.jacobianCache.dims.length > maxLen) {
      return this.jacobianCache;
    }
    try {
      this.jacobianCache = await this.api.jacobian(this.sessionId, maxLen);
      return this.jacobianCache;
    } catch (error) {
      this.fail(error);
      return null;
    }
  }

  /** Canonical JSON of the mirrored document (what the server emitted). */
  exportCurrent(): string {
    if (!this.doc) return "";
    return JSON.stringify(this.doc, null, 2) + "\n";
  }

  /** Re-fetch the session; used to assert snapshot consistency. */
  async refresh(): Promise<void> {
    if (!this.sessionId) return;
    try {
      this.accept(await this.api.getSession(this.sessionId));
    } catch (error) {
      this.fail(error);
    }
  }

  renderSvg(): string {
    if (!this.doc) return "<svg/>";
    return renderSvg(this.doc, this.blockedVertices());
  }

  potentialPanel(): string[] {
    return this.doc ? potentialLines(this.doc) : [];
  }

  /** Write actions are disabled while the service is unreachable. */
  writesEnabled(): boolean {
    return this.sessionId !== null && !this.offline;
  }
}
