/* Typed client for the workbench HTTP API. Every number the UI shows comes
 * out of these responses; nothing is computed client-side. */

export interface TableJson {
  cycle: number;
  rows: Record<string, number[]>;
}

export interface Finding {
  code: string;
  message: string;
  movements: string[];
  seconds: number[];
}

export interface Report {
  verdict: "valid" | "invalid";
  errors: Finding[];
  warnings: Finding[];
}

export interface Diagnostic {
  severity: string;
  code: string;
  message: string;
}

export interface SessionInfo {
  id: string;
  language: string;
}

export interface TranscriptEntry {
  role: "user" | "assistant";
  text: string;
}

export interface ResultPayload {
  cycle: number | null;
  table: TableJson | null;
  report: Report | null;
  diagnostics: Diagnostic[];
}

export interface SessionState extends SessionInfo, ResultPayload {
  transcript: TranscriptEntry[];
}

export interface MessageResponse extends ResultPayload {
  reply: string;
  parsed: boolean;
  error: string | null;
}

export type ExportFormat = "csv" | "json" | "svg" | "text";

export const EXPORT_FORMATS: ExportFormat[] = ["csv", "json", "svg", "text"];

export class ApiError extends Error {
  constructor(readonly status: number, readonly detail: string) {
    super(detail);
    this.name = "ApiError";
  }
}

async function raise(response: Response): Promise<never> {
  let detail = `${response.status} ${response.statusText}`;
  try {
    const body = (await response.json()) as { detail?: string };
    if (body.detail) detail = body.detail;
  } catch {
    /* non-json error body: keep the status line */
  }
  throw new ApiError(response.status, detail);
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  private async json<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.base + path, init);
    if (!response.ok) await raise(response);
    return (await response.json()) as T;
  }

  createSession(language = "en"): Promise<SessionInfo> {
    return this.json("/api/sessions", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ language }),
    });
  }

  getSession(id: string): Promise<SessionState> {
    return this.json(`/api/sessions/${id}`);
  }

  sendMessage(id: string, text: string): Promise<MessageResponse> {
    return this.json(`/api/sessions/${id}/messages`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ text }),
    });
  }

  /* Raw export bytes, verbatim from the server. */
  async exportTable(id: string, format: ExportFormat): Promise<string> {
    const response = await fetch(
      `${this.base}/api/sessions/${id}/export?format=${format}`,
    );
    if (!response.ok) await raise(response);
    return response.text();
  }

  getConfig(): Promise<Record<string, unknown>> {
    return this.json("/api/config");
  }
}
