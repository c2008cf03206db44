/* Page bootstrap and event wiring. The wiring helpers are exported so tests
 * can drive them against stub controllers; main() only runs when the real
 * page (with an #app root) is loaded in a browser. */

import { ApiClient, ApiError, EXPORT_FORMATS } from "./api.js";
import type { ExportFormat, MessageResponse } from "./api.js";
import { buildGrid } from "./gridmodel.js";
import { renderGrid, renderReport, renderTranscript, showError } from "./render.js";
import { SessionController } from "./transcript.js";

export interface ChatElements {
  form: HTMLFormElement;
  input: HTMLInputElement | HTMLTextAreaElement;
  button: HTMLButtonElement;
  transcript: HTMLElement;
  error: HTMLElement;
}

/** Wire the chat form to a session controller. While a turn is in flight the
 * input and button are disabled; the controller refuses duplicate sends even
 * if a submit slips through. Transport failures surface inline and leave the
 * transcript untouched. */
export function wireChat(
  els: ChatElements,
  controller: SessionController,
  onResult: (response: MessageResponse) => void,
): void {
  els.form.addEventListener("submit", (event) => {
    event.preventDefault();
    void handleSubmit();
  });

  async function handleSubmit(): Promise<void> {
    if (controller.busy || !els.input.value.trim()) return;
    const text = els.input.value;
    els.input.disabled = true;
    els.button.disabled = true;
    showError(els.error, null);
    try {
      const response = await controller.submit(text);
      if (response) {
        els.input.value = "";
        renderTranscript(els.transcript, controller.transcript);
        if (response.error) showError(els.error, response.error);
        onResult(response);
      }
    } catch (err) {
      const message = err instanceof ApiError
        ? `server error ${err.status}: ${err.detail}`
        : err instanceof Error ? err.message : String(err);
      showError(els.error, message);
    } finally {
      els.input.disabled = false;
      els.button.disabled = false;
    }
  }
}

const EXPORT_MEDIA: Record<ExportFormat, { mime: string; ext: string }> = {
  csv: { mime: "text/csv", ext: "csv" },
  json: { mime: "application/json", ext: "json" },
  svg: { mime: "image/svg+xml", ext: "svg" },
  text: { mime: "text/plain", ext: "txt" },
};

/** Wire one download button per export format plus an inline SVG preview.
 * Bodies are fetched from the API and saved verbatim. */
export function wireExports(
  container: HTMLElement,
  preview: HTMLElement,
  errorEl: HTMLElement,
  fetchExport: (format: ExportFormat) => Promise<string>,
): void {
  container.replaceChildren();
  for (const format of EXPORT_FORMATS) {
    const button = document.createElement("button");
    button.type = "button";
    button.dataset.format = format;
    button.textContent = format === "svg" ? "svg (download + preview)" : format;
    button.addEventListener("click", () => {
      void (async () => {
        try {
          const body = await fetchExport(format);
          const { mime, ext } = EXPORT_MEDIA[format];
          downloadText(`colortable.${ext}`, body, mime);
          if (format === "svg") preview.innerHTML = body;
        } catch (err) {
          showError(errorEl, err instanceof Error ? err.message : String(err));
        }
      })();
    });
    container.append(button);
  }
}

function downloadText(name: string, body: string, mime: string): void {
  const blob = new Blob([body], { type: mime });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = name;
  anchor.click();
  URL.revokeObjectURL(url);
}

function requireEl<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el as T;
}

async function main(): Promise<void> {
  const api = new ApiClient("");
  const errorEl = requireEl<HTMLElement>("error");
  const timeline = requireEl<HTMLElement>("timeline");
  const reportEl = requireEl<HTMLElement>("report");

  let session;
  try {
    const language = requireEl<HTMLSelectElement>("language").value;
    session = await api.createSession(language);
  } catch (err) {
    showError(errorEl, err instanceof Error ? err.message : String(err));
    return;
  }
  const sessionId = session.id;
  const controller = new SessionController((text) => api.sendMessage(sessionId, text));

  wireChat(
    {
      form: requireEl<HTMLFormElement>("chat-form"),
      input: requireEl<HTMLTextAreaElement>("chat-input"),
      button: requireEl<HTMLButtonElement>("chat-send"),
      transcript: requireEl<HTMLElement>("transcript"),
      error: errorEl,
    },
    controller,
    (response) => {
      if (response.table) {
        renderGrid(timeline, buildGrid(response.table, response.report));
        requireEl<HTMLElement>("exports").hidden = false;
      }
      renderReport(reportEl, response.report, response.diagnostics);
    },
  );

  wireExports(
    requireEl<HTMLElement>("export-buttons"),
    requireEl<HTMLElement>("svg-preview"),
    errorEl,
    (format) => api.exportTable(sessionId, format),
  );
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  void main();
}
