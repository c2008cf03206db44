/* DOM builders for the transcript, the per-second timeline grid, and the
 * validation report. No timing math here: cells render exactly the codes
 * the API served, overlays exactly the flagged seconds. */

import type { Diagnostic, Report } from "./api.js";
import type { GridModel } from "./gridmodel.js";
import { overlayKey } from "./gridmodel.js";
import { colorFor, labelFor } from "./palette.js";
import type { Entry } from "./transcript.js";

export function renderTranscript(container: HTMLElement, entries: readonly Entry[]): void {
  container.replaceChildren();
  for (const entry of entries) {
    const turn = document.createElement("div");
    turn.className = `turn ${entry.role}`;
    const who = document.createElement("span");
    who.className = "who";
    who.textContent = entry.role === "user" ? "you" : "model";
    const text = document.createElement("pre");
    text.textContent = entry.text;
    turn.append(who, text);
    container.append(turn);
  }
  container.scrollTop = container.scrollHeight;
}

export function renderGrid(container: HTMLElement, model: GridModel): void {
  container.replaceChildren();

  const ruler = document.createElement("div");
  ruler.className = "grid-row ruler";
  const rulerLabel = document.createElement("span");
  rulerLabel.className = "grid-label";
  rulerLabel.textContent = `${model.cycle}s`;
  const ticks = document.createElement("span");
  ticks.className = "grid-cells";
  for (let t = 0; t < model.cycle; t++) {
    const tick = document.createElement("span");
    tick.className = "cell tick";
    tick.textContent = t % 10 === 0 ? String(t) : "";
    ticks.append(tick);
  }
  ruler.append(rulerLabel, ticks);
  container.append(ruler);

  for (const row of model.rows) {
    const line = document.createElement("div");
    line.className = "grid-row";
    line.dataset.movement = row.movement;

    const label = document.createElement("span");
    label.className = "grid-label";
    label.textContent = row.movement;

    const cells = document.createElement("span");
    cells.className = "grid-cells";
    row.cells.forEach((code, second) => {
      const cell = document.createElement("span");
      cell.className = "cell";
      if (code === -1) cell.classList.add("lights-off");
      if (model.overlays.has(overlayKey(row.movement, second))) {
        cell.classList.add("flagged");
      }
      cell.dataset.movement = row.movement;
      cell.dataset.second = String(second);
      cell.dataset.code = String(code);
      cell.style.backgroundColor = colorFor(code);
      cell.title = `${row.movement} @ ${second}s — ${labelFor(code)}`;
      cells.append(cell);
    });

    line.append(label, cells);
    container.append(line);
  }
}

export function renderReport(
  container: HTMLElement,
  report: Report | null,
  diagnostics: readonly Diagnostic[],
): void {
  container.replaceChildren();
  if (!report) return;

  const verdict = document.createElement("p");
  verdict.className = `verdict ${report.verdict}`;
  verdict.textContent = report.verdict === "valid"
    ? "plan is valid"
    : "plan is invalid — edit it through the chat";
  container.append(verdict);

  const list = document.createElement("ul");
  for (const finding of report.errors) {
    const item = document.createElement("li");
    item.className = "finding error";
    item.textContent = finding.message;
    list.append(item);
  }
  for (const finding of report.warnings) {
    const item = document.createElement("li");
    item.className = "finding warning";
    item.textContent = finding.message;
    list.append(item);
  }
  for (const diag of diagnostics) {
    const item = document.createElement("li");
    item.className = `finding ${diag.severity}`;
    item.textContent = `[${diag.code}] ${diag.message}`;
    list.append(item);
  }
  if (list.childElementCount > 0) container.append(list);
}

export function showError(el: HTMLElement, message: string | null): void {
  el.textContent = message ?? "";
  el.hidden = message === null;
}
