// @vitest-environment happy-dom

import { beforeEach, describe, expect, it, vi } from "vitest";

import { ApiError, type MessageResponse, type Report } from "../src/api.js";
import { wireChat, type ChatElements } from "../src/app.js";
import { buildGrid } from "../src/gridmodel.js";
import { renderGrid, renderReport, renderTranscript, showError } from "../src/render.js";
import { SessionController } from "../src/transcript.js";

function reply(text: string, error: string | null = null): MessageResponse {
  return {
    reply: text,
    parsed: true,
    error,
    cycle: null,
    table: null,
    report: null,
    diagnostics: [],
  };
}

/* happy-dom may normalise hex colours; accept either spelling. */
function expectColor(cell: HTMLElement, hex: string): void {
  const style = (cell.getAttribute("style") ?? "").toLowerCase();
  const r = parseInt(hex.slice(1, 3), 16);
  const g = parseInt(hex.slice(3, 5), 16);
  const b = parseInt(hex.slice(5, 7), 16);
  const rgb = `rgb(${r}, ${g}, ${b})`;
  expect(style.includes(hex) || style.includes(rgb)).toBe(true);
}

describe("renderGrid", () => {
  const table = {
    cycle: 4,
    rows: { NBT: [2, 1, 0, 0], EBT: [0, 0, 2, 2], NBR: [-1, -1, -1, -1] },
  };
  const report: Report = {
    verdict: "invalid",
    errors: [{ code: "conflict", message: "x", movements: ["NBT", "EBT"], seconds: [2] }],
    warnings: [],
  };

  it("draws one row per movement and one cell per second", () => {
    const container = document.createElement("div");
    renderGrid(container, buildGrid(table, null));

    const rows = container.querySelectorAll<HTMLElement>(".grid-row[data-movement]");
    expect(rows).toHaveLength(3);
    expect([...rows].map((r) => r.dataset.movement)).toEqual(["NBT", "EBT", "NBR"]);
    for (const row of rows) {
      expect(row.querySelectorAll(".cell[data-code]")).toHaveLength(4);
    }

    const first = container.querySelector<HTMLElement>(
      '.cell[data-movement="NBT"][data-second="0"]',
    )!;
    expect(first.dataset.code).toBe("2");
    expect(first.title).toBe("NBT @ 0s — green / WALK");
    expectColor(first, "#2e7d32");
  });

  it("styles lights-off cells distinctly", () => {
    const container = document.createElement("div");
    renderGrid(container, buildGrid(table, null));
    const offCells = container.querySelectorAll(".cell.lights-off");
    expect(offCells).toHaveLength(4);
    for (const cell of offCells) {
      expect((cell as HTMLElement).dataset.movement).toBe("NBR");
    }
  });

  it("overlays a conflict marker on both movements at the flagged second", () => {
    const container = document.createElement("div");
    renderGrid(container, buildGrid(table, report));
    const flagged = [...container.querySelectorAll<HTMLElement>(".cell.flagged")];
    expect(
      flagged.map((c) => `${c.dataset.movement}:${c.dataset.second}`).sort(),
    ).toEqual(["EBT:2", "NBT:2"]);
  });
});

describe("renderTranscript / renderReport / showError", () => {
  it("renders turns in order with roles", () => {
    const container = document.createElement("div");
    renderTranscript(container, [
      { role: "user", text: "set the cycle" },
      { role: "assistant", text: "{\"plan\": 1}" },
    ]);
    const turns = [...container.querySelectorAll(".turn")];
    expect(turns).toHaveLength(2);
    expect(turns[0]!.className).toContain("user");
    expect(turns[0]!.querySelector("pre")!.textContent).toBe("set the cycle");
    expect(turns[1]!.className).toContain("assistant");
  });

  it("lists findings under an invalid verdict", () => {
    const container = document.createElement("div");
    renderReport(
      container,
      {
        verdict: "invalid",
        errors: [{ code: "conflict", message: "NBT and EBT both move", movements: [], seconds: [] }],
        warnings: [{ code: "missing-critical", message: "SBT missing", movements: [], seconds: [] }],
      },
      [{ severity: "info", code: "repair", message: "relabelled stages" }],
    );
    expect(container.querySelector(".verdict.invalid")).toBeTruthy();
    const items = [...container.querySelectorAll("li")].map((li) => li.textContent);
    expect(items).toEqual([
      "NBT and EBT both move",
      "SBT missing",
      "[repair] relabelled stages",
    ]);
  });

  it("toggles the error element", () => {
    const el = document.createElement("p");
    showError(el, "boom");
    expect(el.hidden).toBe(false);
    expect(el.textContent).toBe("boom");
    showError(el, null);
    expect(el.hidden).toBe(true);
    expect(el.textContent).toBe("");
  });
});

describe("wireChat", () => {
  let els: ChatElements;

  beforeEach(() => {
    document.body.innerHTML = `
      <div id="transcript"></div>
      <p id="error" hidden></p>
      <form id="chat-form">
        <textarea id="chat-input"></textarea>
        <button id="chat-send" type="submit">send</button>
      </form>`;
    els = {
      form: document.getElementById("chat-form") as HTMLFormElement,
      input: document.getElementById("chat-input") as HTMLTextAreaElement,
      button: document.getElementById("chat-send") as HTMLButtonElement,
      transcript: document.getElementById("transcript")!,
      error: document.getElementById("error")!,
    };
  });

  function submit(): void {
    els.form.dispatchEvent(new Event("submit", { cancelable: true }));
  }

  it("disables input while a turn is in flight and blocks duplicate sends", async () => {
    let calls = 0;
    let release!: (value: MessageResponse) => void;
    const controller = new SessionController(() => {
      calls += 1;
      return new Promise<MessageResponse>((resolve) => {
        release = resolve;
      });
    });
    const results: MessageResponse[] = [];
    wireChat(els, controller, (r) => results.push(r));

    els.input.value = "add a protected left";
    submit();
    expect(els.input.disabled).toBe(true);
    expect(els.button.disabled).toBe(true);

    submit(); // user mashes send while waiting
    expect(calls).toBe(1);

    release(reply("done"));
    await vi.waitFor(() => expect(els.input.disabled).toBe(false));
    expect(els.button.disabled).toBe(false);
    expect(els.input.value).toBe("");
    expect(els.transcript.querySelectorAll(".turn")).toHaveLength(2);
    expect(results).toHaveLength(1);
    expect(els.error.hidden).toBe(true);
  });

  it("shows a 404 inline and leaves the transcript unchanged", async () => {
    const controller = new SessionController(async () => {
      throw new ApiError(404, "no session deadbeef");
    });
    wireChat(els, controller, () => {
      throw new Error("onResult must not fire");
    });

    els.input.value = "hello?";
    submit();
    await vi.waitFor(() => expect(els.error.hidden).toBe(false));
    expect(els.error.textContent).toBe("server error 404: no session deadbeef");
    expect(controller.transcript).toEqual([]);
    expect(els.transcript.querySelectorAll(".turn")).toHaveLength(0);
    expect(els.input.disabled).toBe(false);
    expect(els.input.value).toBe("hello?"); // nothing was consumed
  });

  it("shows a turn-level error inline while still appending the reply", async () => {
    const controller = new SessionController(async () =>
      reply("could not assemble that", "assemble: no stages given"),
    );
    wireChat(els, controller, () => {});

    els.input.value = "nonsense plan";
    submit();
    await vi.waitFor(() =>
      expect(els.transcript.querySelectorAll(".turn")).toHaveLength(2),
    );
    expect(els.error.hidden).toBe(false);
    expect(els.error.textContent).toBe("assemble: no stages given");
  });

  it("ignores blank submissions", async () => {
    let calls = 0;
    const controller = new SessionController(async () => {
      calls += 1;
      return reply("never");
    });
    wireChat(els, controller, () => {});
    els.input.value = "   ";
    submit();
    await new Promise((r) => setTimeout(r, 20));
    expect(calls).toBe(0);
    expect(els.input.disabled).toBe(false);
  });
});
