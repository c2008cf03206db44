import { describe, expect, it } from "vitest";

import type { Report, TableJson } from "../src/api.js";
import { buildGrid, overlayKey } from "../src/gridmodel.js";

const TABLE: TableJson = {
  cycle: 5,
  rows: {
    NBT: [2, 2, 1, 0, 0],
    EBT: [0, 0, 0, 2, 2],
    NBR: [-1, -1, -1, -1, -1],
  },
};

function reportWith(errors: Report["errors"], warnings: Report["errors"] = []): Report {
  return { verdict: errors.length > 0 ? "invalid" : "valid", errors, warnings };
}

describe("buildGrid", () => {
  it("keeps the server's row order and cell codes untouched", () => {
    const model = buildGrid(TABLE, null);
    expect(model.cycle).toBe(5);
    expect(model.rows.map((r) => r.movement)).toEqual(["NBT", "EBT", "NBR"]);
    expect(model.rows[0]!.cells).toEqual([2, 2, 1, 0, 0]);
    expect(model.rows[2]!.cells).toEqual([-1, -1, -1, -1, -1]);
    expect(model.overlays.size).toBe(0);
    expect(model.findings).toEqual([]);
  });

  it("marks every (movement, second) pair of an error finding", () => {
    const report = reportWith([
      { code: "conflict", message: "x", movements: ["NBT", "EBT"], seconds: [0, 4] },
    ]);
    const model = buildGrid(TABLE, report);
    expect(model.overlays).toEqual(
      new Set([
        overlayKey("NBT", 0),
        overlayKey("NBT", 4),
        overlayKey("EBT", 0),
        overlayKey("EBT", 4),
      ]),
    );
    expect(model.findings).toHaveLength(1);
  });

  it("skips finding movements that have no row", () => {
    const report = reportWith([
      { code: "walk", message: "x", movements: ["XPED"], seconds: [1, 2] },
    ]);
    expect(buildGrid(TABLE, report).overlays.size).toBe(0);
  });

  it("does not overlay warnings", () => {
    const report = reportWith(
      [],
      [{ code: "missing-critical", message: "x", movements: ["NBT"], seconds: [] }],
    );
    const model = buildGrid(TABLE, report);
    expect(model.overlays.size).toBe(0);
    expect(model.findings).toEqual([]);
  });
});
