import { describe, expect, it } from "vitest";

import { CODES, CODE_LABELS, PALETTE, colorFor, labelFor } from "../src/palette.js";

describe("palette", () => {
  it("covers exactly the six signal codes", () => {
    expect(CODES).toEqual([-1, 0, 1, 2, 3, 4]);
    expect(Object.keys(CODE_LABELS).sort()).toEqual(Object.keys(PALETTE).sort());
  });

  it("assigns every code a distinct colour", () => {
    const colours = CODES.map(colorFor);
    expect(new Set(colours).size).toBe(CODES.length);
    for (const colour of colours) {
      expect(colour).toMatch(/^#[0-9a-f]{6}$/);
    }
  });

  it("keeps lights-off visually distinct from red", () => {
    expect(colorFor(-1)).not.toBe(colorFor(0));
  });

  it("labels the walk-phase codes", () => {
    expect(labelFor(2)).toContain("WALK");
    expect(labelFor(3)).toContain("FDW");
    expect(labelFor(-1)).toContain("off");
  });

  it("falls back safely for unknown codes", () => {
    expect(colorFor(99)).toBe("#000000");
    expect(labelFor(99)).toBe("code 99");
  });
});
