/* Reshape API table + report data into the timeline grid. Pure data
 * plumbing: cell codes and overlay seconds are taken as served. */

import type { Finding, Report, TableJson } from "./api.js";

export interface GridRow {
  movement: string;
  cells: number[];
}

export interface GridModel {
  cycle: number;
  rows: GridRow[];
  /* seconds flagged by a validation error, keyed movement:second */
  overlays: Set<string>;
  findings: Finding[];
}

export function overlayKey(movement: string, second: number): string {
  return `${movement}:${second}`;
}

export function buildGrid(table: TableJson, report: Report | null): GridModel {
  const rows: GridRow[] = Object.entries(table.rows).map(
    ([movement, cells]) => ({ movement, cells }),
  );

  const overlays = new Set<string>();
  const findings = report ? report.errors : [];
  for (const finding of findings) {
    for (const movement of finding.movements) {
      if (!(movement in table.rows)) continue;
      for (const second of finding.seconds) {
        overlays.add(overlayKey(movement, second));
      }
    }
  }

  return { cycle: table.cycle, rows, overlays, findings };
}
