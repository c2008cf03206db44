/* The one theme file: color codes as the server emits them, mirrored from
 * its SVG palette so downloads and the on-screen grid agree visually. */

export const PALETTE: Record<string, string> = {
  "-1": "#9e9e9e",
  "0": "#d32f2f",
  "1": "#fbc02d",
  "2": "#2e7d32",
  "3": "#81c784",
  "4": "#ef6c00",
};

export const CODE_LABELS: Record<string, string> = {
  "-1": "lights off (permissive)",
  "0": "red",
  "1": "yellow",
  "2": "green / WALK",
  "3": "green flash / FDW",
  "4": "red-amber",
};

export const CODES = Object.keys(PALETTE).map(Number).sort((a, b) => a - b);

export function colorFor(code: number): string {
  return PALETTE[String(code)] ?? "#000000";
}

export function labelFor(code: number): string {
  return CODE_LABELS[String(code)] ?? `code ${code}`;
}
