"""Per-second color tables and their renderings.

Codes: 0 red, 1 yellow, 2 green or WALK, 3 green flash or flashing don't
walk, 4 red-amber, -1 lights-off (permissive).  A table maps each movement to
one code per second of the cycle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import movements
from .diagnostics import Diagnostic, warning
from .errors import BadValue, SchemaError
from .timing import PlacedPhase

CODES = (-1, 0, 1, 2, 3, 4)

DEFAULT_PALETTE = {
    "-1": "#9e9e9e",
    "0": "#d32f2f",
    "1": "#fbc02d",
    "2": "#2e7d32",
    "3": "#81c784",
    "4": "#ef6c00",
}

GLYPHS = {0: ".", 1: "y", 2: "G", 3: "g", 4: "A", -1: "o"}
LEGEND = ". red   y yellow   G green/WALK   g green flash/FDW   A red-amber   o lights-off"


@dataclass
class ColorTable:
    cycle: int
    rows: dict = field(default_factory=dict)

    def sorted_rows(self):
        for name in sorted(self.rows, key=movements.sort_key):
            yield name, self.rows[name]


def _paint(row, interval, offset, length, code):
    for i in range(max(0, length)):
        row[interval.second(offset + i)] = code


def render_colors(placed, cycle: int):
    """Paint merged occurrences onto per-movement rows.

    Returns the table and rendering diagnostics.  dummyPhase holds time in
    the structure but gets no row; unmentioned movements get none either.
    """
    diags: list[Diagnostic] = []
    rows: dict[str, list] = {}
    for p in placed:
        if p.phase == movements.DUMMY:
            continue
        rows.setdefault(p.phase, [0] * cycle)

    for p in placed:
        if p.phase == movements.DUMMY:
            continue
        row = rows[p.phase]
        if p.prohibited:
            continue  # row stays red
        if p.permissive:
            _paint(row, p.interval, 0, p.interval.length, -1)
            continue
        if movements.is_pedestrian(p.phase):
            _render_ped(row, p, diags)
        else:
            _render_vehicular(row, p)

    ordered = {name: rows[name] for name in sorted(rows, key=movements.sort_key)}
    return ColorTable(cycle, ordered), diags


def _render_vehicular(row, p: PlacedPhase):
    q = p.params
    offset = q.late_start                      # late start stays red
    _paint(row, p.interval, offset, q.red_amber, 4)
    offset += q.red_amber
    _paint(row, p.interval, offset, q.green - q.green_flash, 2)
    offset += q.green - q.green_flash
    _paint(row, p.interval, offset, q.green_flash, 3)
    offset += q.green_flash
    _paint(row, p.interval, offset, q.yellow, 1)
    # allRed and earlyCutOff stay red


def _render_ped(row, p: PlacedPhase, diags):
    length = p.interval.length
    lead = p.params.late_start + p.ra_red      # red before WALK
    walk = length - lead - p.ped_clear - p.params.early_cut_off
    if walk < 0:
        diags.append(warning(
            "walk-negative",
            f"{p.phase}: split {length} too short for clearance; WALK rendered empty",
            p.phase,
        ))
        walk = 0
    offset = lead
    _paint(row, p.interval, offset, min(walk, length - offset), 2)
    offset += walk
    _paint(row, p.interval, offset, min(p.ped_clear, max(0, length - offset)), 3)


# --- exports ---------------------------------------------------------------------

def export_csv(table: ColorTable) -> str:
    header = "movement," + ",".join(str(t) for t in range(table.cycle))
    lines = [header]
    for name, row in table.sorted_rows():
        lines.append(name + "," + ",".join(str(c) for c in row))
    return "\n".join(lines) + "\n"


def export_json(table: ColorTable) -> str:
    payload = {"cycle": table.cycle, "rows": {name: row for name, row in table.sorted_rows()}}
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def export_svg(table: ColorTable, palette=None) -> str:
    palette = dict(DEFAULT_PALETTE, **(palette or {}))
    cell_w, cell_h, label_w, gap = 8, 18, 92, 2
    names = [name for name, _ in table.sorted_rows()]
    width = label_w + table.cycle * cell_w + 10
    height = 28 + len(names) * (cell_h + gap)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'font-family="monospace" font-size="11">',
        f'<text x="4" y="16">cycle {table.cycle}s</text>',
    ]
    y = 28
    for name in names:
        row = table.rows[name]
        parts.append(f'<text x="4" y="{y + 13}">{name}</text>')
        x = label_w
        start = 0
        for t in range(1, table.cycle + 1):
            if t == table.cycle or row[t] != row[start]:
                color = palette.get(str(row[start]), "#000000")
                w = (t - start) * cell_w
                parts.append(
                    f'<rect x="{x}" y="{y}" width="{w}" height="{cell_h}" fill="{color}">'
                    f'<title>{name} {start}-{t - 1}s code {row[start]}</title></rect>')
                x += w
                start = t
        y += cell_h + gap
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_times_table(table: ColorTable) -> str:
    names = [name for name, _ in table.sorted_rows()]
    label = max([len(n) for n in names], default=8)
    lines = [f"cycle {table.cycle}s", ""]
    ruler = " " * (label + 1)
    for t in range(0, table.cycle, 10):
        ruler += str(t).ljust(10)
    lines.append(ruler.rstrip())
    for name in names:
        row = table.rows[name]
        lines.append(name.ljust(label) + " " + "".join(GLYPHS[c] for c in row))
    lines.extend(["", LEGEND])
    return "\n".join(lines) + "\n"


def export(table: ColorTable, fmt: str, palette=None) -> str:
    if fmt == "json":
        return export_json(table)
    if fmt == "csv":
        return export_csv(table)
    if fmt == "svg":
        return export_svg(table, palette)
    if fmt == "text":
        return render_times_table(table)
    raise BadValue(f"unsupported export format {fmt!r}")


# --- imports ---------------------------------------------------------------------

def _check_row(name, row, cycle):
    if len(row) != cycle:
        raise SchemaError(f"row {name} has {len(row)} entries, cycle is {cycle}")
    for c in row:
        if c not in CODES:
            raise SchemaError(f"row {name} carries unknown code {c!r}")


def table_from_json(text: str) -> ColorTable:
    data = json.loads(text)
    cycle = data.get("cycle")
    if not isinstance(cycle, int) or cycle < 1:
        raise SchemaError("table json needs an integer cycle")
    rows = {}
    for name, row in data.get("rows", {}).items():
        row = [int(c) for c in row]
        _check_row(name, row, cycle)
        rows[name] = row
    return ColorTable(cycle, {n: rows[n] for n in sorted(rows, key=movements.sort_key)})


def table_from_csv(text: str) -> ColorTable:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith("movement,"):
        raise SchemaError("table csv needs a movement,0,1,... header")
    cycle = len(lines[0].split(",")) - 1
    rows = {}
    for line in lines[1:]:
        cells = line.split(",")
        name, row = cells[0], [int(c) for c in cells[1:]]
        _check_row(name, row, cycle)
        rows[name] = row
    return ColorTable(cycle, {n: rows[n] for n in sorted(rows, key=movements.sort_key)})
