#!/usr/bin/env python3
"""Hand-stepped golden table generator.

Every row below is a hand-derived run-length list (code, start, length)
obtained by stepping the plan described in each corpus case second by
second, independently of the package under src/.  This script only expands
those runs into per-second rows and writes the golden CSV files; it imports
nothing from the package and must stay that way so the goldens remain an
independent oracle.

Run from the repository root:

    python tools/make_goldens.py
"""

import os
import sys

CORPUS = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "corpus")

# Canonical row order used by the table exporters.
CANONICAL = [
    "NBL", "NBT", "NBR", "NBU",
    "SBL", "SBT", "SBR", "SBU",
    "EBL", "EBT", "EBR", "EBU",
    "WBL", "WBT", "WBR", "WBU",
    "NorthPed", "SouthPed", "EastPed", "WestPed",
    "NorthPedA", "NorthPedB", "SouthPedA", "SouthPedB",
    "EastPedA", "EastPedB", "WestPedA", "WestPedB",
]


def expand(cycle, runs):
    """Expand (code, start, length) runs into a per-second row of `cycle` codes."""
    row = [None] * cycle
    for code, start, length in runs:
        for t in range(start, start + length):
            if row[t] is not None:
                raise SystemExit(f"overlapping runs at second {t}")
            row[t] = code
    if any(v is None for v in row):
        missing = [t for t, v in enumerate(row) if v is None]
        raise SystemExit(f"uncovered seconds {missing[:8]}...")
    return row


def write_case(case, cycle, rows):
    path = os.path.join(CORPUS, case)
    os.makedirs(path, exist_ok=True)
    order = [m for m in CANONICAL if m in rows]
    if set(order) != set(rows):
        raise SystemExit(f"{case}: unknown movement in {sorted(rows)}")
    lines = ["movement," + ",".join(str(t) for t in range(cycle))]
    for movement in order:
        row = expand(cycle, rows[movement])
        lines.append(movement + "," + ",".join(str(c) for c in row))
    with open(os.path.join(path, "golden.csv"), "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"{case}: {len(order)} rows x {cycle} s")


def main():
    # fig3: two-ring block then two stages, C=110.
    # Ring 1 NBL 21 / SBT 44, ring 2 SBL 39 / NBT 26, then WBL+EBL green 17
    # (split 20), WBT+EBT green 22 (split 25).  All phases green-flash 3,
    # default yellow 3.  NBR permissive over WBL; WBR standalone 88..21;
    # north/south peds over WBT/EBT (pedClear = parent yellow = 3).
    fig3 = {
        "NBL": [(2, 0, 15), (3, 15, 3), (1, 18, 3), (0, 21, 89)],
        "NBT": [(0, 0, 39), (2, 39, 20), (3, 59, 3), (1, 62, 3), (0, 65, 45)],
        "NBR": [(0, 0, 65), (-1, 65, 20), (0, 85, 25)],
        "SBL": [(2, 0, 33), (3, 33, 3), (1, 36, 3), (0, 39, 71)],
        "SBT": [(0, 0, 21), (2, 21, 38), (3, 59, 3), (1, 62, 3), (0, 65, 45)],
        "EBL": [(0, 0, 65), (2, 65, 14), (3, 79, 3), (1, 82, 3), (0, 85, 25)],
        "EBT": [(0, 0, 85), (2, 85, 19), (3, 104, 3), (1, 107, 3)],
        "WBL": [(0, 0, 65), (2, 65, 14), (3, 79, 3), (1, 82, 3), (0, 85, 25)],
        "WBT": [(0, 0, 85), (2, 85, 19), (3, 104, 3), (1, 107, 3)],
        "WBR": [(2, 0, 15), (3, 15, 3), (1, 18, 3), (0, 21, 67), (2, 88, 22)],
        "NorthPed": [(0, 0, 85), (2, 85, 22), (3, 107, 3)],
        "SouthPed": [(0, 0, 85), (2, 85, 22), (3, 107, 3)],
    }
    write_case("fig3", 110, fig3)

    # fig3_full: same plan with all four default peds (EastPed over SBT
    # [21,65) walk 41, WestPed over NBT [39,65) walk 23).
    fig3_full = dict(fig3)
    fig3_full["EastPed"] = [(0, 0, 21), (2, 21, 41), (3, 62, 3), (0, 65, 45)]
    fig3_full["WestPed"] = [(0, 0, 39), (2, 39, 23), (3, 62, 3), (0, 65, 45)]
    write_case("fig3_full", 110, fig3_full)

    # fig2a: pure two-ring plan, C=117.  Ring 1 WBL 33, EBT 24, NBL 26,
    # SBT 34; ring 2 EBL 18, WBT 39, SBL 26, NBT 34.  Default yellow 3 only.
    fig2a = {
        "NBL": [(0, 0, 57), (2, 57, 23), (1, 80, 3), (0, 83, 34)],
        "NBT": [(0, 0, 83), (2, 83, 31), (1, 114, 3)],
        "SBL": [(0, 0, 57), (2, 57, 23), (1, 80, 3), (0, 83, 34)],
        "SBT": [(0, 0, 83), (2, 83, 31), (1, 114, 3)],
        "EBL": [(2, 0, 15), (1, 15, 3), (0, 18, 99)],
        "EBT": [(0, 0, 33), (2, 33, 21), (1, 54, 3), (0, 57, 60)],
        "WBL": [(2, 0, 30), (1, 30, 3), (0, 33, 84)],
        "WBT": [(0, 0, 18), (2, 18, 36), (1, 54, 3), (0, 57, 60)],
    }
    write_case("fig2a", 117, fig2a)

    # fig2b: five stages 25/33/26/20/12, C=116, WBT+EBT served twice
    # (stages 2 and 5, not adjacent, so not merged); NorthPed overlaps only
    # the first WBT occurrence.
    fig2b = {
        "NBL": [(0, 0, 58), (2, 58, 23), (1, 81, 3), (0, 84, 32)],
        "NBT": [(0, 0, 84), (2, 84, 17), (1, 101, 3), (0, 104, 12)],
        "SBL": [(0, 0, 58), (2, 58, 23), (1, 81, 3), (0, 84, 32)],
        "SBT": [(0, 0, 84), (2, 84, 17), (1, 101, 3), (0, 104, 12)],
        "EBL": [(2, 0, 22), (1, 22, 3), (0, 25, 91)],
        "EBT": [(0, 0, 25), (2, 25, 30), (1, 55, 3), (0, 58, 46), (2, 104, 9), (1, 113, 3)],
        "WBL": [(2, 0, 22), (1, 22, 3), (0, 25, 91)],
        "WBT": [(0, 0, 25), (2, 25, 30), (1, 55, 3), (0, 58, 46), (2, 104, 9), (1, 113, 3)],
        "NorthPed": [(0, 0, 25), (2, 25, 30), (3, 55, 3), (0, 58, 58)],
    }
    write_case("fig2b", 116, fig2b)

    # fig2c: ring block (WBL 33/EBT 24 | EBL 18/WBT 39) then stages NBL+SBL 26,
    # NBT+SBT 34.  Same timings as fig2a, different structure style.
    write_case("fig2c", 117, fig2a)

    # fig2d: ring 1 WBL 34, EBT 24, NBL 26, SBT 32; ring 2 EBL 25, WBT 33,
    # nested stage {SBL, EBR} 26, NBT 32.  C=116.
    fig2d = {
        "NBL": [(0, 0, 58), (2, 58, 23), (1, 81, 3), (0, 84, 32)],
        "NBT": [(0, 0, 84), (2, 84, 29), (1, 113, 3)],
        "SBL": [(0, 0, 58), (2, 58, 23), (1, 81, 3), (0, 84, 32)],
        "SBT": [(0, 0, 84), (2, 84, 29), (1, 113, 3)],
        "EBL": [(2, 0, 22), (1, 22, 3), (0, 25, 91)],
        "EBT": [(0, 0, 34), (2, 34, 21), (1, 55, 3), (0, 58, 58)],
        "EBR": [(0, 0, 58), (2, 58, 23), (1, 81, 3), (0, 84, 32)],
        "WBL": [(2, 0, 31), (1, 31, 3), (0, 34, 82)],
        "WBT": [(0, 0, 25), (2, 25, 30), (1, 55, 3), (0, 58, 58)],
    }
    write_case("fig2d", 116, fig2d)

    # c11: ring 1 WBL 49, nested stages {EBT, SouthPed} 53 and
    # {EastPed, NBL} 36; ring 2 WestPed 28, WBT 74.  C=138.  Ped majors have
    # no change intervals: full-split WALK.
    c11 = {
        "NBL": [(0, 0, 102), (2, 102, 33), (1, 135, 3)],
        "EBT": [(0, 0, 49), (2, 49, 50), (1, 99, 3), (0, 102, 36)],
        "WBL": [(2, 0, 46), (1, 46, 3), (0, 49, 89)],
        "WBT": [(0, 0, 28), (2, 28, 71), (1, 99, 3), (0, 102, 36)],
        "SouthPed": [(0, 0, 49), (2, 49, 53), (0, 102, 36)],
        "EastPed": [(0, 0, 102), (2, 102, 36)],
        "WestPed": [(2, 0, 28), (0, 28, 110)],
    }
    write_case("c11", 138, c11)

    # c11_1: c11 plus permissive EBR 60..cycleLength and permissive NBR
    # 100..30 (wraps).
    c11_1 = dict(c11)
    c11_1["EBR"] = [(0, 0, 60), (-1, 60, 78)]
    c11_1["NBR"] = [(-1, 0, 30), (0, 30, 70), (-1, 100, 38)]
    write_case("c11_1", 138, c11_1)

    # c39: four stages NBT+SBT 31, NBL+SBL 24, EBT+WBT 33, EBL+WBL 27, C=115.
    # Default peds NorthPed/SouthPed over WBT/EBT, EastPed over SBT, and the
    # two-stage halves WestPedA=[NBT,NBL] (merged 0..55) and
    # WestPedB=[NBT,EBL] (merged across the cycle end, 88..31).
    c39 = {
        "NBL": [(0, 0, 31), (2, 31, 21), (1, 52, 3), (0, 55, 60)],
        "NBT": [(2, 0, 28), (1, 28, 3), (0, 31, 84)],
        "SBL": [(0, 0, 31), (2, 31, 21), (1, 52, 3), (0, 55, 60)],
        "SBT": [(2, 0, 28), (1, 28, 3), (0, 31, 84)],
        "EBL": [(0, 0, 88), (2, 88, 24), (1, 112, 3)],
        "EBT": [(0, 0, 55), (2, 55, 30), (1, 85, 3), (0, 88, 27)],
        "WBL": [(0, 0, 88), (2, 88, 24), (1, 112, 3)],
        "WBT": [(0, 0, 55), (2, 55, 30), (1, 85, 3), (0, 88, 27)],
        "NorthPed": [(0, 0, 55), (2, 55, 30), (3, 85, 3), (0, 88, 27)],
        "SouthPed": [(0, 0, 55), (2, 55, 30), (3, 85, 3), (0, 88, 27)],
        "EastPed": [(2, 0, 28), (3, 28, 3), (0, 31, 84)],
        "WestPedA": [(2, 0, 52), (3, 52, 3), (0, 55, 60)],
        "WestPedB": [(2, 0, 28), (3, 28, 3), (0, 31, 57), (2, 88, 27)],
    }
    write_case("c39", 115, c39)

    # c39_1: SBL replaced by a dummy phase; identical timing, no SBL row.
    c39_1 = {m: r for m, r in c39.items() if m != "SBL"}
    write_case("c39_1", 115, c39_1)

    # allped: NBT+SBT 30, EBT+WBT 30, exclusive pedestrian stage 30.  C=90.
    allped = {
        "NBT": [(2, 0, 27), (1, 27, 3), (0, 30, 60)],
        "SBT": [(2, 0, 27), (1, 27, 3), (0, 30, 60)],
        "EBT": [(0, 0, 30), (2, 30, 27), (1, 57, 3), (0, 60, 30)],
        "WBT": [(0, 0, 30), (2, 30, 27), (1, 57, 3), (0, 60, 30)],
        "NorthPed": [(0, 0, 60), (2, 60, 30)],
        "SouthPed": [(0, 0, 60), (2, 60, 30)],
        "EastPed": [(0, 0, 60), (2, 60, 30)],
        "WestPed": [(0, 0, 60), (2, 60, 30)],
    }
    write_case("allped", 90, allped)

    # protected_permissive: WBL+EBL protected 20, WBT+EBT 40, WBL permissive
    # 20..60 on top.  C=60.  The permissive window overlaps EBT's green and
    # must pass validation via the left-turn exception.
    pp = {
        "EBL": [(2, 0, 17), (1, 17, 3), (0, 20, 40)],
        "EBT": [(0, 0, 20), (2, 20, 37), (1, 57, 3)],
        "WBL": [(2, 0, 17), (1, 17, 3), (-1, 20, 40)],
        "WBT": [(0, 0, 20), (2, 20, 37), (1, 57, 3)],
    }
    write_case("protected_permissive", 60, pp)

    # reservice_merge: stages {WBL, WBT} 15, {WBT, EBT} 24, {NBT, SBT} 30.
    # WBT's two adjacent occurrences merge into 0..39 (interior yellow
    # dropped).  C=69.
    reservice = {
        "NBT": [(0, 0, 39), (2, 39, 27), (1, 66, 3)],
        "SBT": [(0, 0, 39), (2, 39, 27), (1, 66, 3)],
        "EBT": [(0, 0, 15), (2, 15, 21), (1, 36, 3), (0, 39, 30)],
        "WBL": [(2, 0, 12), (1, 12, 3), (0, 15, 54)],
        "WBT": [(2, 0, 36), (1, 36, 3), (0, 39, 30)],
    }
    write_case("reservice_merge", 69, reservice)

    # standalone_greens: no structure, declared C=80.  EBT startTime 0 /
    # endTime 40; WBT greenStart 45 / greenEnd 72 (split 45..75 after adding
    # the default yellow).
    standalone = {
        "EBT": [(2, 0, 37), (1, 37, 3), (0, 40, 40)],
        "WBT": [(0, 0, 45), (2, 45, 27), (1, 72, 3), (0, 75, 5)],
    }
    write_case("standalone_greens", 80, standalone)

    # malformed_unlabeled / malformed_flat_ring: WBL 20 then WBT 40, C=60.
    # The malformed IRs repair to the same two sequential phases.
    two_phase = {
        "WBL": [(2, 0, 17), (1, 17, 3), (0, 20, 40)],
        "WBT": [(0, 0, 20), (2, 20, 37), (1, 57, 3)],
    }
    write_case("malformed_unlabeled", 60, two_phase)
    write_case("malformed_flat_ring", 60, two_phase)

    # malformed_overthink: WBL+EBL 20, WBT+EBT 40, EBR standalone 20..60
    # whose record carries a contradictory split that cleansing deletes.
    overthink = {
        "EBL": [(2, 0, 17), (1, 17, 3), (0, 20, 40)],
        "EBT": [(0, 0, 20), (2, 20, 37), (1, 57, 3)],
        "EBR": [(0, 0, 20), (2, 20, 37), (1, 57, 3)],
        "WBL": [(2, 0, 17), (1, 17, 3), (0, 20, 40)],
        "WBT": [(0, 0, 20), (2, 20, 37), (1, 57, 3)],
    }
    write_case("malformed_overthink", 60, overthink)

    # zh_stage: four stages 30/24/33/27 with all four default peds, C=114.
    zh_stage = {
        "NBL": [(0, 0, 30), (2, 30, 21), (1, 51, 3), (0, 54, 60)],
        "NBT": [(2, 0, 27), (1, 27, 3), (0, 30, 84)],
        "SBL": [(0, 0, 30), (2, 30, 21), (1, 51, 3), (0, 54, 60)],
        "SBT": [(2, 0, 27), (1, 27, 3), (0, 30, 84)],
        "EBL": [(0, 0, 87), (2, 87, 24), (1, 111, 3)],
        "EBT": [(0, 0, 54), (2, 54, 30), (1, 84, 3), (0, 87, 27)],
        "WBL": [(0, 0, 87), (2, 87, 24), (1, 111, 3)],
        "WBT": [(0, 0, 54), (2, 54, 30), (1, 84, 3), (0, 87, 27)],
        "NorthPed": [(0, 0, 54), (2, 54, 30), (3, 84, 3), (0, 87, 27)],
        "SouthPed": [(0, 0, 54), (2, 54, 30), (3, 84, 3), (0, 87, 27)],
        "EastPed": [(2, 0, 27), (3, 27, 3), (0, 30, 84)],
        "WestPed": [(2, 0, 27), (3, 27, 3), (0, 30, 84)],
    }
    write_case("zh_stage", 114, zh_stage)

    # zh_ring: same plan as fig2a described in Chinese.
    write_case("zh_ring", 117, fig2a)

    # zh_edit: zh_stage plan, second turn changes the through stage to 35 s.
    # Stages 35/24/33/27, C=119.
    zh_edit = {
        "NBL": [(0, 0, 35), (2, 35, 21), (1, 56, 3), (0, 59, 60)],
        "NBT": [(2, 0, 32), (1, 32, 3), (0, 35, 84)],
        "SBL": [(0, 0, 35), (2, 35, 21), (1, 56, 3), (0, 59, 60)],
        "SBT": [(2, 0, 32), (1, 32, 3), (0, 35, 84)],
        "EBL": [(0, 0, 92), (2, 92, 24), (1, 116, 3)],
        "EBT": [(0, 0, 59), (2, 59, 30), (1, 89, 3), (0, 92, 27)],
        "WBL": [(0, 0, 92), (2, 92, 24), (1, 116, 3)],
        "WBT": [(0, 0, 59), (2, 59, 30), (1, 89, 3), (0, 92, 27)],
        "NorthPed": [(0, 0, 59), (2, 59, 30), (3, 89, 3), (0, 92, 27)],
        "SouthPed": [(0, 0, 59), (2, 59, 30), (3, 89, 3), (0, 92, 27)],
        "EastPed": [(2, 0, 32), (3, 32, 3), (0, 35, 84)],
        "WestPed": [(2, 0, 32), (3, 32, 3), (0, 35, 84)],
    }
    write_case("zh_edit", 119, zh_edit)

    print("done")
    return 0


if __name__ == "__main__":
    sys.exit(main())
