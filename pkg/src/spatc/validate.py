"""Safety and completeness checks on an assembled table.

A plan is invalid when conflicting movements move at the same second or a
pedestrian WALK window is too short; completeness problems (missing critical
movements, movements this intersection cannot signal) are warnings only.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import movements
from .emit import ColorTable

STOPPED = (0, 4)  # red and red-amber hold traffic; 1/2/3/-1 do not


@dataclass(frozen=True)
class Finding:
    code: str
    message: str
    movements: tuple = ()
    seconds: tuple = ()

    def to_dict(self) -> dict:
        out = {"code": self.code, "message": self.message}
        if self.movements:
            out["movements"] = list(self.movements)
        if self.seconds:
            out["seconds"] = list(self.seconds)
        return out


@dataclass(frozen=True)
class ValidationReport:
    errors: tuple = ()
    warnings: tuple = ()

    @property
    def verdict(self) -> str:
        return "invalid" if self.errors else "valid"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "errors": [f.to_dict() for f in self.errors],
            "warnings": [f.to_dict() for f in self.warnings],
        }


def check_conflicts(table: ColorTable, cfg):
    """Seconds where both members of a conflicting pair are moving.

    The permissive-left exception only helps while the left turn actually
    shows lights-off at that second.
    """
    findings = []
    present = sorted(table.rows, key=movements.sort_key)
    for i, a in enumerate(present):
        for b in present[i + 1:]:
            if not cfg.conflicting(a, b):
                continue
            excepted = cfg.excepted(a, b)
            row_a, row_b = table.rows[a], table.rows[b]
            bad = []
            for t in range(table.cycle):
                ca, cb = row_a[t], row_b[t]
                if ca in STOPPED or cb in STOPPED:
                    continue
                if excepted:
                    left = ca if movements.is_left_turn(a) else cb
                    if left == -1:
                        continue
                bad.append(t)
            if bad:
                findings.append(Finding(
                    "conflict",
                    f"{a} and {b} both move during {len(bad)} second(s)",
                    (a, b),
                    tuple(bad),
                ))
    return findings


def _circular_runs(row, code):
    """Maximal circular runs of one code as (start, length) pairs."""
    cycle = len(row)
    seconds = {t for t, c in enumerate(row) if c == code}
    if not seconds:
        return []
    if len(seconds) == cycle:
        return [(0, cycle)]
    runs = []
    for t in sorted(seconds):
        if (t - 1) % cycle not in seconds:
            length = 0
            while (t + length) % cycle in seconds:
                length += 1
            runs.append((t, length))
    return runs


def check_walk(table: ColorTable, cfg):
    """Every WALK window in a pedestrian row must meet the minimum."""
    findings = []
    for name, row in table.sorted_rows():
        if not movements.is_pedestrian(name):
            continue
        runs = _circular_runs(row, 2)
        if not runs:
            findings.append(Finding(
                "walk",
                f"{name} never reaches WALK",
                (name,),
            ))
            continue
        for start, length in runs:
            if length < cfg.min_walk:
                findings.append(Finding(
                    "walk",
                    f"{name} WALK lasts {length}s at {start}s, minimum is {cfg.min_walk}s",
                    (name,),
                    tuple((start + i) % table.cycle for i in range(length)),
                ))
    return findings


def check_completeness(table: ColorTable, cfg):
    findings = []
    for name in cfg.critical:
        if name not in table.rows:
            findings.append(Finding(
                "missing-critical",
                f"critical movement {name} is absent from the plan",
                (name,),
            ))
    for name in table.rows:
        if name not in cfg.movements:
            findings.append(Finding(
                "unsupported-movement",
                f"{name} is not operable at this intersection",
                (name,),
            ))
    return findings


def run_validation(table: ColorTable, cfg) -> ValidationReport:
    errors = tuple(check_conflicts(table, cfg)) + tuple(check_walk(table, cfg))
    warnings = tuple(check_completeness(table, cfg))
    return ValidationReport(errors, warnings)


# --- golden comparison ------------------------------------------------------------

@dataclass(frozen=True)
class MatchReport:
    correct: bool
    cycle_mismatch: bool = False
    missing_rows: tuple = ()
    extra_rows: tuple = ()
    diffs: tuple = ()  # (movement, second, expected, got)

    def to_dict(self) -> dict:
        return {
            "correct": self.correct,
            "cycleMismatch": self.cycle_mismatch,
            "missingRows": list(self.missing_rows),
            "extraRows": list(self.extra_rows),
            "diffs": [list(d) for d in self.diffs],
        }


def compare_to_golden(actual: ColorTable, golden: ColorTable) -> MatchReport:
    """Exact per-second match over identical row sets; zero tolerance."""
    if actual.cycle != golden.cycle:
        return MatchReport(correct=False, cycle_mismatch=True)
    missing = tuple(sorted(set(golden.rows) - set(actual.rows), key=movements.sort_key))
    extra = tuple(sorted(set(actual.rows) - set(golden.rows), key=movements.sort_key))
    diffs = []
    for name in sorted(set(golden.rows) & set(actual.rows), key=movements.sort_key):
        grow, arow = golden.rows[name], actual.rows[name]
        for t in range(golden.cycle):
            if grow[t] != arow[t]:
                diffs.append((name, t, grow[t], arow[t]))
    correct = not missing and not extra and not diffs
    return MatchReport(correct, False, missing, extra, tuple(diffs))
