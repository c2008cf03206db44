"""Diagnostics attached to plans and validation reports.

A Diagnostic is a non-fatal observation (repair note, warning) or a lint
error; validation findings reuse the same shape so the CLI and the HTTP API
serialize them identically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

ERROR = "error"
WARNING = "warning"

# Repair codes counted by the benchmark error taxonomy.
STRUCTURE_REPAIRS = frozenset({
    "repair-unlabeled-structure",
    "repair-flat-ring",
    "repair-flat-stage",
})
SPLIT_REPAIR = "repair-split-conflict"


@dataclass(frozen=True)
class Diagnostic:
    code: str
    severity: str
    message: str
    phase: str | None = None
    seconds: tuple[int, ...] = field(default=())

    def to_dict(self) -> dict:
        out = {"code": self.code, "severity": self.severity, "message": self.message}
        if self.phase is not None:
            out["phase"] = self.phase
        if self.seconds:
            out["seconds"] = list(self.seconds)
        return out


def warning(code: str, message: str, phase: str | None = None) -> Diagnostic:
    return Diagnostic(code, WARNING, message, phase)


def error(code: str, message: str, phase: str | None = None) -> Diagnostic:
    return Diagnostic(code, ERROR, message, phase)


def has_errors(diags) -> bool:
    return any(d.severity == ERROR for d in diags)
