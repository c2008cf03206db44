"""Typed errors raised along the plan pipeline.

Every failure the pipeline can produce deliberately is an instance of
``PlanError``; ``AssemblyError`` wraps one with the pipeline stage that raised
it.  Anything else escaping the pipeline is a bug.
"""

from __future__ import annotations


class PlanError(Exception):
    """Base class for all deliberate pipeline failures."""


# --- parsing ---------------------------------------------------------------

class NoJsonFound(PlanError):
    """The reply text contains no JSON object with result keys."""


class SchemaError(PlanError):
    """A result payload has the wrong shape (non-list results, bad node types)."""


class BadValue(PlanError):
    """A field value is out of range: negative or fractional seconds, bad order."""


# --- cleansing -------------------------------------------------------------

class UnknownPhase(PlanError):
    """A phase name matches no movement and no configured alias."""


class NoDefaultConfigured(PlanError):
    """A pedestrian phase asked for default parents but the config has none."""


class StructureUnrepairable(PlanError):
    """A structure body matches neither the wire format nor a known malformation."""


# --- timing ----------------------------------------------------------------

class NoCycleLength(PlanError):
    """Nothing fixes the cycle length."""


class EmptyStructureNoCycle(NoCycleLength):
    """No structure, no declared cycle length, and no placeable records."""


class SplitExceedsCycle(PlanError):
    """A split is longer than the cycle."""


class DegenerateInterval(PlanError):
    """An interval came out empty or spanning the whole cycle and beyond."""


class UnderSpecified(PlanError):
    """A record carries only half of a locating pair (e.g. startTime alone)."""


class InvalidDuration(PlanError):
    """A split cannot hold its own change intervals (green would be negative)."""


# --- overlay ---------------------------------------------------------------

class ParentNotFound(PlanError):
    """An overlapping phase references a parent that was never placed."""


class ParentOccurrenceMissing(PlanError):
    """overlapNum points at a parent occurrence that does not exist."""


class NonContiguousComponent(PlanError):
    """A merge component does not cover a single circular interval (bug guard)."""


# --- gateway ---------------------------------------------------------------

class TransportError(PlanError):
    """The completion transport failed (network, bad payload, replay miss)."""


class ReplayMiss(TransportError):
    """No recorded fixture matches the request digest."""


class UnsupportedLanguage(PlanError):
    """No prompt asset exists for the requested language."""


class DatasetError(PlanError):
    """A benchmark case directory is missing or unreadable."""


# --- orchestration ----------------------------------------------------------

class LintFailure(PlanError):
    """The cleansed IR still carries error-severity lint findings."""

    def __init__(self, findings):
        codes = ", ".join(sorted({f.code for f in findings}))
        super().__init__(f"lint errors: {codes}")
        self.findings = tuple(findings)


class AssemblyError(PlanError):
    """A pipeline stage failed; carries the stage name and the original error."""

    def __init__(self, stage: str, cause: PlanError):
        super().__init__(f"{stage}: {cause}")
        self.stage = stage
        self.cause = cause
