"""Plan IR: the three-result JSON contract, parsing, serialization, linting.

A plan arrives as one JSON object with keys ``result1`` (phase sequence
structure), ``result2`` (per-phase attribute records) and ``result3`` (cycle
length or null), usually embedded in chat prose or code fences.  This module
extracts and types that object without judging its semantics; repairs live in
``cleanse`` and placement in ``timing``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from .diagnostics import Diagnostic, warning
from .errors import BadValue, NoJsonFound, SchemaError

STAGE = "stageStyle"
RING = "ringStyle"
BARE = "bare"  # unlabeled list where a structure node was expected

CYCLE_TOKEN = "cycleLength"

DURATION_KEYS = ("split", "greenTime")
SECOND_KEYS = (
    "split", "greenTime", "startTime", "endTime", "greenStart", "greenEnd",
    "lateStart", "earlyCutOff", "yellow", "redAmber", "allRed", "greenFlash",
    "pedClear",
)
FLAG_KEYS = ("isPermissive", "isProhibited")
# Canonical attribute emission order.
ATTR_KEYS = ("phaseOrder",) + SECOND_KEYS + ("parentPhase", "overlapNum") + FLAG_KEYS


def _int_seconds(value, where: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise BadValue(f"{where}: seconds must be a whole number, got {value!r}")
    if isinstance(value, float):
        if not value.is_integer():
            raise BadValue(f"{where}: fractional seconds {value!r} are not rounded")
        value = int(value)
    if value < minimum:
        raise BadValue(f"{where}: value {value} below {minimum}")
    return value


@dataclass(frozen=True)
class PhaseEntry:
    """One phase listed in the structure with its inline duration."""

    phase: str
    split: int | None = None
    green_time: int | None = None

    def duration_key(self):
        return "split" if self.split is not None else "greenTime"


@dataclass(frozen=True)
class StructureNode:
    """One element of result1.

    stageStyle body: tuple of stages, each a tuple of PhaseEntry.
    ringStyle body: tuple of items, each either a ring (tuple of PhaseEntry /
    nested stageStyle StructureNode) or, in the un-nested malformation, a bare
    PhaseEntry.  bare body: tuple of PhaseEntry (unlabeled list malformation).
    """

    style: str
    body: tuple


@dataclass(frozen=True)
class AttributeRecord:
    phase: str
    order: int
    attrs: dict = field(default_factory=dict)
    extras: dict = field(default_factory=dict)

    def get(self, key, default=None):
        return self.attrs.get(key, default)

    def has(self, key) -> bool:
        return key in self.attrs

    @property
    def permissive(self) -> bool:
        return bool(self.attrs.get("isPermissive"))

    @property
    def prohibited(self) -> bool:
        return bool(self.attrs.get("isProhibited"))

    def with_attrs(self, **changes) -> "AttributeRecord":
        attrs = dict(self.attrs)
        for key, value in changes.items():
            if value is None:
                attrs.pop(key, None)
            else:
                attrs[key] = value
        return replace(self, attrs=attrs)


@dataclass(frozen=True)
class PlanIR:
    sequence: tuple = ()
    attributes: tuple = ()
    cycle_length: int | None = None
    diagnostics: tuple = field(default=(), compare=False)

    def with_diagnostics(self, extra) -> "PlanIR":
        return replace(self, diagnostics=self.diagnostics + tuple(extra))


# --- wire decoding ----------------------------------------------------------

def _phase_entry(obj: dict, where: str, diags: list) -> PhaseEntry:
    if not isinstance(obj, dict) or len(obj) != 1:
        raise SchemaError(f"{where}: expected a single-key phase object, got {obj!r}")
    (phase, inner), = obj.items()
    if not isinstance(inner, dict):
        raise SchemaError(f"{where}: {phase} must map to an attribute object")
    split = green = None
    for key, value in inner.items():
        if key == "split":
            split = _int_seconds(value, f"{where}.{phase}.split")
        elif key == "greenTime":
            green = _int_seconds(value, f"{where}.{phase}.greenTime")
        else:
            diags.append(warning("unknown-key", f"{where}: {phase} carries unexpected key {key!r}", phase))
    if split is None and green is None:
        raise SchemaError(f"{where}: {phase} needs split or greenTime")
    return PhaseEntry(phase, split, green)


def _is_phase_object(item) -> bool:
    return isinstance(item, dict) and len(item) == 1 and next(iter(item)) not in (STAGE, RING)


def _parse_stage_body(body, where: str, diags: list) -> tuple:
    if not isinstance(body, list):
        raise SchemaError(f"{where}: stageStyle body must be a list")
    out = []
    for i, item in enumerate(body):
        if isinstance(item, list):
            out.append(tuple(_phase_entry(p, f"{where}[{i}]", diags) for p in item))
        elif _is_phase_object(item):
            # flat stage malformation, kept as-is for the cleanser
            out.append(_phase_entry(item, f"{where}[{i}]", diags))
        else:
            raise SchemaError(f"{where}[{i}]: expected a stage (list of phases)")
    return tuple(out)


def _parse_ring_body(body, where: str, diags: list) -> tuple:
    if not isinstance(body, list):
        raise SchemaError(f"{where}: ringStyle body must be a list")
    out = []
    for i, item in enumerate(body):
        if isinstance(item, list):
            ring = []
            for j, elem in enumerate(item):
                spot = f"{where}[{i}][{j}]"
                if isinstance(elem, dict) and len(elem) == 1 and next(iter(elem)) in (STAGE, RING):
                    ring.append(_parse_node(elem, spot, diags))
                else:
                    ring.append(_phase_entry(elem, spot, diags))
            out.append(tuple(ring))
        elif _is_phase_object(item):
            # un-nested ring malformation, kept as-is for the cleanser
            out.append(_phase_entry(item, f"{where}[{i}]", diags))
        elif isinstance(item, dict) and len(item) == 1 and next(iter(item)) in (STAGE, RING):
            out.append(_parse_node(item, f"{where}[{i}]", diags))
        else:
            raise SchemaError(f"{where}[{i}]: expected a ring (list of phases)")
    return tuple(out)


def _parse_node(node, where: str, diags: list) -> StructureNode:
    if isinstance(node, list):
        entries = tuple(_phase_entry(p, f"{where}[{i}]", diags) for i, p in enumerate(node))
        return StructureNode(BARE, entries)
    if isinstance(node, dict) and len(node) == 1:
        (style, body), = node.items()
        if style == STAGE:
            return StructureNode(STAGE, _parse_stage_body(body, where, diags))
        if style == RING:
            return StructureNode(RING, _parse_ring_body(body, where, diags))
    raise SchemaError(f"{where}: expected a stageStyle/ringStyle node or a phase list")


def _parse_record(obj, index: int, seen_counts: dict, diags: list) -> AttributeRecord:
    where = f"result2[{index}]"
    if not isinstance(obj, dict) or len(obj) != 1:
        raise SchemaError(f"{where}: expected a single-key phase record")
    (phase, inner), = obj.items()
    if not isinstance(inner, dict):
        raise SchemaError(f"{where}: {phase} must map to an attribute object")

    attrs = {}
    extras = {}
    for key, value in inner.items():
        spot = f"{where}.{phase}.{key}"
        if key == "phaseOrder":
            order = _int_seconds(value, spot, minimum=1)
            attrs[key] = order
        elif key == "endTime":
            if value == CYCLE_TOKEN:
                attrs[key] = CYCLE_TOKEN
            else:
                attrs[key] = _int_seconds(value, spot)
        elif key in SECOND_KEYS:
            attrs[key] = _int_seconds(value, spot)
        elif key == "parentPhase":
            if not isinstance(value, str) or not value:
                raise BadValue(f"{spot}: parentPhase must be a phase name")
            attrs[key] = value
        elif key == "overlapNum":
            attrs[key] = _int_seconds(value, spot)
        elif key in FLAG_KEYS:
            if isinstance(value, bool):
                attrs[key] = value
            elif value in (0, 1):
                attrs[key] = bool(value)
            else:
                raise BadValue(f"{spot}: flag must be 0/1 or boolean")
        else:
            extras[key] = value
            diags.append(warning("unknown-key", f"{where}: {phase} carries unknown attribute {key!r}", phase))

    seen_counts[phase] = seen_counts.get(phase, 0) + 1
    if "phaseOrder" in attrs:
        order = attrs.pop("phaseOrder")
    else:
        order = seen_counts[phase]
        diags.append(warning(
            "order-assigned",
            f"{where}: {phase} lacks phaseOrder, assigned occurrence {order}",
            phase,
        ))
    return AttributeRecord(phase, order, attrs, extras)


def _iter_json_objects(text: str):
    decoder = json.JSONDecoder()
    i = 0
    while True:
        start = text.find("{", i)
        if start < 0:
            return
        try:
            obj, end = decoder.raw_decode(text, start)
        except ValueError:
            i = start + 1
            continue
        if isinstance(obj, dict):
            yield obj
            i = end
        else:
            i = start + 1


def parse_llm_output(text: str) -> PlanIR:
    """Decode the first result object found in chat text.

    Later objects that also carry result keys are ignored with a warning
    (models sometimes echo the prompt's examples).
    """
    found = None
    extra_results = 0
    any_json = False
    for obj in _iter_json_objects(text):
        any_json = True
        if "result1" in obj or "result2" in obj:
            if found is None:
                found = obj
            else:
                extra_results += 1
    if found is None:
        if any_json:
            raise SchemaError("no JSON object carries result1/result2")
        raise NoJsonFound("reply contains no JSON object")

    diags: list[Diagnostic] = []
    if extra_results:
        diags.append(warning("later-json-ignored", f"{extra_results} later result object(s) ignored"))
    return plan_from_results(found, diags)


def plan_from_results(obj: dict, diags=None) -> PlanIR:
    """Build a PlanIR from an already-decoded result object."""
    diags = list(diags or [])

    result1 = obj.get("result1", [])
    if not isinstance(result1, list):
        raise SchemaError("result1 must be a list")
    if result1 and all(_is_phase_object(x) for x in result1):
        # unlabeled structure: a bare phase list, kept whole for the cleanser
        sequence = (_parse_node(result1, "result1", diags),)
    else:
        sequence = tuple(_parse_node(node, f"result1[{i}]", diags)
                         for i, node in enumerate(result1))

    result2 = obj.get("result2", [])
    if not isinstance(result2, list):
        raise SchemaError("result2 must be a list")
    seen: dict[str, int] = {}
    attributes = tuple(_parse_record(rec, i, seen, diags) for i, rec in enumerate(result2))

    result3 = obj.get("result3")
    cycle = None if result3 is None else _int_seconds(result3, "result3", minimum=1)

    return PlanIR(sequence, attributes, cycle, tuple(diags))


# --- wire encoding ----------------------------------------------------------

def _entry_wire(entry: PhaseEntry) -> dict:
    duration = {}
    if entry.split is not None:
        duration["split"] = entry.split
    if entry.green_time is not None:
        duration["greenTime"] = entry.green_time
    return {entry.phase: duration}


def _node_wire(node: StructureNode):
    if node.style == BARE:
        return [_entry_wire(e) for e in node.body]
    if node.style == STAGE:
        body = []
        for stage in node.body:
            if isinstance(stage, PhaseEntry):
                body.append(_entry_wire(stage))
            else:
                body.append([_entry_wire(e) for e in stage])
        return {STAGE: body}
    body = []
    for item in node.body:
        if isinstance(item, PhaseEntry):
            body.append(_entry_wire(item))
        elif isinstance(item, StructureNode):
            body.append(_node_wire(item))
        else:
            ring = []
            for elem in item:
                ring.append(_node_wire(elem) if isinstance(elem, StructureNode) else _entry_wire(elem))
            body.append(ring)
    return {RING: body}


def _record_wire(rec: AttributeRecord) -> dict:
    inner = {"phaseOrder": rec.order}
    for key in ATTR_KEYS[1:]:
        if key in rec.attrs:
            value = rec.attrs[key]
            inner[key] = int(value) if key in FLAG_KEYS else value
    for key in sorted(rec.extras):
        inner[key] = rec.extras[key]
    return {rec.phase: inner}


def results_dict(ir: PlanIR) -> dict:
    return {
        "result1": [_node_wire(n) for n in ir.sequence],
        "result2": [_record_wire(r) for r in ir.attributes],
        "result3": ir.cycle_length,
    }


def serialize_ir(ir: PlanIR) -> str:
    return json.dumps(results_dict(ir), ensure_ascii=False, indent=2) + "\n"


# --- linting ----------------------------------------------------------------

def _lint_entry(entry: PhaseEntry, where: str, out: list):
    if entry.split is not None and entry.green_time is not None:
        out.append(Diagnostic("inline-duration", "error",
                              f"{where}: {entry.phase} lists both split and greenTime", entry.phase))
    value = entry.split if entry.split is not None else entry.green_time
    if value == 0:
        out.append(Diagnostic("zero-duration", "error",
                              f"{where}: {entry.phase} has a zero-length duration", entry.phase))


def lint_ir(ir: PlanIR) -> list:
    """Pure structural checks; diagnostics, never exceptions."""
    out: list[Diagnostic] = []

    for i, node in enumerate(ir.sequence):
        where = f"result1[{i}]"
        if node.style == BARE:
            out.append(Diagnostic("unlabeled-structure", "warning",
                                  f"{where}: unlabeled phase list (cleansing will wrap it)"))
            for entry in node.body:
                _lint_entry(entry, where, out)
            continue
        if not node.body:
            out.append(Diagnostic("empty-structure", "error", f"{where}: node has no stages or rings"))
        if node.style == STAGE:
            for j, stage in enumerate(node.body):
                if isinstance(stage, PhaseEntry):
                    _lint_entry(stage, f"{where}[{j}]", out)
                    continue
                if not stage:
                    out.append(Diagnostic("empty-structure", "error", f"{where}[{j}]: empty stage"))
                for entry in stage:
                    _lint_entry(entry, f"{where}[{j}]", out)
        else:
            for j, item in enumerate(node.body):
                if isinstance(item, PhaseEntry):
                    _lint_entry(item, f"{where}[{j}]", out)
                    continue
                if isinstance(item, StructureNode):
                    out.append(Diagnostic("ring-in-ring", "error",
                                          f"{where}[{j}]: structure node where a ring was expected"))
                    continue
                if not item:
                    out.append(Diagnostic("empty-structure", "error", f"{where}[{j}]: empty ring"))
                for k, elem in enumerate(item):
                    spot = f"{where}[{j}][{k}]"
                    if isinstance(elem, StructureNode):
                        if elem.style == RING:
                            out.append(Diagnostic("ring-in-ring", "error", f"{spot}: ring nested in ring"))
                        else:
                            for s, stage in enumerate(elem.body):
                                if isinstance(stage, PhaseEntry):
                                    _lint_entry(stage, f"{spot}[{s}]", out)
                                    continue
                                if not stage:
                                    out.append(Diagnostic("empty-structure", "error", f"{spot}[{s}]: empty stage"))
                                for entry in stage:
                                    _lint_entry(entry, f"{spot}[{s}]", out)
                    else:
                        _lint_entry(elem, spot, out)

    seen = set()
    for rec in ir.attributes:
        key = (rec.phase, rec.order)
        if key in seen:
            out.append(Diagnostic("duplicate-record", "error",
                                  f"duplicate attribute record for {rec.phase} occurrence {rec.order}",
                                  rec.phase))
        seen.add(key)
        if rec.permissive and rec.prohibited:
            out.append(Diagnostic("exclusive-flags", "error",
                                  f"{rec.phase}: isPermissive and isProhibited are mutually exclusive",
                                  rec.phase))
        if rec.has("split") and rec.has("greenTime"):
            out.append(Diagnostic("inline-duration", "error",
                                  f"{rec.phase}: record carries both split and greenTime", rec.phase))
        for key in rec.extras:
            out.append(Diagnostic("unknown-key", "warning",
                                  f"{rec.phase}: unknown attribute {key!r}", rec.phase))

    return out
