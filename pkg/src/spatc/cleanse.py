"""Normalize and repair a parsed plan before placement.

Four passes, always in this order: canonical names, structure repairs,
``AllPed`` expansion, pedestrian default parents.  The full pass is
idempotent, and every repair leaves a machine-readable diagnostic so nothing
is patched silently.
"""

from __future__ import annotations

from dataclasses import replace

from . import movements
from .diagnostics import Diagnostic, warning
from .errors import NoDefaultConfigured, StructureUnrepairable, UnknownPhase
from .ir import BARE, RING, STAGE, AttributeRecord, PhaseEntry, PlanIR, StructureNode


def iter_entries(sequence):
    """Yield PhaseEntry objects in placement traversal order.

    The same order assigns occurrence indices in timing, so anything that
    counts occurrences must use this walk.
    """
    for node in sequence:
        if node.style == BARE:
            yield from node.body
        elif node.style == STAGE:
            for stage in node.body:
                if isinstance(stage, PhaseEntry):
                    yield stage
                else:
                    yield from stage
        else:
            for item in node.body:
                if isinstance(item, PhaseEntry):
                    yield item
                elif isinstance(item, StructureNode):
                    for stage in item.body:
                        if isinstance(stage, PhaseEntry):
                            yield stage
                        else:
                            yield from stage
                else:
                    for elem in item:
                        if isinstance(elem, StructureNode):
                            for stage in elem.body:
                                if isinstance(stage, PhaseEntry):
                                    yield stage
                                else:
                                    yield from stage
                        else:
                            yield elem


def structural_occurrences(sequence) -> set:
    """(phase, occurrence-index) pairs defined by the structure."""
    counts: dict[str, int] = {}
    out = set()
    for entry in iter_entries(sequence):
        counts[entry.phase] = counts.get(entry.phase, 0) + 1
        out.add((entry.phase, counts[entry.phase]))
    return out


# --- pass 1: names -----------------------------------------------------------

def _canon(cfg, name: str, where: str) -> str:
    canonical = cfg.canonical(name)
    if canonical is None:
        raise UnknownPhase(f"{where}: unknown phase name {name!r}")
    return canonical


def _map_entry(entry: PhaseEntry, cfg, where: str) -> PhaseEntry:
    return replace(entry, phase=_canon(cfg, entry.phase, where))


def _map_node(node: StructureNode, cfg, where: str) -> StructureNode:
    if node.style == BARE:
        return replace(node, body=tuple(_map_entry(e, cfg, where) for e in node.body))
    if node.style == STAGE:
        body = []
        for stage in node.body:
            if isinstance(stage, PhaseEntry):
                body.append(_map_entry(stage, cfg, where))
            else:
                body.append(tuple(_map_entry(e, cfg, where) for e in stage))
        return replace(node, body=tuple(body))
    body = []
    for item in node.body:
        if isinstance(item, PhaseEntry):
            body.append(_map_entry(item, cfg, where))
        elif isinstance(item, StructureNode):
            body.append(_map_node(item, cfg, where))
        else:
            ring = []
            for elem in item:
                if isinstance(elem, StructureNode):
                    ring.append(_map_node(elem, cfg, where))
                else:
                    ring.append(_map_entry(elem, cfg, where))
            body.append(tuple(ring))
    return replace(node, body=tuple(body))


def normalize_names(ir: PlanIR, cfg) -> PlanIR:
    """Replace every alias with its canonical movement id; unknown names fail."""
    sequence = tuple(_map_node(n, cfg, f"result1[{i}]") for i, n in enumerate(ir.sequence))
    attributes = []
    for rec in ir.attributes:
        rec = replace(rec, phase=_canon(cfg, rec.phase, "result2"))
        parent = rec.get("parentPhase")
        if parent is not None and parent != "default":
            rec = rec.with_attrs(parentPhase=_canon(cfg, parent, f"parentPhase of {rec.phase}"))
        attributes.append(rec)
    return replace(ir, sequence=sequence, attributes=tuple(attributes))


# --- pass 2: structure repairs ------------------------------------------------

def repair_structure(ir: PlanIR):
    """Fix the known malformations; anything else structural is an error."""
    repairs: list[Diagnostic] = []
    sequence = []
    for i, node in enumerate(ir.sequence):
        where = f"result1[{i}]"
        if node.style == BARE:
            sequence.append(StructureNode(STAGE, tuple((e,) for e in node.body)))
            repairs.append(warning(
                "repair-unlabeled-structure",
                f"{where}: unlabeled phase list wrapped as stageStyle, one stage per phase",
            ))
            continue
        if node.style == STAGE:
            if any(isinstance(s, PhaseEntry) for s in node.body):
                body = tuple((s,) if isinstance(s, PhaseEntry) else s for s in node.body)
                sequence.append(StructureNode(STAGE, body))
                repairs.append(warning(
                    "repair-flat-stage",
                    f"{where}: bare phases among stages wrapped as one-phase stages",
                ))
            else:
                sequence.append(node)
            continue
        # ringStyle: a body of loose elements means the ring nesting level
        # was dropped; rewrap the whole body as a single ring.
        loose = [x for x in node.body if not isinstance(x, tuple)]
        rings = [x for x in node.body if isinstance(x, tuple)]
        if loose and rings:
            raise StructureUnrepairable(f"{where}: ringStyle mixes rings with loose phases")
        if loose:
            sequence.append(StructureNode(RING, (tuple(loose),)))
            repairs.append(warning(
                "repair-flat-ring",
                f"{where}: un-nested ringStyle body rewrapped as a single ring",
            ))
        else:
            sequence.append(node)

    attributes = []
    for rec in ir.attributes:
        if rec.has("startTime") and rec.has("endTime") and rec.has("split"):
            attributes.append(rec.with_attrs(split=None))
            repairs.append(warning(
                "repair-split-conflict",
                f"{rec.phase}: split dropped in favor of explicit startTime/endTime",
                rec.phase,
            ))
        else:
            attributes.append(rec)

    return replace(ir, sequence=tuple(sequence), attributes=tuple(attributes)), repairs


# --- pass 3: AllPed expansion --------------------------------------------------

def _expand_entries(entries, counters, slots, diags):
    out = []
    for entry in entries:
        if entry.phase == movements.ALL_PED:
            slot = {}
            for ped in movements.PED_SINGLE:
                counters[ped] = counters.get(ped, 0) + 1
                slot[ped] = counters[ped]
                out.append(replace(entry, phase=ped))
            slots.append(slot)
            diags.append(warning(
                "expand-all-ped",
                "AllPed expanded into the four one-stage crossings",
            ))
        else:
            counters[entry.phase] = counters.get(entry.phase, 0) + 1
            out.append(entry)
    return tuple(out)


def expand_all_ped(ir: PlanIR):
    """Replace AllPed entries and clone their attribute records per crossing."""
    diags: list[Diagnostic] = []
    slots: list[dict] = []  # per AllPed occurrence: ped name -> new occurrence index
    counters: dict[str, int] = {}

    sequence = []
    for node in ir.sequence:
        if node.style == STAGE:
            body = tuple(_expand_entries(stage, counters, slots, diags) for stage in node.body)
            sequence.append(replace(node, body=body))
        elif node.style == RING:
            body = []
            for item in node.body:
                ring = []
                for elem in item:
                    if isinstance(elem, StructureNode):
                        sub = tuple(_expand_entries(stage, counters, slots, diags) for stage in elem.body)
                        ring.append(replace(elem, body=sub))
                    elif elem.phase == movements.ALL_PED:
                        # inside a ring, keep the four crossings parallel
                        expanded = _expand_entries((elem,), counters, slots, diags)
                        ring.append(StructureNode(STAGE, (expanded,)))
                    else:
                        counters[elem.phase] = counters.get(elem.phase, 0) + 1
                        ring.append(elem)
                body.append(tuple(ring))
            sequence.append(replace(node, body=tuple(body)))
        else:
            sequence.append(node)

    attributes = []
    for rec in ir.attributes:
        if rec.phase != movements.ALL_PED:
            attributes.append(rec)
            continue
        slot = slots[rec.order - 1] if rec.order - 1 < len(slots) else None
        for ped in movements.PED_SINGLE:
            order = slot[ped] if slot else rec.order
            attributes.append(replace(rec, phase=ped, order=order,
                                      attrs=dict(rec.attrs), extras=dict(rec.extras)))
        diags.append(warning("expand-all-ped", "AllPed attribute record cloned per crossing"))

    if not slots and all(rec.phase != movements.ALL_PED for rec in ir.attributes):
        return ir, []
    return replace(ir, sequence=tuple(sequence), attributes=tuple(attributes)), diags


# --- pass 4: pedestrian default parents ----------------------------------------

def resolve_ped_defaults(ir: PlanIR, cfg):
    """Substitute configured parents for ``parentPhase: "default"`` records."""
    diags: list[Diagnostic] = []
    structural = structural_occurrences(ir.sequence)
    max_order: dict[str, int] = {}
    for rec in ir.attributes:
        max_order[rec.phase] = max(max_order.get(rec.phase, 0), rec.order)

    attributes = []
    for rec in ir.attributes:
        if rec.get("parentPhase") != "default":
            attributes.append(rec)
            continue
        if (rec.phase, rec.order) in structural:
            attributes.append(rec.with_attrs(parentPhase=None))
            diags.append(warning(
                "ped-default",
                f"{rec.phase} is already placed by the structure; default parent dropped",
                rec.phase,
            ))
            continue
        if not movements.is_pedestrian(rec.phase):
            raise NoDefaultConfigured(f"{rec.phase}: default parents exist only for pedestrian crossings")
        parents = cfg.ped_parents.get(rec.phase)
        if not parents:
            raise NoDefaultConfigured(f"{rec.phase}: no default parent configured")
        first, *rest = parents
        attributes.append(rec.with_attrs(parentPhase=first,
                                         overlapNum=0 if rest else rec.get("overlapNum")))
        for parent in rest:
            max_order[rec.phase] += 1
            attributes.append(AttributeRecord(
                rec.phase, max_order[rec.phase],
                {**rec.attrs, "parentPhase": parent, "overlapNum": 0},
                dict(rec.extras),
            ))
        diags.append(warning(
            "ped-default",
            f"{rec.phase}: default resolved to parent(s) {', '.join(parents)}",
            rec.phase,
        ))
    return replace(ir, attributes=tuple(attributes)), diags


def cleanse(ir: PlanIR, cfg) -> PlanIR:
    """Run all four passes; diagnostics accumulate on the returned plan."""
    ir = normalize_names(ir, cfg)
    ir, repairs = repair_structure(ir)
    ir, expands = expand_all_ped(ir)
    ir, peds = resolve_ped_defaults(ir, cfg)
    return ir.with_diagnostics(tuple(repairs) + tuple(expands) + tuple(peds))
