"""Overlapped phases and re-service merging.

An overlapped phase copies its timing from parent occurrences.  A phase served
several times per cycle keeps separate occurrences unless they touch with the
same protection class, in which case they merge into one split.
"""

from __future__ import annotations

from dataclasses import replace

from . import movements
from .errors import (
    InvalidDuration,
    NonContiguousComponent,
    ParentNotFound,
    ParentOccurrenceMissing,
)
from .timing import CycleInterval, PlacedPhase, SplitParams


def overlap_records(attributes):
    """Records that ride on a parent phase."""
    return [rec for rec in attributes if isinstance(rec.get("parentPhase"), str)]


def resolve_overlaps(placed, attributes, cfg):
    """Create child occurrences from parentPhase records.

    Parents are matched against the raw (pre-merge) occurrences so a child can
    follow each service of a re-serviced parent.  Parents are never modified.
    """
    children = []
    order_counter: dict[str, int] = {}
    for p in placed:
        order_counter[p.phase] = max(order_counter.get(p.phase, 0), p.order)

    for rec in overlap_records(attributes):
        parent_name = rec.get("parentPhase")
        parents = [p for p in placed if p.phase == parent_name]
        if not parents:
            raise ParentNotFound(f"{rec.phase}: parent {parent_name} is not placed")
        num = rec.get("overlapNum", 0)
        if num:
            parents = [p for p in parents if p.order == num]
            if not parents:
                raise ParentOccurrenceMissing(
                    f"{rec.phase}: parent {parent_name} has no occurrence {num}")

        for parent in sorted(parents, key=lambda p: p.order):
            children.append(_child_of(rec, parent, cfg))

    # occurrence numbers only need uniqueness before merging renumbers them
    out = []
    for child in children:
        order_counter[child.phase] = order_counter.get(child.phase, 0) + 1
        out.append(replace(child, order=order_counter[child.phase]))
    return out


def _child_of(rec, parent: PlacedPhase, cfg) -> PlacedPhase:
    length = parent.interval.length
    late_start = rec.get("lateStart", 0)
    early_cut = rec.get("earlyCutOff", 0)
    pedestrian = movements.is_pedestrian(rec.phase)
    permissive = rec.permissive

    ra_red = 0
    ped_clear = 0
    if permissive:
        params = SplitParams(late_start=late_start, early_cut_off=early_cut)
    elif pedestrian:
        # signal heads for walkers show no yellow/green-flash/red-amber;
        # inherited red-amber becomes plain red unless the child places its
        # own late start
        if not rec.has("lateStart"):
            ra_red = parent.params.red_amber
        params = SplitParams(late_start=late_start, early_cut_off=early_cut)
        ped_clear = rec.get("pedClear",
                            parent.params.yellow + parent.params.all_red)
    else:
        params = SplitParams(
            late_start=late_start,
            early_cut_off=early_cut,
            red_amber=parent.params.red_amber,
            yellow=parent.params.yellow,
            all_red=parent.params.all_red,
            green_flash=parent.params.green_flash,
        )

    green = length - (params.late_start + params.red_amber + params.yellow +
                      params.all_red + params.early_cut_off)
    if green < 0:
        raise InvalidDuration(
            f"{rec.phase}: parent split {length} cannot hold the child's parameters")
    if params.green_flash > green:
        raise InvalidDuration(
            f"{rec.phase}: inherited green flash {params.green_flash} exceeds green {green}")
    params = replace(params, green=green)

    return PlacedPhase(
        phase=rec.phase,
        order=rec.order,
        interval=parent.interval,
        params=params,
        kind="overlapped",
        permissive=permissive,
        prohibited=rec.prohibited,
        ra_red=ra_red,
        ped_clear=ped_clear,
    )


def split_wraparound(interval: CycleInterval):
    """Linear pieces of an interval; two when it crosses the cycle boundary."""
    return interval.pieces()


# --- merging -------------------------------------------------------------------

def _effective_seconds(p: PlacedPhase) -> set:
    """Seconds not covered by the phase's own inserted red (LS, inherited red, EC)."""
    skip_head = p.params.late_start + p.ra_red
    skip_tail = p.params.early_cut_off
    usable = p.interval.length - skip_head - skip_tail
    if usable <= 0:
        return set()
    return {p.interval.second(skip_head + i) for i in range(usable)}


def _touching(a: PlacedPhase, b: PlacedPhase, a_sec: set, b_sec: set, cycle: int) -> bool:
    if not a_sec or not b_sec:
        return False
    if a_sec & b_sec:
        return True
    a_end = (p_eff_end(a)) % cycle
    b_end = (p_eff_end(b)) % cycle
    a_start = p_eff_start(a) % cycle
    b_start = p_eff_start(b) % cycle
    return a_end == b_start or b_end == a_start


def p_eff_start(p: PlacedPhase) -> int:
    return p.interval.second(p.params.late_start + p.ra_red)


def p_eff_end(p: PlacedPhase) -> int:
    return p.interval.second(p.interval.length - p.params.early_cut_off)


def _class_key(p: PlacedPhase):
    return (p.permissive, p.prohibited)


def merge_connected(occurrences, cycle: int):
    """Merge touching same-class occurrences of ONE phase into single splits.

    Connectivity honors inserted red: an early cut-off or late start between
    two services keeps them apart.  Components are found by depth-first
    search; each component's full coverage must form one circular interval.
    """
    if len(occurrences) <= 1:
        return _renumber(list(occurrences))

    occs = list(occurrences)
    eff = [_effective_seconds(p) for p in occs]
    n = len(occs)
    adj = {i: [] for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            if _class_key(occs[i]) != _class_key(occs[j]):
                continue
            if _touching(occs[i], occs[j], eff[i], eff[j], cycle):
                adj[i].append(j)
                adj[j].append(i)

    seen = set()
    merged = []
    for root in range(n):
        if root in seen:
            continue
        stack, component = [root], []
        seen.add(root)
        while stack:
            i = stack.pop()
            component.append(i)
            for j in adj[i]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        members = [occs[i] for i in component]
        if len(members) == 1:
            merged.append(members[0])
        else:
            merged.append(_merge_component(members, cycle))

    return _renumber(merged)


def _merge_component(members, cycle: int) -> PlacedPhase:
    phase = members[0].phase
    covered = set()
    for m in members:
        covered.update(m.interval.seconds())

    if len(covered) == cycle:
        # services tile the whole cycle: no boundary second exists, so the
        # merged service is green end to end with no head or tail intervals
        anchor = min(members, key=lambda m: (m.interval.start, m.order))
        return PlacedPhase(
            phase=phase,
            order=anchor.order,
            interval=CycleInterval(0, cycle, cycle),
            params=SplitParams(green=cycle),
            kind=anchor.kind,
            permissive=anchor.permissive,
            prohibited=anchor.prohibited,
        )

    starts = [t for t in covered if (t - 1) % cycle not in covered]
    if len(starts) != 1:
        raise NonContiguousComponent(
            f"{phase}: merged occurrences cover {len(starts)} separate intervals")
    start = starts[0]
    end = (start + len(covered)) % cycle or cycle
    interval = CycleInterval(start, end, cycle)

    first = min((m for m in members if m.interval.start == interval.start),
                key=lambda m: m.order, default=None)
    last = min((m for m in members if m.interval.end % cycle == interval.end % cycle),
               key=lambda m: m.order, default=None)
    if first is None or last is None:
        raise NonContiguousComponent(f"{phase}: merged interval has no boundary member")

    params = SplitParams(
        late_start=first.params.late_start,
        red_amber=first.params.red_amber,
        yellow=last.params.yellow,
        all_red=last.params.all_red,
        early_cut_off=last.params.early_cut_off,
        green_flash=last.params.green_flash,
    )
    green = interval.length - (params.late_start + params.red_amber + params.yellow +
                               params.all_red + params.early_cut_off + first.ra_red)
    if green < 0:
        raise InvalidDuration(f"{phase}: merged split cannot hold its change intervals")
    if params.green_flash > green:
        raise InvalidDuration(f"{phase}: merged green flash exceeds green")
    params = replace(params, green=green)

    return PlacedPhase(
        phase=phase,
        order=first.order,
        interval=interval,
        params=params,
        kind=first.kind,
        permissive=first.permissive,
        prohibited=first.prohibited,
        ra_red=first.ra_red,
        ped_clear=last.ped_clear,
    )


def _renumber(merged):
    merged.sort(key=lambda p: (p.interval.start, p.interval.end))
    return [replace(p, order=i + 1) for i, p in enumerate(merged)]


def merge_all(placed, cycle: int):
    """Merge occurrences per phase name; output in canonical row order."""
    by_phase: dict[str, list] = {}
    for p in placed:
        by_phase.setdefault(p.phase, []).append(p)
    out = []
    for phase in sorted(by_phase, key=movements.sort_key):
        out.extend(merge_connected(by_phase[phase], cycle))
    return out
