"""Locate phases on the cycle.

All times are whole seconds on a circular axis of length C.  A split is laid
out as lateStart, redAmber, green (whose tail may flash), yellow, allRed,
earlyCutOff; intervals are half-open [start, end) and wrap when start > end.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .diagnostics import Diagnostic, warning
from .errors import (
    BadValue,
    DegenerateInterval,
    InvalidDuration,
    NoCycleLength,
    SplitExceedsCycle,
    StructureUnrepairable,
    UnderSpecified,
)
from .ir import CYCLE_TOKEN, PhaseEntry, StructureNode, RING, STAGE


@dataclass(frozen=True)
class SplitParams:
    green: int = 0
    late_start: int = 0
    red_amber: int = 0
    yellow: int = 0
    all_red: int = 0
    early_cut_off: int = 0
    green_flash: int = 0


def split_from_green(p: SplitParams) -> int:
    return p.late_start + p.red_amber + p.green + p.yellow + p.all_red + p.early_cut_off


@dataclass(frozen=True)
class CycleInterval:
    """Half-open [start, end) on a cycle; wraps when start > end.

    A full-cycle interval is encoded start=0, end=cycle, never start==end.
    """

    start: int
    end: int
    cycle: int

    def __post_init__(self):
        if not 0 < self.cycle:
            raise DegenerateInterval(f"cycle length {self.cycle} invalid")
        if not 0 <= self.start < self.cycle:
            raise DegenerateInterval(f"start {self.start} outside [0, {self.cycle})")
        if not 0 < self.end <= self.cycle:
            raise DegenerateInterval(f"end {self.end} outside (0, {self.cycle}]")
        if self.start == self.end:
            raise DegenerateInterval(f"interval at {self.start} is empty")

    @property
    def wraps(self) -> bool:
        return self.start > self.end

    @property
    def length(self) -> int:
        if self.end > self.start:
            return self.end - self.start
        return self.end - self.start + self.cycle

    def pieces(self):
        """Linear [s, e) pieces; two when the interval wraps."""
        if self.wraps:
            return ((self.start, self.cycle), (0, self.end))
        return ((self.start, self.end),)

    def second(self, offset: int) -> int:
        return (self.start + offset) % self.cycle

    def seconds(self):
        for s, e in self.pieces():
            yield from range(s, e)

    def contains(self, t: int) -> bool:
        return any(s <= t < e for s, e in self.pieces())


@dataclass(frozen=True)
class PlacedPhase:
    phase: str
    order: int
    interval: CycleInterval
    params: SplitParams
    kind: str  # major | standalone | overlapped
    permissive: bool = False
    prohibited: bool = False
    ra_red: int = 0     # inherited red-amber shown as red (pedestrians)
    ped_clear: int = 0  # flashing-don't-walk seconds


def wrap_end(start: int, split: int, cycle: int) -> int:
    """End second of a split, kept at C (not 0) on the cycle boundary."""
    if split > cycle:
        raise SplitExceedsCycle(f"split {split} exceeds cycle {cycle}")
    if split <= 0:
        raise DegenerateInterval(f"split {split} is not positive")
    if not 0 <= start < cycle:
        raise BadValue(f"start {start} outside [0, {cycle})")
    if start + split == cycle:
        return cycle
    return (start + split) % cycle


def interval_from_split(start: int, split: int, cycle: int) -> CycleInterval:
    if split == cycle:
        # a split holding the whole cycle has one encoding wherever it starts
        return CycleInterval(0, cycle, cycle)
    return CycleInterval(start, wrap_end(start, split, cycle), cycle)


def green_interval_to_split(green_start: int, green_end: int, p: SplitParams, cycle: int):
    """Widen a green window to its split interval (lead-in before, change after).

    Returns the interval and the params completed with the green duration.
    """
    if not 0 <= green_start < cycle:
        raise BadValue(f"greenStart {green_start} outside [0, {cycle})")
    green = (green_end - green_start) % cycle
    if green == 0:
        raise DegenerateInterval("green window is empty")
    total = p.late_start + p.red_amber + green + p.yellow + p.all_red + p.early_cut_off
    if total >= cycle:
        raise DegenerateInterval(f"split {total} does not fit cycle {cycle}")
    start = (green_start - p.late_start - p.red_amber) % cycle
    return interval_from_split(start, total, cycle), replace(p, green=green)


# --- attribute helpers -------------------------------------------------------

def change_params(rec, cfg, phase: str, permissive: bool = False) -> SplitParams:
    """Inter-green seconds for one record, config defaults filling gaps."""
    defaults = cfg.default_params(phase)

    def get(key):
        if rec is not None and rec.has(key):
            return rec.get(key)
        return defaults[key]

    p = SplitParams(
        green=0,
        late_start=get("lateStart"),
        red_amber=get("redAmber"),
        yellow=get("yellow"),
        all_red=get("allRed"),
        early_cut_off=get("earlyCutOff"),
        green_flash=get("greenFlash"),
    )
    if permissive:
        # a permissive movement shows no signal transitions, only lights-off
        p = replace(p, red_amber=0, yellow=0, all_red=0, green_flash=0)
    return p


def complete_green(p: SplitParams, split: int, phase: str) -> SplitParams:
    """Fill in the green so the split identity holds; guards impossible splits."""
    green = split - (p.late_start + p.red_amber + p.yellow + p.all_red + p.early_cut_off)
    if green < 0:
        raise InvalidDuration(f"{phase}: split {split} cannot hold its change intervals")
    if p.green_flash > green:
        raise InvalidDuration(f"{phase}: green flash {p.green_flash} exceeds green {green}")
    return replace(p, green=green)


def _record_index(attributes) -> dict:
    return {(rec.phase, rec.order): rec for rec in attributes}


# --- structural placement -----------------------------------------------------

class _Walk:
    """Linear layout state shared across one structure traversal."""

    def __init__(self, attributes, cfg):
        self.records = _record_index(attributes)
        self.cfg = cfg
        self.counts: dict[str, int] = {}
        self.linear: list = []  # (phase, order, start, split, params, rec)

    def entry(self, entry: PhaseEntry, at: int) -> int:
        self.counts[entry.phase] = self.counts.get(entry.phase, 0) + 1
        order = self.counts[entry.phase]
        rec = self.records.get((entry.phase, order))
        permissive = bool(rec and rec.permissive)
        params = change_params(rec, self.cfg, entry.phase, permissive)
        if entry.split is not None:
            split = entry.split
            params = complete_green(params, split, entry.phase)
        else:
            params = replace(params, green=entry.green_time)
            if params.green_flash > params.green:
                raise InvalidDuration(
                    f"{entry.phase}: green flash {params.green_flash} exceeds green {params.green}")
            split = split_from_green(params)
        self.linear.append((entry.phase, order, at, split, params, rec))
        return at + split

    def stage_block(self, stages, at: int) -> int:
        cursor = at
        for stage in stages:
            members = (stage,) if isinstance(stage, PhaseEntry) else stage
            stage_end = cursor
            for member in members:
                stage_end = max(stage_end, self.entry(member, cursor))
            cursor = stage_end
        return cursor


def place_structure(sequence, attributes, declared_c, cfg):
    """Lay out result1 sequentially; returns (placed, C, warnings).

    Linear times come first; the cycle length is the largest linear end, and
    only then are ends normalized onto the cycle.
    """
    walk = _Walk(attributes, cfg)
    cursor = 0
    for node in sequence:
        if node.style == STAGE:
            cursor = walk.stage_block(node.body, cursor)
        elif node.style == RING:
            node_end = cursor
            for ring in node.body:
                if isinstance(ring, (PhaseEntry, StructureNode)):
                    raise StructureUnrepairable("un-nested ringStyle body must be repaired first")
                ring_cursor = cursor
                for elem in ring:
                    if isinstance(elem, StructureNode):
                        ring_cursor = walk.stage_block(elem.body, ring_cursor)
                    else:
                        ring_cursor = walk.entry(elem, ring_cursor)
                node_end = max(node_end, ring_cursor)
            cursor = node_end
        else:
            raise StructureUnrepairable("unlabeled structure must be repaired first")

    if not walk.linear:
        if declared_c is None:
            return [], None, []
        return [], declared_c, []

    structural_c = max(start + split for (_, _, start, split, _, _) in walk.linear)
    cycle, warnings = resolve_cycle_length(structural_c, declared_c)

    placed = []
    for phase, order, start, split, params, rec in walk.linear:
        placed.append(PlacedPhase(
            phase=phase,
            order=order,
            interval=interval_from_split(start, split, cycle),
            params=params,
            kind="major",
            permissive=bool(rec and rec.permissive),
            prohibited=bool(rec and rec.prohibited),
            ped_clear=rec.get("pedClear", 0) if rec else 0,
        ))
    return placed, cycle, warnings


def resolve_cycle_length(structural_c, declared_c):
    """Structure wins; the declared value only fixes C when no structure exists."""
    warnings: list[Diagnostic] = []
    if structural_c is not None:
        if declared_c is not None and declared_c != structural_c:
            warnings.append(warning(
                "cycle-mismatch",
                f"declared cycle {declared_c} differs from structural {structural_c}; using structural",
            ))
        return structural_c, warnings
    if declared_c is not None:
        return declared_c, warnings
    raise NoCycleLength("no structure and no declared cycle length")


# --- standalone placement -------------------------------------------------------

def _locating_keys(rec):
    return (rec.get("startTime"), rec.get("endTime"), rec.get("split"),
            rec.get("greenStart"), rec.get("greenEnd"))


def is_standalone(rec) -> bool:
    st, et, sp, gs, ge = _locating_keys(rec)
    return (st is not None and (et is not None or sp is not None)) or \
        (gs is not None and ge is not None)


def needs_location(rec) -> bool:
    """True when the record carries part of a locating pair but not all of it."""
    st, et, sp, gs, ge = _locating_keys(rec)
    if is_standalone(rec):
        return False
    return st is not None or et is not None or gs is not None or ge is not None


def place_standalone_record(rec, cycle: int, cfg) -> PlacedPhase:
    st, et, sp, gs, ge = _locating_keys(rec)
    permissive = rec.permissive
    params = change_params(rec, cfg, rec.phase, permissive)

    if st is not None and et is not None:
        if not 0 <= st < cycle:
            raise BadValue(f"{rec.phase}: startTime {st} outside [0, {cycle})")
        if et == CYCLE_TOKEN:
            et = cycle
        if et == 0:
            et = cycle
        if not 0 < et <= cycle:
            raise BadValue(f"{rec.phase}: endTime {et} outside the cycle")
        iv = CycleInterval(st, et, cycle)
    elif st is not None and sp is not None:
        if not 0 <= st < cycle:
            raise BadValue(f"{rec.phase}: startTime {st} outside [0, {cycle})")
        iv = interval_from_split(st, sp, cycle)
    elif gs is not None and ge is not None:
        if ge == CYCLE_TOKEN:
            ge = cycle
        iv, params = green_interval_to_split(gs % cycle, ge % cycle, params, cycle)
        return PlacedPhase(rec.phase, rec.order, iv, params, "standalone",
                           permissive, rec.prohibited, ped_clear=rec.get("pedClear", 0))
    else:
        raise UnderSpecified(f"{rec.phase}: no complete locating pair")

    params = complete_green(params, iv.length, rec.phase)
    return PlacedPhase(rec.phase, rec.order, iv, params, "standalone",
                       permissive, rec.prohibited, ped_clear=rec.get("pedClear", 0))


def place_standalone(attributes, cycle: int, cfg):
    """Place every record carrying a complete locating pair."""
    placed = []
    for rec in attributes:
        if is_standalone(rec):
            placed.append(place_standalone_record(rec, cycle, cfg))
        elif needs_location(rec):
            raise UnderSpecified(f"{rec.phase}: incomplete locating pair")
    return placed


def standalone_cycle_hint(attributes):
    """Largest linear end fixed by non-wrapping standalone records, if any."""
    best = None
    for rec in attributes:
        st, et, sp, _, ge = _locating_keys(rec)
        end = None
        if st is not None and isinstance(et, int) and et > st:
            end = et
        elif st is not None and sp is not None:
            end = st + sp
        elif isinstance(ge, int):
            end = ge
        if end is not None:
            best = end if best is None else max(best, end)
    return best
