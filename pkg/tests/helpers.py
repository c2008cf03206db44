"""Shared test utilities: corpus access, random generators, reference oracles."""

from pathlib import Path

from spatc import movements
from spatc.emit import ColorTable
from spatc.ir import RING, STAGE, PhaseEntry, StructureNode
from spatc.timing import CycleInterval, PlacedPhase, SplitParams

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"


def corpus_cases():
    return sorted(p for p in CORPUS.iterdir() if (p / "meta.json").exists())


def final_response(case: Path) -> str:
    return sorted((case / "responses").glob("turn*.txt"))[-1].read_text("utf-8")


def all_response_texts():
    for case in corpus_cases():
        for path in sorted((case / "responses").glob("turn*.txt")):
            yield f"{case.name}/{path.name}", path.read_text("utf-8")


# --- structure generator + reference layout ----------------------------------

def _gen_entry(rng, phases) -> PhaseEntry:
    return PhaseEntry(rng.choice(phases), rng.randint(5, 40), None)


def gen_structure(rng):
    """Random stage/ring structure; inline splits only, vehicular names."""
    phases = rng.sample(list(movements.VEHICULAR), rng.randint(2, 6))
    nodes = []
    for _ in range(rng.randint(1, 3)):
        if rng.random() < 0.5:
            stages = tuple(
                tuple(_gen_entry(rng, phases) for _ in range(rng.randint(1, 3)))
                for _ in range(rng.randint(1, 3)))
            nodes.append(StructureNode(STAGE, stages))
        else:
            rings = []
            for _ in range(rng.randint(1, 3)):
                ring = []
                for _ in range(rng.randint(1, 3)):
                    if rng.random() < 0.25:
                        stages = tuple(
                            tuple(_gen_entry(rng, phases) for _ in range(rng.randint(1, 2)))
                            for _ in range(rng.randint(1, 2)))
                        ring.append(StructureNode(STAGE, stages))
                    else:
                        ring.append(_gen_entry(rng, phases))
                rings.append(tuple(ring))
            nodes.append(StructureNode(RING, tuple(rings)))
    return tuple(nodes)


def linear_walk(sequence):
    """Reference layout by plain integer sums: [(phase, order, start, end)], C.

    Top-level nodes run back to back; stages share a start and end at the
    longest member; rings run in parallel from the node start and each ring is
    sequential inside.
    """
    out = []
    counts = {}

    def entry(e, at):
        counts[e.phase] = counts.get(e.phase, 0) + 1
        out.append((e.phase, counts[e.phase], at, at + e.split))
        return at + e.split

    def stage_block(stages, at):
        cursor = at
        for stage in stages:
            members = (stage,) if isinstance(stage, PhaseEntry) else stage
            end = cursor
            for member in members:
                end = max(end, entry(member, cursor))
            cursor = end
        return cursor

    cursor = 0
    for node in sequence:
        if node.style == STAGE:
            cursor = stage_block(node.body, cursor)
        else:
            node_end = cursor
            for ring in node.body:
                ring_cursor = cursor
                for elem in ring:
                    if isinstance(elem, StructureNode):
                        ring_cursor = stage_block(elem.body, ring_cursor)
                    else:
                        ring_cursor = entry(elem, ring_cursor)
                node_end = max(node_end, ring_cursor)
            cursor = node_end
    return out, max(end for (_, _, _, end) in out)


# --- merge generator + reference union ----------------------------------------

def gen_occurrences(rng, phase="WBT", trimmed=False, mixed_class=False):
    """Random occurrence set for one phase: (occurrences, cycle)."""
    cycle = rng.randint(20, 200)
    n = rng.randint(1, 6)
    occs = []
    for i in range(n):
        if trimmed:
            late = rng.randint(0, 3)
            early = rng.randint(0, 3)
            ra_red = rng.randint(0, 2)
        else:
            late = early = ra_red = 0
        green = rng.randint(5, max(5, cycle // 2))
        length = late + ra_red + green + early
        if length >= cycle:
            green -= length - cycle + 1
            length = cycle - 1
        start = rng.randrange(cycle)
        end = (start + length) % cycle or cycle
        occs.append(PlacedPhase(
            phase=phase,
            order=i + 1,
            interval=CycleInterval(start, end, cycle),
            params=SplitParams(green=green, late_start=late, early_cut_off=early),
            kind="major",
            permissive=mixed_class and rng.random() < 0.4,
            ra_red=ra_red,
        ))
    return occs, cycle


def coverage(occurrences) -> set:
    seconds = set()
    for p in occurrences:
        seconds.update(p.interval.seconds())
    return seconds


def circular_runs(seconds: set, cycle: int):
    """Maximal circular [start, end) runs of a set of seconds."""
    if len(seconds) == cycle:
        return [(0, cycle)]
    runs = []
    for t in sorted(seconds):
        if (t - 1) % cycle not in seconds:
            length = 0
            while (t + length) % cycle in seconds:
                length += 1
            end = (t + length) % cycle or cycle
            runs.append((t, end))
    return sorted(runs)


# --- seeded invalid tables ------------------------------------------------------

CONFLICT_PAIRS = [
    ("NBT", "EBT"), ("SBT", "WBT"), ("NBT", "EBL"), ("EBT", "SBL"),
    ("WBT", "NBL"), ("NBL", "EBL"),
]


def make_conflict_table(seed: int) -> tuple[ColorTable, tuple[str, str]]:
    """Two conflicting movements green at overlapping seconds."""
    import random
    rng = random.Random(seed)
    a, b = CONFLICT_PAIRS[seed % len(CONFLICT_PAIRS)]
    cycle = rng.randint(40, 90)
    ga = rng.randint(10, 25)
    rows = {a: [0] * cycle, b: [0] * cycle}
    for t in range(0, ga):
        rows[a][t] = 2
    overlap_start = rng.randint(0, ga - 5)
    for t in range(overlap_start, overlap_start + rng.randint(5, ga - overlap_start)):
        rows[b][t] = 2
    return ColorTable(cycle, rows), (a, b)


def make_short_walk_table(seed: int) -> tuple[ColorTable, str]:
    """One crossing whose WALK run is under the minimum; no vehicle rows."""
    import random
    rng = random.Random(seed)
    ped = ["NorthPed", "SouthPed", "EastPed", "WestPed"][seed % 4]
    cycle = rng.randint(40, 90)
    row = [0] * cycle
    start = rng.randrange(cycle)
    for i in range(rng.randint(1, 6)):
        row[(start + i) % cycle] = 2
    return ColorTable(cycle, {ped: row}), ped
