"""Shipping gate: one test per release criterion.

Each test here states a user-visible guarantee of the package end to end;
the unit suites alongside cover the same ground piece by piece.  Keep these
independent of each other so a failure reads as exactly one broken promise.
"""

import json
import random
import time

from spatc.bench import load_dataset, replay_transport_for, run_bench
from spatc.diagnostics import SPLIT_REPAIR, STRUCTURE_REPAIRS
from spatc.emit import ColorTable, export_json, table_from_json
from spatc.gateway import CompletionConfig, load_prompts
from spatc.ir import parse_llm_output, plan_from_results, results_dict, serialize_ir
from spatc.overlay import merge_connected
from spatc.pipeline import assemble, assemble_text
from spatc.timing import (
    SplitParams,
    green_interval_to_split,
    place_structure,
    split_from_green,
    wrap_end,
)
from spatc.validate import compare_to_golden, run_validation

from helpers import (
    CORPUS,
    all_response_texts,
    circular_runs,
    coverage,
    final_response,
    gen_occurrences,
    gen_structure,
    linear_walk,
    make_conflict_table,
    make_short_walk_table,
)

GOLDEN_CASES = ("fig3", "fig3_full", "c11", "c11_1", "c39", "c39_1")


def test_golden_fixtures_assemble_to_exact_tables_under_one_second(cfg, golden_tables):
    started = time.perf_counter()
    results = {name: assemble_text(final_response(CORPUS / name), cfg)
               for name in GOLDEN_CASES}
    elapsed = time.perf_counter() - started

    for name, result in results.items():
        match = compare_to_golden(result.table, golden_tables[name])
        assert match.correct, f"{name}: {match}"
        assert result.verdict == "valid", name

    fig3 = results["fig3"].table
    assert fig3.cycle == 110 and len(fig3.rows) == 12
    spans = {(p.phase, p.order): (p.interval.start, p.interval.end)
             for p in results["fig3"].placed}
    assert spans[("NBT", 1)][1] == 65 and spans[("SBT", 1)][1] == 65
    assert spans[("WBL", 1)] == (65, 85) and spans[("EBL", 1)] == (65, 85)
    assert spans[("WBT", 1)] == (85, 110) and spans[("EBT", 1)] == (85, 110)
    assert spans[("WBR", 1)] == (88, 21)
    wbr = fig3.rows["WBR"]
    assert [t for t in range(110) if wbr[t] != 0] == \
        list(range(0, 21)) + list(range(88, 110))
    nbr = fig3.rows["NBR"]
    assert [t for t in range(110) if nbr[t] == -1] == list(range(65, 85))

    assert results["c11"].table.cycle == 138
    assert results["c11_1"].table.cycle == 138
    # the dummy stand-in holds structure time but never becomes a row
    assert "SBL" not in results["c39_1"].table.rows
    assert not any("dummy" in name.lower() for name in results["c39_1"].table.rows)

    assert elapsed < 1.0, f"golden assembly took {elapsed:.3f}s"


def test_interval_equations_hold_over_randomized_trials(cfg):
    rng = random.Random(1001)

    for _ in range(1000):
        c = rng.randint(2, 600)
        s = rng.randint(1, c)
        assert wrap_end(c - s, s, c) == c

    for _ in range(1000):
        c = rng.randint(20, 400)
        p = SplitParams(
            late_start=rng.randint(0, 3), red_amber=rng.randint(0, 3),
            yellow=rng.randint(0, 4), all_red=rng.randint(0, 3),
            early_cut_off=rng.randint(0, 3))
        green = rng.randint(1, c - split_from_green(p) - 1)
        gs = rng.randrange(c)
        ge = (gs + green) % c or c
        interval, params = green_interval_to_split(gs, ge, p, c)
        assert params.green == green
        assert interval.length == split_from_green(params)

    for _ in range(1000):
        sequence = gen_structure(rng)
        expected, expected_c = linear_walk(sequence)
        placed, cycle, _ = place_structure(sequence, (), None, cfg)
        assert cycle == expected_c
        got = {(p.phase, p.order): (p.interval.start, p.interval.end) for p in placed}
        assert got == {(ph, o): (s, e) for (ph, o, s, e) in expected}


def test_merged_coverage_equals_per_second_union():
    rng = random.Random(3003)
    for _ in range(1000):
        occs, cycle = gen_occurrences(rng, trimmed=rng.random() < 0.5)
        # merge_connected raises if any component spans more than one interval
        merged = merge_connected(list(occs), cycle)
        assert coverage(merged) == coverage(occs)
        if all(p.params.late_start == 0 and p.params.early_cut_off == 0
               and p.ra_red == 0 for p in occs):
            runs = circular_runs(coverage(occs), cycle)
            assert sorted((m.interval.start, m.interval.end) for m in merged) == runs


def test_validation_flags_seeded_faults_and_spares_exceptions(cfg, golden_tables):
    for seed in range(6):
        table, pair = make_conflict_table(seed)
        report = run_validation(table, cfg)
        assert report.verdict == "invalid", f"conflict seed {seed}"
        conflicts = [f for f in report.errors if f.code == "conflict"]
        assert conflicts and all(set(f.movements) == set(pair) for f in conflicts)

    for seed in range(6):
        table, ped = make_short_walk_table(seed)
        report = run_validation(table, cfg)
        assert report.verdict == "invalid", f"walk seed {seed}"
        walks = [f for f in report.errors if f.code == "walk"]
        assert walks and all(f.movements == (ped,) for f in walks)

    for name, golden in golden_tables.items():
        report = run_validation(golden, cfg)
        assert report.errors == (), f"{name}: {[f.to_dict() for f in report.errors]}"

    cycle = 60
    permissive_left = ColorTable(cycle, {
        "NBL": [-1] * cycle,
        "SBT": [2 if t < 25 else 0 for t in range(cycle)],
    })
    assert run_validation(permissive_left, cfg).errors == ()

    right_turn_merge = ColorTable(cycle, {
        "NBR": [2 if t < 30 else 0 for t in range(cycle)],
        "WBT": [2 if t < 30 else 0 for t in range(cycle)],
    })
    assert run_validation(right_turn_merge, cfg).errors == ()


REPAIR_TWINS = {
    "malformed_unlabeled": {
        "result1": [{"stageStyle": [[{"WBL": {"split": 20}}],
                                    [{"WBT": {"split": 40}}]]}],
        "result2": [], "result3": None},
    "malformed_flat_ring": {
        "result1": [{"ringStyle": [[{"WBL": {"split": 20}},
                                    {"WBT": {"split": 40}}]]}],
        "result2": [], "result3": None},
    "malformed_overthink": {
        "result1": [{"stageStyle": [
            [{"WBL": {"split": 20}}, {"EBL": {"split": 20}}],
            [{"WBT": {"split": 40}}, {"EBT": {"split": 40}}]]}],
        "result2": [{"EBR": {"phaseOrder": 1, "startTime": 20, "endTime": 60}}],
        "result3": None},
}

REPAIR_CODES = STRUCTURE_REPAIRS | {SPLIT_REPAIR}


def test_malformed_plans_repair_to_the_wellformed_table(cfg):
    for name, twin_wire in sorted(REPAIR_TWINS.items()):
        repaired = assemble_text(final_response(CORPUS / name), cfg)
        assert any(d.code in REPAIR_CODES for d in repaired.diagnostics), \
            f"{name}: no repair fired"
        twin = assemble(plan_from_results(twin_wire), cfg)
        assert not any(d.code in REPAIR_CODES for d in twin.diagnostics), \
            f"{name}: twin needed repair"
        match = compare_to_golden(repaired.table, twin.table)
        assert match.correct, f"{name}: {match}"


def test_replay_bench_is_exact_and_byte_stable(cfg):
    prompts = load_prompts()
    ccfg = CompletionConfig()
    cases = load_dataset(CORPUS)
    assert len(cases) >= 20

    report = run_bench(cases, 3, cfg, prompts, ccfg, replay_transport_for)
    assert report.per_run_accuracy() == [1.0, 1.0, 1.0]
    payload = report.to_dict()
    assert payload["meanAccuracy"] == 1.0

    again = run_bench(cases, 3, cfg, prompts, ccfg, replay_transport_for, workers=8)
    assert json.dumps(payload, sort_keys=True) == \
        json.dumps(again.to_dict(), sort_keys=True)


def test_round_trips_hold_over_the_whole_corpus(cfg, golden_tables):
    for label, text in all_response_texts():
        ir = parse_llm_output(text)
        wire = serialize_ir(ir)
        again = parse_llm_output(wire)
        assert serialize_ir(again) == wire, label
        assert results_dict(again) == results_dict(ir), label

    for name, golden in golden_tables.items():
        back = table_from_json(export_json(golden))
        assert back.cycle == golden.cycle and back.rows == golden.rows, name

    for name in GOLDEN_CASES:
        table = assemble_text(final_response(CORPUS / name), cfg).table
        back = table_from_json(export_json(table))
        assert back.cycle == table.cycle and back.rows == table.rows, name
