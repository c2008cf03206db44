import pytest

from spatc.cleanse import (
    cleanse,
    expand_all_ped,
    iter_entries,
    normalize_names,
    repair_structure,
    resolve_ped_defaults,
    structural_occurrences,
)
from spatc.errors import NoDefaultConfigured, StructureUnrepairable, UnknownPhase
from spatc.ir import RING, STAGE, PhaseEntry, PlanIR, StructureNode, plan_from_results

from helpers import CORPUS, final_response


def _diag_codes(ir):
    return [d.code for d in ir.diagnostics]


def test_aliases_resolve_to_canonical_names(cfg):
    ir = plan_from_results({
        "result1": [{"stageStyle": [[{"westbound through": {"split": 30}}]]}],
        "result2": [{"北向直行": {"phaseOrder": 1, "greenFlash": 3}},
                    {"∅A": {"phaseOrder": 1, "parentPhase": "西向直行"}}],
    })
    out = normalize_names(ir, cfg)
    assert next(iter_entries(out.sequence)).phase == "WBT"
    assert out.attributes[0].phase == "NBT"
    assert out.attributes[1].phase == "NorthPed"
    assert out.attributes[1].get("parentPhase") == "WBT"


def test_unknown_phase_rejected(cfg):
    ir = plan_from_results({"result2": [{"Northish": {"phaseOrder": 1, "split": 9}}]})
    with pytest.raises(UnknownPhase):
        normalize_names(ir, cfg)


def test_default_parent_name_passes_through(cfg):
    ir = plan_from_results({"result2": [{"NorthPed": {"phaseOrder": 1, "parentPhase": "default"}}]})
    out = normalize_names(ir, cfg)
    assert out.attributes[0].get("parentPhase") == "default"


def test_repair_wraps_bare_list_one_stage_per_phase():
    ir = plan_from_results({"result1": [{"WBL": {"split": 20}}, {"WBT": {"split": 40}}]})
    out, repairs = repair_structure(ir)
    assert out.sequence[0].style == STAGE
    assert [tuple(e.phase for e in s) for s in out.sequence[0].body] == [("WBL",), ("WBT",)]
    assert [d.code for d in repairs] == ["repair-unlabeled-structure"]


def test_repair_wraps_loose_phase_among_stages():
    node = StructureNode(STAGE, (PhaseEntry("WBL", 20, None),
                                 (PhaseEntry("WBT", 40, None),)))
    out, repairs = repair_structure(PlanIR((node,), (), None))
    assert all(isinstance(s, tuple) for s in out.sequence[0].body)
    assert [d.code for d in repairs] == ["repair-flat-stage"]


def test_repair_rewraps_unnested_ring():
    ir = plan_from_results({"result1": [{"ringStyle": [{"WBL": {"split": 20}},
                                                       {"WBT": {"split": 40}}]}]})
    out, repairs = repair_structure(ir)
    node = out.sequence[0]
    assert node.style == RING
    assert len(node.body) == 1
    assert [e.phase for e in node.body[0]] == ["WBL", "WBT"]
    assert [d.code for d in repairs] == ["repair-flat-ring"]


def test_ring_mixing_loose_and_nested_is_unrepairable():
    ir = plan_from_results({"result1": [{"ringStyle": [
        {"WBL": {"split": 20}},
        [{"WBT": {"split": 40}}],
    ]}]})
    with pytest.raises(StructureUnrepairable):
        repair_structure(ir)


def test_repair_drops_split_when_start_and_end_present():
    ir = plan_from_results({"result2": [
        {"EBR": {"phaseOrder": 1, "startTime": 20, "endTime": 60, "split": 27}},
    ]})
    out, repairs = repair_structure(ir)
    rec = out.attributes[0]
    assert not rec.has("split")
    assert rec.get("startTime") == 20 and rec.get("endTime") == 60
    assert [d.code for d in repairs] == ["repair-split-conflict"]


def test_start_plus_split_untouched():
    ir = plan_from_results({"result2": [{"EBR": {"phaseOrder": 1, "startTime": 20, "split": 27}}]})
    out, repairs = repair_structure(ir)
    assert out.attributes[0].get("split") == 27
    assert repairs == []


def test_all_ped_expands_inside_stage(cfg):
    ir = plan_from_results({"result1": [{"stageStyle": [
        [{"NBT": {"split": 30}}],
        [{"AllPed": {"split": 30}}],
    ]}], "result2": [{"AllPed": {"phaseOrder": 1, "pedClear": 5}}]})
    out, diags = expand_all_ped(ir)
    stage2 = out.sequence[0].body[1]
    assert [e.phase for e in stage2] == ["NorthPed", "SouthPed", "EastPed", "WestPed"]
    cloned = [r for r in out.attributes if r.get("pedClear") == 5]
    assert sorted(r.phase for r in cloned) == ["EastPed", "NorthPed", "SouthPed", "WestPed"]
    assert all(r.order == 1 for r in cloned)
    assert any(d.code == "expand-all-ped" for d in diags)


def test_all_ped_in_ring_becomes_nested_stage(cfg):
    ir = plan_from_results({"result1": [{"ringStyle": [[
        {"NBT": {"split": 30}},
        {"AllPed": {"split": 20}},
    ]]}]})
    out, _ = expand_all_ped(ir)
    ring = out.sequence[0].body[0]
    assert isinstance(ring[1], StructureNode) and ring[1].style == STAGE
    assert [e.phase for e in ring[1].body[0]] == ["NorthPed", "SouthPed", "EastPed", "WestPed"]


def test_all_ped_occurrence_indices_account_for_existing_peds(cfg):
    ir = plan_from_results({"result1": [{"stageStyle": [
        [{"NorthPed": {"split": 20}}],
        [{"AllPed": {"split": 30}}],
    ]}], "result2": [{"AllPed": {"phaseOrder": 1, "pedClear": 4}}]})
    out, _ = expand_all_ped(ir)
    north = [r for r in out.attributes if r.phase == "NorthPed"]
    assert north[0].order == 2  # the structural NorthPed came first
    assert (("NorthPed", 2) in structural_occurrences(out.sequence))


def test_no_all_ped_returns_plan_unchanged(cfg):
    ir = plan_from_results({"result1": [{"stageStyle": [[{"NBT": {"split": 30}}]]}]})
    out, diags = expand_all_ped(ir)
    assert out is ir and diags == []


def test_single_parent_default(cfg):
    ir = plan_from_results({"result2": [{"NorthPed": {"phaseOrder": 1, "parentPhase": "default"}}]})
    out, diags = resolve_ped_defaults(ir, cfg)
    assert out.attributes[0].get("parentPhase") == "WBT"
    assert any(d.code == "ped-default" for d in diags)


def test_two_parent_default_fans_out(cfg):
    ir = plan_from_results({"result2": [
        {"NorthPedA": {"phaseOrder": 1, "parentPhase": "default", "pedClear": 6}},
    ]})
    out, _ = resolve_ped_defaults(ir, cfg)
    recs = [r for r in out.attributes if r.phase == "NorthPedA"]
    assert [(r.get("parentPhase"), r.get("overlapNum")) for r in recs] == [("WBT", 0), ("EBL", 0)]
    assert all(r.get("pedClear") == 6 for r in recs)
    assert [r.order for r in recs] == [1, 2]


def test_structural_ped_drops_default(cfg):
    ir = plan_from_results({
        "result1": [{"stageStyle": [[{"NorthPed": {"split": 20}}]]}],
        "result2": [{"NorthPed": {"phaseOrder": 1, "parentPhase": "default"}}],
    })
    out, diags = resolve_ped_defaults(ir, cfg)
    assert not out.attributes[0].has("parentPhase")
    assert any(d.code == "ped-default" for d in diags)


def test_vehicular_default_is_an_error(cfg):
    ir = plan_from_results({"result2": [{"WBL": {"phaseOrder": 1, "parentPhase": "default"}}]})
    with pytest.raises(NoDefaultConfigured):
        resolve_ped_defaults(ir, cfg)


def test_cleanse_is_idempotent_over_corpus(cfg):
    from spatc.ir import parse_llm_output
    for case in ("fig3_full", "malformed_flat_ring", "malformed_unlabeled", "zh_edit"):
        ir = parse_llm_output(final_response(CORPUS / case))
        once = cleanse(ir, cfg)
        twice = cleanse(once, cfg)
        assert twice == once, case


def test_iter_entries_matches_structural_occurrence_count(cfg):
    from spatc.ir import parse_llm_output
    ir = cleanse(parse_llm_output(final_response(CORPUS / "fig3_full")), cfg)
    entries = list(iter_entries(ir.sequence))
    occs = structural_occurrences(ir.sequence)
    assert len(occs) == len(entries)
