import json

import pytest

from spatc.bench import (
    load_case,
    load_dataset,
    replay_transport_for,
    run_bench,
    run_case,
)
from spatc.config import load_config
from spatc.errors import DatasetError
from spatc.gateway import CompletionConfig, load_prompts

from helpers import CORPUS

CCFG = CompletionConfig()


@pytest.fixture(scope="module")
def prompts():
    return load_prompts()


@pytest.fixture(scope="module")
def icfg():
    return load_config()


def test_load_case_splits_turns_on_separator():
    case = load_case(CORPUS / "zh_edit")
    assert case.language == "zh" and len(case.turns) == 2
    assert "35" in case.turns[1]
    assert case.golden is not None


def test_load_case_invalid_requires_categories():
    case = load_case(CORPUS / "invalid_conflict")
    assert case.expected == "invalid"
    assert "conflict" in case.expected_categories
    assert case.golden is None


def test_load_dataset_finds_all_cases():
    cases = load_dataset(CORPUS)
    assert len(cases) >= 20
    assert any(c.language == "zh" for c in cases)


def test_load_dataset_rejects_caseless_dir(tmp_path):
    with pytest.raises(DatasetError):
        load_dataset(tmp_path)


def test_valid_case_runs_correct(icfg, prompts):
    result = run_case(load_case(CORPUS / "fig3"), 2, icfg, prompts, CCFG)
    assert all(r.correct and r.verdict == "valid" for r in result.runs)
    assert all(r.taxonomy == () for r in result.runs)


def test_multi_turn_case_uses_final_plan(icfg, prompts):
    result = run_case(load_case(CORPUS / "zh_edit"), 1, icfg, prompts, CCFG)
    assert result.runs[0].correct


def test_invalid_case_scores_on_categories(icfg, prompts):
    result = run_case(load_case(CORPUS / "invalid_conflict"), 1, icfg, prompts, CCFG)
    run = result.runs[0]
    assert run.correct and run.verdict == "invalid"
    assert "conflict" in run.categories


def test_structure_repair_counts_as_formatting(icfg, prompts):
    result = run_case(load_case(CORPUS / "malformed_flat_ring"), 1, icfg, prompts, CCFG)
    assert result.runs[0].correct
    assert result.runs[0].taxonomy == ("formatting",)


def test_split_conflict_counts_as_overthinking(icfg, prompts):
    result = run_case(load_case(CORPUS / "malformed_overthink"), 1, icfg, prompts, CCFG)
    assert result.runs[0].correct
    assert result.runs[0].taxonomy == ("overthinking",)


def test_wrong_table_counts_as_semantic(icfg, prompts, tmp_path):
    src = CORPUS / "fig3"
    case_dir = tmp_path / "fig3_broken"
    case_dir.mkdir()
    for name in ("meta.json", "description.txt"):
        case_dir.joinpath(name).write_text(src.joinpath(name).read_text())
    golden = src.joinpath("golden.csv").read_text().splitlines()
    golden[1] = golden[1].replace("2", "0")  # corrupt one row
    case_dir.joinpath("golden.csv").write_text("\n".join(golden) + "\n")
    (case_dir / "replay").mkdir()
    for fx in (src / "replay").glob("*.json"):
        (case_dir / "replay" / fx.name).write_text(fx.read_text())

    result = run_case(load_case(case_dir), 1, icfg, prompts, CCFG)
    run = result.runs[0]
    assert not run.correct
    assert "semantic" in run.taxonomy
    assert "differing" in run.detail


def test_ir_payload_skips_the_chat(icfg, prompts, tmp_path):
    case_dir = tmp_path / "direct"
    case_dir.mkdir()
    (case_dir / "meta.json").write_text(json.dumps(
        {"id": "direct", "language": "en", "expected": "invalid",
         "expected_categories": ["conflict"], "turns": 1}))
    (case_dir / "description.txt").write_text("two crossing throughs at once")
    (case_dir / "ir.json").write_text(json.dumps({
        "result1": [{"stageStyle": [[{"NBT": {"split": 30}}, {"EBT": {"split": 30}}]]}],
        "result2": [], "result3": None,
    }))

    def explode(case):
        raise AssertionError("transport must not be used when ir.json exists")

    result = run_case(load_case(case_dir), 1, icfg, prompts, CCFG, make_transport=explode)
    assert result.runs[0].correct and result.runs[0].verdict == "invalid"


def test_report_shape_and_stability(icfg, prompts):
    cases = [load_case(CORPUS / name) for name in
             ("fig3", "zh_edit", "invalid_conflict", "malformed_overthink")]
    report_a = run_bench(cases, 3, icfg, prompts, CCFG, replay_transport_for, workers=2)
    report_b = run_bench(cases, 3, icfg, prompts, CCFG, replay_transport_for, workers=4)

    payload = report_a.to_dict()
    assert payload["runs"] == 3 and payload["cases"] == 4
    assert payload["perRunAccuracy"] == [1.0, 1.0, 1.0]
    assert payload["meanAccuracy"] == 1.0
    assert payload["anyOfRunsAccuracy"] == 1.0 and payload["allOfRunsAccuracy"] == 1.0
    assert set(payload["perLanguage"]) == {"en", "zh"}
    assert payload["perLanguage"]["zh"]["cases"] == 1
    assert payload["errorTaxonomy"] == {"formatting": 0, "overthinking": 3, "semantic": 0}
    assert json.dumps(payload, sort_keys=True) == \
        json.dumps(report_b.to_dict(), sort_keys=True)


def test_per_run_accuracy_reflects_failures(icfg, prompts, tmp_path):
    case_dir = tmp_path / "broken"
    case_dir.mkdir()
    (case_dir / "meta.json").write_text(json.dumps(
        {"id": "broken", "language": "en", "expected": "invalid",
         "expected_categories": ["walk"], "turns": 1}))
    (case_dir / "description.txt").write_text("x")
    (case_dir / "ir.json").write_text(json.dumps({
        "result1": [{"stageStyle": [[{"NBT": {"split": 30}}]]}],
        "result2": [], "result3": None,
    }))
    good = load_case(CORPUS / "fig3")
    bad = load_case(case_dir)
    report = run_bench([good, bad], 2, icfg, prompts, CCFG, replay_transport_for)
    assert report.per_run_accuracy() == [0.5, 0.5]
    payload = report.to_dict()
    assert payload["errorTaxonomy"]["semantic"] == 2
