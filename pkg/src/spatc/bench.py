"""Benchmark harness: replay or live runs over a case corpus, exact-match scored.

A case is one directory: description.txt (user turns separated by a `---`
line), meta.json, golden.csv for valid cases, replay/ fixtures for offline
runs, responses/ as authoring source, and optionally ir.json to skip the chat
entirely.  A valid case counts as correct only when the assembled table
matches the golden second for second AND validation says valid; an invalid
case counts when validation flags every expected category.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .diagnostics import SPLIT_REPAIR, STRUCTURE_REPAIRS
from .emit import table_from_csv
from .errors import DatasetError, PlanError
from .gateway import ChatSession, ReplayTransport, run_turn
from .ir import plan_from_results
from .pipeline import assemble
from .validate import compare_to_golden

TAXONOMY = ("formatting", "overthinking", "semantic")


@dataclass(frozen=True)
class BenchCase:
    id: str
    language: str
    expected: str  # valid | invalid
    expected_categories: tuple
    turns: tuple
    directory: Path
    golden: object = None      # ColorTable for valid cases
    ir_payload: dict | None = None  # pre-recorded results object, skips the chat


@dataclass
class RunResult:
    correct: bool
    verdict: str = ""
    categories: tuple = ()
    taxonomy: tuple = ()
    detail: str = ""


@dataclass
class CaseResult:
    case: BenchCase
    runs: list = field(default_factory=list)


def load_case(path) -> BenchCase:
    path = Path(path)
    try:
        meta = json.loads((path / "meta.json").read_text("utf-8"))
        description = (path / "description.txt").read_text("utf-8")
    except (OSError, ValueError) as exc:
        raise DatasetError(f"{path}: unreadable case: {exc}") from exc

    turns = []
    block: list[str] = []
    for line in description.splitlines():
        if line.strip() == "---":
            turns.append("\n".join(block).strip())
            block = []
        else:
            block.append(line)
    turns.append("\n".join(block).strip())
    turns = [t for t in turns if t]
    if not turns:
        raise DatasetError(f"{path}: description.txt has no turns")

    expected = meta.get("expected", "valid")
    golden = None
    if expected == "valid":
        golden_path = path / "golden.csv"
        if not golden_path.exists():
            raise DatasetError(f"{path}: valid case without golden.csv")
        golden = table_from_csv(golden_path.read_text("utf-8"))

    categories = tuple(meta.get("expected_categories", []))
    if expected == "invalid" and not categories:
        raise DatasetError(f"{path}: invalid case must name expected categories")

    ir_payload = None
    ir_path = path / "ir.json"
    if ir_path.exists():
        ir_payload = json.loads(ir_path.read_text("utf-8"))

    return BenchCase(
        id=meta.get("id", path.name),
        language=meta.get("language", "en"),
        expected=expected,
        expected_categories=categories,
        turns=tuple(turns),
        directory=path,
        golden=golden,
        ir_payload=ir_payload,
    )


def load_dataset(root) -> list:
    root = Path(root)
    if not root.is_dir():
        raise DatasetError(f"{root} is not a directory")
    cases = []
    for child in sorted(root.iterdir()):
        if (child / "meta.json").exists():
            cases.append(load_case(child))
    if not cases:
        raise DatasetError(f"{root} holds no cases")
    return cases


def replay_transport_for(case: BenchCase):
    return ReplayTransport(case.directory / "replay")


def _run_once(case: BenchCase, icfg, prompts, ccfg, make_transport) -> RunResult:
    taxonomy = set()
    try:
        if case.ir_payload is not None:
            ir = plan_from_results(case.ir_payload)
        else:
            session = ChatSession(language=case.language)
            transport = make_transport(case)
            ir = None
            for text in case.turns:
                outcome = run_turn(session, text, prompts, ccfg, transport)
                if outcome.ir is not None:
                    ir = outcome.ir
            if ir is None:
                return RunResult(False, taxonomy=("semantic",), detail="no parsable reply")
        result = assemble(ir, icfg)
    except PlanError as exc:
        return RunResult(False, taxonomy=("semantic",), detail=str(exc))

    codes = {d.code for d in result.diagnostics}
    if codes & STRUCTURE_REPAIRS:
        taxonomy.add("formatting")
    if SPLIT_REPAIR in codes:
        taxonomy.add("overthinking")

    categories = tuple(sorted({f.code for f in result.report.errors}))
    if case.expected == "valid":
        match = compare_to_golden(result.table, case.golden)
        correct = match.correct and result.verdict == "valid"
        detail = "" if correct else _mismatch_detail(match, result.verdict)
    else:
        missing = [c for c in case.expected_categories if c not in categories]
        correct = result.verdict == "invalid" and not missing
        detail = "" if correct else f"verdict {result.verdict}, missing categories {missing}"

    if not correct:
        taxonomy.add("semantic")
    return RunResult(correct, result.verdict, categories, tuple(sorted(taxonomy)), detail)


def _mismatch_detail(match, verdict) -> str:
    if verdict != "valid":
        return f"verdict {verdict}"
    if match.cycle_mismatch:
        return "cycle mismatch"
    parts = []
    if match.missing_rows:
        parts.append(f"missing rows {list(match.missing_rows)}")
    if match.extra_rows:
        parts.append(f"extra rows {list(match.extra_rows)}")
    if match.diffs:
        parts.append(f"{len(match.diffs)} differing second(s)")
    return "; ".join(parts) or "mismatch"


def run_case(case: BenchCase, runs: int, icfg, prompts, ccfg,
             make_transport=replay_transport_for) -> CaseResult:
    result = CaseResult(case)
    for _ in range(runs):
        result.runs.append(_run_once(case, icfg, prompts, ccfg, make_transport))
    return result


@dataclass
class BenchReport:
    runs: int
    cases: list

    def per_run_accuracy(self):
        total = len(self.cases)
        return [sum(1 for c in self.cases if c.runs[r].correct) / total
                for r in range(self.runs)]

    def to_dict(self) -> dict:
        per_run = self.per_run_accuracy()
        total = len(self.cases)
        any_of = sum(1 for c in self.cases if any(r.correct for r in c.runs)) / total
        all_of = sum(1 for c in self.cases if all(r.correct for r in c.runs)) / total

        languages = sorted({c.case.language for c in self.cases})
        per_language = {}
        for lang in languages:
            subset = [c for c in self.cases if c.case.language == lang]
            per_language[lang] = {
                "cases": len(subset),
                "perRun": [sum(1 for c in subset if c.runs[r].correct) / len(subset)
                           for r in range(self.runs)],
                "mean": sum(sum(1 for c in subset if c.runs[r].correct) / len(subset)
                            for r in range(self.runs)) / self.runs,
            }

        taxonomy = {name: 0 for name in TAXONOMY}
        for c in self.cases:
            for r in c.runs:
                for tag in r.taxonomy:
                    taxonomy[tag] += 1

        return {
            "runs": self.runs,
            "cases": len(self.cases),
            "perRunAccuracy": per_run,
            "meanAccuracy": sum(per_run) / len(per_run),
            "anyOfRunsAccuracy": any_of,
            "allOfRunsAccuracy": all_of,
            "perLanguage": per_language,
            "errorTaxonomy": taxonomy,
            "caseResults": [
                {
                    "id": c.case.id,
                    "language": c.case.language,
                    "expected": c.case.expected,
                    "runs": [
                        {
                            "correct": r.correct,
                            "verdict": r.verdict,
                            "categories": list(r.categories),
                            "taxonomy": list(r.taxonomy),
                            "detail": r.detail,
                        }
                        for r in c.runs
                    ],
                }
                for c in self.cases
            ],
        }


def run_bench(cases, runs: int, icfg, prompts, ccfg,
              make_transport=replay_transport_for, workers: int = 4) -> BenchReport:
    if not cases:
        raise DatasetError("empty dataset")
    if runs < 1:
        raise DatasetError("runs must be at least 1")

    def job(case):
        return run_case(case, runs, icfg, prompts, ccfg, make_transport)

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        results = list(pool.map(job, cases))
    return BenchReport(runs, results)
