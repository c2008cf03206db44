"""End-to-end assembly: cleanse, lint, place, overlay, render, validate.

Each stage either succeeds or raises a typed error; `assemble` tags the
failing stage so callers can report where a plan broke.  An invalid plan is
NOT an error here: the table is produced and the validation report says
invalid.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cleanse import cleanse, structural_occurrences
from .config import IntersectionConfig
from .diagnostics import has_errors, warning
from .emit import ColorTable, render_colors
from .errors import AssemblyError, EmptyStructureNoCycle, LintFailure, PlanError
from .ir import PlanIR, lint_ir, parse_llm_output
from .overlay import merge_all, resolve_overlaps
from .timing import (
    place_standalone_record,
    place_structure,
    is_standalone,
    needs_location,
    standalone_cycle_hint,
)
from .validate import ValidationReport, run_validation


@dataclass(frozen=True)
class AssemblyResult:
    ir: PlanIR
    cycle: int
    placed: tuple
    table: ColorTable
    report: ValidationReport
    diagnostics: tuple = field(default=())

    @property
    def verdict(self) -> str:
        return self.report.verdict

    def to_dict(self) -> dict:
        return {
            "cycle": self.cycle,
            "table": {"cycle": self.table.cycle,
                      "rows": {k: v for k, v in self.table.sorted_rows()}},
            "report": self.report.to_dict(),
            "diagnostics": [d.to_dict() for d in self.diagnostics],
        }


def _stage(name: str):
    class _Guard:
        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            if exc is not None and isinstance(exc, PlanError) and not isinstance(exc, AssemblyError):
                raise AssemblyError(name, exc) from exc
            return False

    return _Guard()


def assemble(ir: PlanIR, cfg: IntersectionConfig) -> AssemblyResult:
    with _stage("cleanse"):
        plan = cleanse(ir, cfg)
    diags = list(plan.diagnostics)  # parse diagnostics ride along on the plan

    with _stage("lint"):
        findings = lint_ir(plan)
        if has_errors(findings):
            raise LintFailure([f for f in findings if f.severity == "error"])
        diags.extend(findings)

    with _stage("timing"):
        majors, cycle, warns = place_structure(
            plan.sequence, plan.attributes, plan.cycle_length, cfg)
        diags.extend(warns)
        if cycle is None:
            cycle = standalone_cycle_hint(plan.attributes)
            if cycle is None:
                raise EmptyStructureNoCycle(
                    "no structure, no declared cycle, and no record fixes an end time")
            diags.append(warning(
                "cycle-from-standalone",
                f"cycle length {cycle} taken from the latest standalone end",
            ))

        structural = structural_occurrences(plan.sequence)
        placed = []
        overridden = set()
        consumed = set()
        for rec in plan.attributes:
            if is_standalone(rec):
                placed.append(place_standalone_record(rec, cycle, cfg))
                overridden.add((rec.phase, rec.order))
                consumed.add((rec.phase, rec.order))
            elif needs_location(rec):
                place_standalone_record(rec, cycle, cfg)  # raises UnderSpecified
        placed.extend(p for p in majors if (p.phase, p.order) not in overridden)

    with _stage("overlay"):
        overlap_recs = []
        for rec in plan.attributes:
            key = (rec.phase, rec.order)
            if key in consumed:
                continue
            if isinstance(rec.get("parentPhase"), str):
                if key in structural:
                    diags.append(warning(
                        "overlap-ignored",
                        f"{rec.phase} occurrence {rec.order} is placed by the structure; "
                        "parentPhase ignored",
                        rec.phase,
                    ))
                    consumed.add(key)
                    continue
                overlap_recs.append(rec)
                consumed.add(key)
            elif key in structural:
                consumed.add(key)
        children = resolve_overlaps(placed, overlap_recs, cfg)
        placed.extend(children)

        for rec in plan.attributes:
            if (rec.phase, rec.order) not in consumed:
                diags.append(warning(
                    "unlocatable-record",
                    f"{rec.phase} occurrence {rec.order} matches no structure slot and "
                    "carries no locating attributes; dropped",
                    rec.phase,
                ))

        merged = merge_all(placed, cycle)

    with _stage("emit"):
        table, render_diags = render_colors(merged, cycle)
        diags.extend(render_diags)

    with _stage("validate"):
        report = run_validation(table, cfg)

    return AssemblyResult(plan, cycle, tuple(merged), table, report, tuple(diags))


def assemble_text(text: str, cfg: IntersectionConfig) -> AssemblyResult:
    with _stage("parse"):
        ir = parse_llm_output(text)
    return assemble(ir, cfg)
