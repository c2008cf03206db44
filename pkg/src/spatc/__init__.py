"""Signal plan compiler: exact second-by-second color tables from plan IR."""

from .config import IntersectionConfig, config_from_dict, load_config
from .diagnostics import Diagnostic
from .emit import ColorTable, export, render_times_table, table_from_csv, table_from_json
from .errors import AssemblyError, LintFailure, PlanError
from .gateway import (
    ChatSession,
    CompletionConfig,
    HttpTransport,
    RecordingTransport,
    ReplayTransport,
    ScriptedTransport,
    load_prompts,
    run_turn,
)
from .ir import PlanIR, lint_ir, parse_llm_output, serialize_ir
from .pipeline import AssemblyResult, assemble, assemble_text
from .validate import MatchReport, ValidationReport, compare_to_golden, run_validation

__version__ = "0.1.0"

__all__ = [
    "AssemblyError",
    "AssemblyResult",
    "ChatSession",
    "ColorTable",
    "CompletionConfig",
    "Diagnostic",
    "HttpTransport",
    "IntersectionConfig",
    "LintFailure",
    "MatchReport",
    "PlanError",
    "PlanIR",
    "RecordingTransport",
    "ReplayTransport",
    "ScriptedTransport",
    "ValidationReport",
    "assemble",
    "assemble_text",
    "compare_to_golden",
    "config_from_dict",
    "export",
    "lint_ir",
    "load_config",
    "load_prompts",
    "parse_llm_output",
    "render_times_table",
    "run_turn",
    "run_validation",
    "serialize_ir",
    "table_from_csv",
    "table_from_json",
]
