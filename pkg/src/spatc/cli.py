"""Command line front-end.

Exit codes are a stable contract: 0 valid plan, 1 invalid plan, 2 pipeline
or dataset error, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import load_dataset, replay_transport_for, run_bench
from .config import load_config
from .emit import export, render_times_table, table_from_csv, table_from_json
from .errors import PlanError
from .gateway import (
    ChatSession,
    CompletionConfig,
    HttpTransport,
    ReplayTransport,
    load_prompts,
    run_turn,
)
from .pipeline import assemble_text
from .validate import run_validation

EXIT_VALID = 0
EXIT_INVALID = 1
EXIT_PIPELINE = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _transport(spec: str):
    if spec == "live":
        return HttpTransport()
    if spec.startswith("replay:"):
        return ReplayTransport(spec.split(":", 1)[1])
    raise PlanError(f"unknown transport {spec!r} (use live or replay:DIR)")


def _write_out(text: str, out):
    if out:
        Path(out).write_text(text, "utf-8")
    else:
        sys.stdout.write(text)


def _report_lines(result) -> str:
    lines = [f"cycle {result.cycle}s, verdict {result.verdict}"]
    for finding in result.report.errors:
        lines.append(f"  error: {finding.message}")
    for finding in result.report.warnings:
        lines.append(f"  warning: {finding.message}")
    for diag in result.diagnostics:
        lines.append(f"  {diag.severity}: [{diag.code}] {diag.message}")
    return "\n".join(lines) + "\n"


def cmd_assemble(args) -> int:
    cfg = load_config(args.config)
    text = Path(args.ir).read_text("utf-8")
    result = assemble_text(text, cfg)
    _write_out(export(result.table, args.format, palette=cfg.palette), args.out)
    sys.stderr.write(_report_lines(result))
    return EXIT_VALID if result.verdict == "valid" else EXIT_INVALID


def cmd_describe(args) -> int:
    cfg = load_config(args.config)
    prompts = load_prompts()
    completion = CompletionConfig.from_env()
    transport = _transport(args.transport)
    text = args.text if args.text is not None else Path(args.file).read_text("utf-8")

    session = ChatSession(language=args.lang)
    outcome = run_turn(session, text, prompts, completion, transport)
    if outcome.ir is None:
        sys.stderr.write(f"reply did not parse: {outcome.error}\n")
        return EXIT_PIPELINE
    result = assemble_text(outcome.reply, cfg)
    _write_out(export(result.table, args.format, palette=cfg.palette), args.out)
    sys.stderr.write(_report_lines(result))
    return EXIT_VALID if result.verdict == "valid" else EXIT_INVALID


def cmd_chat(args) -> int:
    cfg = load_config(args.config)
    prompts = load_prompts()
    completion = CompletionConfig.from_env()
    transport = _transport(args.transport)
    session = ChatSession(language=args.lang)

    sys.stderr.write("describe a plan; empty line or EOF quits\n")
    while True:
        try:
            line = input("you> ")
        except EOFError:
            break
        if not line.strip():
            break
        try:
            outcome = run_turn(session, line, prompts, completion, transport)
        except PlanError as exc:
            sys.stderr.write(f"transport error: {exc}\n")
            continue
        if outcome.ir is None:
            sys.stderr.write(f"reply did not parse: {outcome.error}\n")
            continue
        try:
            result = assemble_text(outcome.reply, cfg)
        except PlanError as exc:
            sys.stderr.write(f"assembly failed: {exc}\n")
            continue
        sys.stdout.write(render_times_table(result.table))
        sys.stdout.write(_report_lines(result))
    return EXIT_VALID


def cmd_validate(args) -> int:
    cfg = load_config(args.config)
    text = Path(args.table).read_text("utf-8")
    table = table_from_json(text) if text.lstrip().startswith("{") else table_from_csv(text)
    report = run_validation(table, cfg)
    sys.stdout.write(json.dumps(report.to_dict(), indent=2) + "\n")
    return EXIT_VALID if report.verdict == "valid" else EXIT_INVALID


def cmd_bench(args) -> int:
    cfg = load_config(args.config)
    prompts = load_prompts()
    completion = CompletionConfig.from_env()
    cases = load_dataset(args.dataset)

    if args.transport == "replay":
        make_transport = replay_transport_for
    else:
        live = _transport(args.transport)
        make_transport = lambda case: live  # noqa: E731 - tiny adapter

    report = run_bench(cases, args.runs, cfg, prompts, completion,
                       make_transport, workers=args.workers)
    payload = report.to_dict()
    if args.json:
        Path(args.json).write_text(json.dumps(payload, indent=2) + "\n", "utf-8")

    for case in payload["caseResults"]:
        marks = "".join("+" if r["correct"] else "-" for r in case["runs"])
        sys.stdout.write(f"{case['id']:24s} {case['language']} {marks}\n")
    sys.stdout.write(
        f"runs {payload['runs']}, cases {payload['cases']}, "
        f"per-run accuracy {payload['perRunAccuracy']}, "
        f"mean {payload['meanAccuracy']:.4f}\n")
    sys.stdout.write(f"taxonomy {payload['errorTaxonomy']}\n")
    return EXIT_VALID


def cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    cfg = load_config(args.config)
    transport = _transport(args.transport)
    app = create_app(cfg=cfg, transport=transport, frontend=args.frontend)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_VALID


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spatc", description="signal plan compiler and workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("assemble", help="assemble an IR file into a color table")
    p.add_argument("--ir", required=True, help="file holding the result JSON (prose allowed)")
    p.add_argument("--config", default=None)
    p.add_argument("--format", default="text", choices=["json", "csv", "svg", "text"])
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_assemble)

    p = sub.add_parser("describe", help="one description through the model to a table")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--text")
    group.add_argument("--file")
    p.add_argument("--lang", default="en", choices=["en", "zh"])
    p.add_argument("--transport", default="live", help="live or replay:DIR")
    p.add_argument("--config", default=None)
    p.add_argument("--format", default="text", choices=["json", "csv", "svg", "text"])
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_describe)

    p = sub.add_parser("chat", help="interactive session printing the times table")
    p.add_argument("--lang", default="en", choices=["en", "zh"])
    p.add_argument("--transport", default="live", help="live or replay:DIR")
    p.add_argument("--config", default=None)
    p.set_defaults(func=cmd_chat)

    p = sub.add_parser("validate", help="validate a table file (csv or json)")
    p.add_argument("--table", required=True)
    p.add_argument("--config", default=None)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("bench", help="run the benchmark corpus")
    p.add_argument("--dataset", required=True)
    p.add_argument("--runs", type=int, default=3)
    p.add_argument("--transport", default="replay", help="replay (per-case fixtures) or live")
    p.add_argument("--workers", type=int, default=4)
    p.add_argument("--config", default=None)
    p.add_argument("--json", default=None, help="write the full report to this file")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("serve", help="serve the HTTP API and web UI")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--config", default=None)
    p.add_argument("--frontend", default=None)
    p.add_argument("--transport", default="live", help="live or replay:DIR")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PlanError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PIPELINE
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PIPELINE


if __name__ == "__main__":
    sys.exit(main())
