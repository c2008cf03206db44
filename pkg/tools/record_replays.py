"""Regenerate corpus replay fixtures from the authored response files.

Each case replays its description turns through the real gateway with the
responses/turnN.txt texts standing in for the model, recording one fixture
per exchange.  Run after editing any description or response file:

    python3 tools/record_replays.py [corpus-root]
"""

import shutil
import sys
from pathlib import Path

from spatc.bench import load_case
from spatc.gateway import (
    ChatSession,
    CompletionConfig,
    RecordingTransport,
    ScriptedTransport,
    load_prompts,
    run_turn,
)


def record_case(case_dir: Path, prompts, ccfg) -> int:
    case = load_case(case_dir)
    replies = []
    for i in range(1, len(case.turns) + 1):
        replies.append((case_dir / "responses" / f"turn{i}.txt").read_text("utf-8"))

    replay_dir = case_dir / "replay"
    if replay_dir.exists():
        shutil.rmtree(replay_dir)
    transport = RecordingTransport(ScriptedTransport(replies), replay_dir)

    session = ChatSession(language=case.language)
    for text in case.turns:
        run_turn(session, text, prompts, ccfg, transport)
    return len(case.turns)


def main() -> int:
    root = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("corpus")
    prompts = load_prompts()
    ccfg = CompletionConfig()
    total = 0
    for case_dir in sorted(root.iterdir()):
        if not (case_dir / "meta.json").exists():
            continue
        count = record_case(case_dir, prompts, ccfg)
        total += count
        print(f"{case_dir.name}: {count} fixture(s)")
    print(f"recorded {total} exchanges")
    return 0


if __name__ == "__main__":
    sys.exit(main())
