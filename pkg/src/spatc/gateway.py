"""Chat front-end: prompts, sessions, and pluggable completion transports.

The live transport speaks the common chat-completions HTTP shape; the replay
transport answers from recorded fixtures keyed by a digest of the outgoing
messages, which keeps every test offline and deterministic.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
import time
import uuid
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import httpx

from .errors import ReplayMiss, TransportError, UnsupportedLanguage
from .ir import PlanIR, parse_llm_output

LANGUAGES = ("en", "zh")


@dataclass(frozen=True)
class PromptAssets:
    prompts: dict

    def get(self, language: str) -> str:
        try:
            return self.prompts[language]
        except KeyError:
            raise UnsupportedLanguage(f"no prompt asset for language {language!r}") from None


def load_prompts() -> PromptAssets:
    prompts = {}
    for lang in LANGUAGES:
        text = resources.files("spatc").joinpath("assets").joinpath(f"prompt_{lang}.txt").read_text("utf-8")
        if not text.strip():
            raise UnsupportedLanguage(f"prompt asset for {lang} is empty")
        prompts[lang] = text
    return PromptAssets(prompts)


@dataclass(frozen=True)
class CompletionConfig:
    endpoint: str = ""
    model: str = ""
    api_key: str = ""
    temperature: float = 0.7
    max_tokens: int = 4096
    retries: int = 2
    timeout: float = 60.0

    @classmethod
    def from_env(cls, env=os.environ) -> "CompletionConfig":
        return cls(
            endpoint=env.get("SPATC_ENDPOINT", ""),
            model=env.get("SPATC_MODEL", ""),
            api_key=env.get("SPATC_API_KEY", ""),
        )


@dataclass
class Turn:
    role: str
    text: str
    timestamp: float = field(default_factory=time.time)


@dataclass
class ChatSession:
    language: str = "en"
    id: str = field(default_factory=lambda: uuid.uuid4().hex)
    turns: list = field(default_factory=list)
    latest_ir: PlanIR | None = None
    latest_result: object = None  # AssemblyResult, set by callers that assemble
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)


def message_digest(messages) -> str:
    canonical = json.dumps(messages, ensure_ascii=False, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def build_messages(assets: PromptAssets, session: ChatSession, user_text: str):
    messages = [{"role": "system", "content": assets.get(session.language)}]
    for turn in session.turns:
        messages.append({"role": turn.role, "content": turn.text})
    messages.append({"role": "user", "content": user_text})
    return messages


# --- transports --------------------------------------------------------------

class HttpTransport:
    """Chat-completions over HTTP: messages in, choices[0].message.content out."""

    def __init__(self, client: httpx.Client | None = None):
        self._client = client or httpx.Client()

    def complete(self, messages, cfg: CompletionConfig) -> str:
        if not cfg.endpoint:
            raise TransportError("no completion endpoint configured")
        payload = {
            "model": cfg.model,
            "messages": messages,
            "temperature": cfg.temperature,
            "max_tokens": cfg.max_tokens,
        }
        headers = {}
        if cfg.api_key:
            headers["Authorization"] = f"Bearer {cfg.api_key}"
        last = None
        for _ in range(cfg.retries + 1):
            try:
                response = self._client.post(
                    cfg.endpoint, json=payload, headers=headers, timeout=cfg.timeout)
                if response.status_code >= 500:
                    last = TransportError(f"server error {response.status_code}")
                    continue
                response.raise_for_status()
                data = response.json()
                return data["choices"][0]["message"]["content"]
            except (httpx.HTTPError, KeyError, IndexError, ValueError) as exc:
                last = TransportError(f"completion failed: {exc}")
        raise last


class ReplayTransport:
    """Answers from fixture files: {request_digest, messages, response_text}."""

    def __init__(self, directory):
        self.directory = Path(directory)
        self._index = {}
        for path in sorted(self.directory.glob("*.json")):
            data = json.loads(path.read_text("utf-8"))
            self._index[data["request_digest"]] = data["response_text"]

    def complete(self, messages, cfg: CompletionConfig) -> str:
        digest = message_digest(messages)
        try:
            return self._index[digest]
        except KeyError:
            raise ReplayMiss(f"no fixture for digest {digest[:12]}… in {self.directory}") from None


class RecordingTransport:
    """Wraps a live transport and writes replay fixtures for every exchange."""

    def __init__(self, inner, directory):
        self.inner = inner
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def complete(self, messages, cfg: CompletionConfig) -> str:
        text = self.inner.complete(messages, cfg)
        digest = message_digest(messages)
        fixture = {"request_digest": digest, "messages": messages, "response_text": text}
        path = self.directory / f"{digest[:16]}.json"
        path.write_text(json.dumps(fixture, ensure_ascii=False, indent=2) + "\n", "utf-8")
        return text


class ScriptedTransport:
    """Returns canned replies in order; for unit tests."""

    def __init__(self, replies):
        self.replies = list(replies)
        self.served = 0

    def complete(self, messages, cfg: CompletionConfig) -> str:
        if self.served >= len(self.replies):
            raise TransportError("script exhausted")
        text = self.replies[self.served]
        self.served += 1
        return text


# --- chat turns ----------------------------------------------------------------

@dataclass(frozen=True)
class TurnOutcome:
    reply: str
    ir: PlanIR | None
    error: str | None = None


def run_turn(session: ChatSession, user_text: str, assets: PromptAssets,
             cfg: CompletionConfig, transport) -> TurnOutcome:
    """One exchange. The session always advances; the last good plan survives
    a reply that fails to parse."""
    with session.lock:
        messages = build_messages(assets, session, user_text)
        reply = transport.complete(messages, cfg)
        session.turns.append(Turn("user", user_text))
        session.turns.append(Turn("assistant", reply))
        try:
            ir = parse_llm_output(reply)
        except Exception as exc:  # keep latest-good IR on any parse failure
            return TurnOutcome(reply, None, f"{type(exc).__name__}: {exc}")
        session.latest_ir = ir
        return TurnOutcome(reply, ir)
