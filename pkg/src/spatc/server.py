"""HTTP session API over the pipeline, plus static hosting for the web UI.

The API is the only interface the browser client uses: sessions, chat turns,
exports, and the intersection config (movement list and palette).
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.responses import Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .config import IntersectionConfig, load_config
from .emit import export
from .errors import AssemblyError, PlanError, UnsupportedLanguage
from .gateway import (
    ChatSession,
    CompletionConfig,
    HttpTransport,
    PromptAssets,
    load_prompts,
    run_turn,
)
from .pipeline import assemble

EXPORT_MEDIA = {
    "csv": "text/csv; charset=utf-8",
    "json": "application/json",
    "svg": "image/svg+xml",
    "text": "text/plain; charset=utf-8",
}


class CreateSession(BaseModel):
    language: str = "en"


class PostMessage(BaseModel):
    text: str


def _session_payload(session: ChatSession) -> dict:
    result = session.latest_result
    payload = {
        "id": session.id,
        "language": session.language,
        "transcript": [{"role": t.role, "text": t.text} for t in session.turns],
        "cycle": None,
        "table": None,
        "report": None,
        "diagnostics": [],
    }
    if result is not None:
        body = result.to_dict()
        payload.update(
            cycle=body["cycle"],
            table=body["table"],
            report=body["report"],
            diagnostics=body["diagnostics"],
        )
    return payload


def create_app(
    cfg: IntersectionConfig | None = None,
    prompts: PromptAssets | None = None,
    transport=None,
    completion: CompletionConfig | None = None,
    frontend=None,
) -> FastAPI:
    cfg = cfg or load_config()
    prompts = prompts or load_prompts()
    transport = transport or HttpTransport()
    completion = completion or CompletionConfig.from_env()

    app = FastAPI(title="signal plan workbench")
    sessions: dict[str, ChatSession] = {}

    def get_session(session_id: str) -> ChatSession:
        session = sessions.get(session_id)
        if session is None:
            raise HTTPException(404, f"no session {session_id}")
        return session

    @app.post("/api/sessions")
    def create_session(body: CreateSession) -> dict:
        try:
            prompts.get(body.language)
        except UnsupportedLanguage as exc:
            raise HTTPException(400, str(exc)) from exc
        session = ChatSession(language=body.language)
        sessions[session.id] = session
        return {"id": session.id, "language": session.language}

    @app.get("/api/sessions/{session_id}")
    def session_state(session_id: str) -> dict:
        return _session_payload(get_session(session_id))

    @app.post("/api/sessions/{session_id}/messages")
    def post_message(session_id: str, body: PostMessage) -> dict:
        session = get_session(session_id)
        try:
            outcome = run_turn(session, body.text, prompts, completion, transport)
        except PlanError as exc:
            raise HTTPException(502, f"completion failed: {exc}") from exc

        response = {"reply": outcome.reply, "parsed": outcome.ir is not None,
                    "error": outcome.error}
        if outcome.ir is not None:
            try:
                session.latest_result = assemble(outcome.ir, cfg)
            except AssemblyError as exc:
                response["error"] = f"{exc.stage}: {exc.cause}"
        response.update({k: v for k, v in _session_payload(session).items()
                         if k not in ("id", "language", "transcript")})
        return response

    @app.get("/api/sessions/{session_id}/export")
    def export_table(session_id: str, format: str = "csv") -> Response:
        session = get_session(session_id)
        if format not in EXPORT_MEDIA:
            raise HTTPException(400, f"unsupported format {format!r}")
        result = session.latest_result
        if result is None:
            raise HTTPException(404, "session has no assembled table yet")
        body = export(result.table, format, palette=cfg.palette)
        return Response(content=body, media_type=EXPORT_MEDIA[format])

    @app.get("/api/config")
    def intersection() -> dict:
        return cfg.to_dict()

    if frontend:
        root = Path(frontend)
        if root.is_dir():
            app.mount("/", StaticFiles(directory=root, html=True), name="frontend")

    return app
