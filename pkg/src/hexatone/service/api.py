"""HTTP+JSON wire API over the session manager.

    POST /sessions                      {seed?}            -> {id, seed, state}
    POST /sessions/{id}/inquiry         {question, name?}  -> session view
    POST /sessions/{id}/toss                               -> toss result
    POST /sessions/{id}/interpret                          -> session view
    GET  /sessions/{id}                                    -> session view
    GET  /sessions/{id}/plan                               -> canonical plan JSON
    GET  /sessions/{id}/playback?from=&window=             -> playback chunk
    POST /sessions/{id}/reset                              -> session view

Views are redacted before the interpreting state (coin faces and layer
summaries only). Errors come back as ``{code, message}`` with the
status class matching the failure. The plan endpoint returns the
plan's canonical bytes so clients can verify byte-identity against
what they display.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from fastapi import FastAPI, Query, Request, Response
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from ..errors import (
    EmptyQuestion,
    HexatoneError,
    InvalidState,
    MalformedProviderOutput,
    PlanNotReady,
    ProviderUnavailable,
    SessionBusy,
    UnknownSession,
)
from .manager import SessionManager

_STATUS_BY_ERROR: list[tuple[type, int]] = [
    (EmptyQuestion, 400),
    (UnknownSession, 404),
    (InvalidState, 409),
    (PlanNotReady, 409),
    (SessionBusy, 409),
    (ProviderUnavailable, 503),
    (MalformedProviderOutput, 502),
]


def _status_for(exc: HexatoneError) -> int:
    for error_type, status in _STATUS_BY_ERROR:
        if isinstance(exc, error_type):
            return status
    return 400


class CreateSessionBody(BaseModel):
    seed: Optional[int] = None


class InquiryBody(BaseModel):
    question: str
    name: Optional[str] = None


def create_app(manager: SessionManager) -> FastAPI:
    app = FastAPI(title="hexatone session service")

    @app.exception_handler(HexatoneError)
    async def handle_engine_error(request: Request, exc: HexatoneError):
        return JSONResponse(
            status_code=_status_for(exc),
            content={"code": exc.code, "message": str(exc)},
        )

    @app.post("/sessions", status_code=201)
    def create_session(body: Optional[CreateSessionBody] = None):
        seed = body.seed if body else None
        session = manager.create(seed=seed)
        return {"id": session.id, "seed": session.seed, "state": session.state.value}

    @app.post("/sessions/{session_id}/inquiry")
    def submit_inquiry(session_id: str, body: InquiryBody):
        manager.submit_inquiry(session_id, body.question, body.name)
        return manager.session_view(session_id)

    @app.post("/sessions/{session_id}/toss")
    def perform_toss(session_id: str):
        session, toss, _line, layer = manager.perform_toss(session_id)
        return {
            "toss_index": session.tosses_done,
            "coins": [c.value for c in toss.coins],
            "layer_summary": {
                "line_index": layer.line_index,
                "instrument": layer.instrument.value,
                "pan": layer.pan,
                "note_count": len(layer.loop),
            },
            "state": session.state.value,
        }

    @app.post("/sessions/{session_id}/interpret")
    def run_interpretation(session_id: str):
        manager.run_interpretation(session_id)
        return manager.session_view(session_id)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        return manager.session_view(session_id)

    @app.get("/sessions/{session_id}/plan")
    def get_plan(session_id: str):
        plan = manager.get_plan(session_id)
        return Response(content=plan.to_canonical_json(), media_type="application/json")

    @app.get("/sessions/{session_id}/playback")
    def get_playback(
        session_id: str,
        from_param: str = Query(default="0", alias="from"),
        window: str = Query(default="8"),
    ):
        try:
            from_time = Fraction(from_param)
            window_f = Fraction(window)
        except (ValueError, ZeroDivisionError):
            return JSONResponse(
                status_code=400,
                content={"code": "bad_request", "message": "from/window must be numeric"},
            )
        chunk = manager.get_playback(session_id, from_time, window_f)
        return chunk.to_jsonable()

    @app.post("/sessions/{session_id}/reset")
    def reset(session_id: str):
        manager.reset(session_id)
        return manager.session_view(session_id)

    return app
