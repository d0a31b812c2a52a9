"""Append-only JSONL session log and replay.

Every state-changing call appends exactly one line::

    {"at": "...", "data": {...}, "op": "...", "seq": N, "session_id": "..."}

The log stores operations, not results: a replay pushes the same
operations through the same pure functions, and because every chance
draw is keyed by (seed, stream index, epoch) the reconstruction is
byte-identical to the live session, timestamps included.
"""

from __future__ import annotations

import json
import os
import threading
from pathlib import Path
from typing import Iterator, Optional

from ..corpus import Corpus, default_corpus
from ..errors import LogCorrupt, UnknownSession
from ..interpret import InterpretationProvider, MockProvider
from ..music.params import GenParams
from ..serialize import canonical_json
from . import sessions
from .sessions import Session

_KNOWN_OPS = {"created", "inquiry", "toss", "interpret", "reset", "complete"}


class EventLog:
    """Appends events to a JSONL file; thread-safe within one process."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self.path.parent.mkdir(parents=True, exist_ok=True)

    def append(self, session_id: str, seq: int, op: str, at: str, data: dict) -> None:
        line = canonical_json(
            {"session_id": session_id, "seq": seq, "op": op, "at": at, "data": data}
        )
        with self._lock:
            with open(self.path, "a", encoding="utf-8") as f:
                f.write(line + "\n")
                f.flush()
                os.fsync(f.fileno())


def read_events(path: str | Path, session_id: Optional[str] = None) -> Iterator[dict]:
    """Parse and yield log events, optionally for one session."""
    with open(path, encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                event = json.loads(line)
            except json.JSONDecodeError as exc:
                raise LogCorrupt(f"line {line_no}: not valid JSON: {exc}") from exc
            if not isinstance(event, dict) or "op" not in event or "session_id" not in event:
                raise LogCorrupt(f"line {line_no}: missing op or session_id")
            if event["op"] not in _KNOWN_OPS:
                raise LogCorrupt(f"line {line_no}: unknown op {event['op']!r}")
            if session_id is None or event["session_id"] == session_id:
                yield event


def replay_session(
    log_path: str | Path,
    session_id: str,
    corpus: Optional[Corpus] = None,
    provider: Optional[InterpretationProvider] = None,
    params: Optional[GenParams] = None,
) -> Session:
    """Rebuild a session's exact state from its logged operations."""
    corpus = corpus or default_corpus()
    provider = provider or MockProvider()
    params = params or GenParams()

    session: Optional[Session] = None
    expected_seq = 0
    for event in read_events(log_path, session_id):
        op, at, data = event["op"], event["at"], event.get("data", {})
        if event.get("seq") != expected_seq:
            raise LogCorrupt(
                f"session {session_id}: expected seq {expected_seq}, got {event.get('seq')}"
            )
        expected_seq += 1
        if op == "created":
            if session is not None:
                raise LogCorrupt(f"session {session_id}: duplicate created event")
            session = sessions.create_session(session_id, int(data["seed"]), at)
            continue
        if session is None:
            raise LogCorrupt(f"session {session_id}: event before creation")
        if op == "inquiry":
            sessions.submit_inquiry(session, data["question"], data.get("name"), at)
        elif op == "toss":
            sessions.perform_toss(session, params, at)
        elif op == "interpret":
            sessions.run_interpretation(session, provider, corpus, at)
        elif op == "reset":
            sessions.reset(session, at)
        elif op == "complete":
            sessions.complete(session, at)
    if session is None:
        raise UnknownSession(f"no events for session {session_id}")
    return session
