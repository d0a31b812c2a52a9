"""In-memory session store with single-writer locking and idle eviction.

Each session is single-writer: a second state-changing call arriving
while one is in flight gets a busy error instead of blocking. Reads
never take the write lock. Sessions idle past the TTL are evicted
lazily on next access; because the event log is append-only, an evicted
session can still be reconstructed with ``replay_session``.
"""

from __future__ import annotations

import secrets
import threading
import uuid
from contextlib import contextmanager
from datetime import datetime, timezone
from fractions import Fraction
from typing import Callable, Iterator, Optional

from ..casting import CoinToss, Line
from ..corpus import Corpus, default_corpus
from ..errors import SessionBusy, UnknownSession
from ..interpret import InterpretationProvider, MockProvider, MusicPlan
from ..music.events import LoopLayer
from ..music.params import GenParams
from ..render.chunks import PlaybackChunk
from . import sessions
from .log import EventLog
from .sessions import Session

DEFAULT_TTL_SECONDS = 3600


def _utc_now() -> datetime:
    return datetime.now(timezone.utc)


def _iso(moment: datetime) -> str:
    return moment.astimezone(timezone.utc).isoformat(timespec="microseconds")


class SessionManager:
    def __init__(
        self,
        corpus: Optional[Corpus] = None,
        provider: Optional[InterpretationProvider] = None,
        params: Optional[GenParams] = None,
        log: Optional[EventLog] = None,
        ttl_seconds: float = DEFAULT_TTL_SECONDS,
        clock: Callable[[], datetime] = _utc_now,
        id_factory: Callable[[], str] = lambda: uuid.uuid4().hex,
        seed_factory: Callable[[], int] = lambda: secrets.randbits(64),
    ):
        self.corpus = corpus or default_corpus()
        self.provider = provider or MockProvider()
        self.params = params or GenParams()
        self.log = log
        self.ttl_seconds = ttl_seconds
        self.clock = clock
        self.id_factory = id_factory
        self.seed_factory = seed_factory
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._seqs: dict[str, int] = {}
        self._registry_lock = threading.Lock()

    # -- bookkeeping ----------------------------------------------------

    def _append_log(self, session_id: str, op: str, at: str, data: dict) -> None:
        seq = self._seqs[session_id]
        self._seqs[session_id] = seq + 1
        if self.log is not None:
            self.log.append(session_id, seq, op, at, data)

    def _get_live(self, session_id: str) -> Session:
        session = self._sessions.get(session_id)
        if session is None:
            raise UnknownSession(f"no session {session_id}")
        age = (self.clock() - datetime.fromisoformat(session.updated_at)).total_seconds()
        if age > self.ttl_seconds:
            self._evict(session_id)
            raise UnknownSession(f"session {session_id} expired")
        return session

    def _evict(self, session_id: str) -> None:
        with self._registry_lock:
            self._sessions.pop(session_id, None)
            self._locks.pop(session_id, None)
            self._seqs.pop(session_id, None)

    @contextmanager
    def _writing(self, session_id: str) -> Iterator[tuple[Session, str]]:
        """Hold the session's write lock and supply (session, now)."""
        session = self._get_live(session_id)
        lock = self._locks.get(session_id)
        if lock is None:
            raise UnknownSession(f"no session {session_id}")
        if not lock.acquire(blocking=False):
            raise SessionBusy(f"session {session_id} has a call in flight")
        try:
            yield session, _iso(self.clock())
        finally:
            lock.release()

    # -- state-changing calls -------------------------------------------

    def create(self, seed: Optional[int] = None) -> Session:
        session_id = self.id_factory()
        seed = self.seed_factory() if seed is None else seed & ((1 << 64) - 1)
        now = _iso(self.clock())
        session = sessions.create_session(session_id, seed, now)
        with self._registry_lock:
            self._sessions[session_id] = session
            self._locks[session_id] = threading.Lock()
            self._seqs[session_id] = 0
        self._append_log(session_id, "created", now, {"seed": seed})
        return session

    def submit_inquiry(self, session_id: str, question: str, name: Optional[str] = None) -> Session:
        with self._writing(session_id) as (session, now):
            sessions.submit_inquiry(session, question, name, now)
            self._append_log(session_id, "inquiry", now, {"question": question, "name": name})
            return session

    def perform_toss(self, session_id: str) -> tuple[Session, CoinToss, Line, LoopLayer]:
        with self._writing(session_id) as (session, now):
            result = sessions.perform_toss(session, self.params, now)
            self._append_log(session_id, "toss", now, {})
            return result

    def run_interpretation(self, session_id: str) -> Session:
        with self._writing(session_id) as (session, now):
            sessions.run_interpretation(session, self.provider, self.corpus, now)
            self._append_log(
                session_id, "interpret", now, {"provider": self.provider.provider_id}
            )
            return session

    def reset(self, session_id: str) -> Session:
        with self._writing(session_id) as (session, now):
            sessions.reset(session, now)
            self._append_log(session_id, "reset", now, {})
            return session

    def complete(self, session_id: str) -> Session:
        with self._writing(session_id) as (session, now):
            sessions.complete(session, now)
            self._append_log(session_id, "complete", now, {})
            return session

    # -- read-only calls -------------------------------------------------

    def session_view(self, session_id: str) -> dict:
        return sessions.session_view(self._get_live(session_id))

    def get_plan(self, session_id: str) -> MusicPlan:
        return sessions.get_plan(self._get_live(session_id))

    def get_playback(
        self, session_id: str, from_time: Fraction, window: Fraction
    ) -> PlaybackChunk:
        session = self._get_live(session_id)
        return sessions.get_playback(session, from_time, window, self.params)
