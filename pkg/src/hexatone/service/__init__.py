"""Session service: state machine, event log, manager, and wire API."""

from .api import create_app
from .log import EventLog, read_events, replay_session
from .manager import SessionManager
from .sessions import Session, SessionState, session_snapshot, session_view

__all__ = [
    "create_app",
    "EventLog",
    "read_events",
    "replay_session",
    "SessionManager",
    "Session",
    "SessionState",
    "session_snapshot",
    "session_view",
]
