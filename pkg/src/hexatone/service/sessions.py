"""Session state machine: intake, casting, interpretation, playback.

Transitions move strictly forward::

    intake -> casting -> (6th toss) -> interpreting -> playback -> complete

and ``reset`` returns to intake from anywhere, bumping the session's
stream epoch so a re-cast draws fresh randomness while the original
remains replayable. Every operation validates state before touching
anything, so an illegal call never mutates the session.

Hexagram identity and corpus texts stay structurally hidden while
casting: the redacted view (everything before ``interpreting``) carries
only coin faces and layer summaries.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Optional

from ..casting import CastingRecord, CoinToss, Line, hexagram_jsonable, toss_coins
from ..corpus import Corpus
from ..errors import InvalidState, PlanNotReady
from ..interpret import (
    Inquiry,
    InterpretationProvider,
    MusicPlan,
    Reading,
    assemble_prompt,
    build_music_plan,
    interpret,
)
from ..music.events import EventStream, LoopLayer
from ..music.layers import accumulate_layers, layer_for_line, render_casting
from ..music.ambient import render_ambient
from ..music.params import GenParams
from ..render.chunks import PlaybackChunk, chunk_stream
from ..rng import STREAM_CASTING, SplitMix64, stream_index, substream
from ..serialize import frac_str


class SessionState(str, enum.Enum):
    INTAKE = "intake"
    CASTING = "casting"
    INTERPRETING = "interpreting"
    PLAYBACK = "playback"
    COMPLETE = "complete"


@dataclass
class Session:
    id: str
    seed: int
    created_at: str
    updated_at: str
    epoch: int = 0
    state: SessionState = SessionState.INTAKE
    inquiry: Optional[Inquiry] = None
    record: CastingRecord = None  # type: ignore[assignment]
    layers: list[LoopLayer] = field(default_factory=list)
    reading: Optional[Reading] = None
    plan: Optional[MusicPlan] = None
    casting_rng: Optional[SplitMix64] = None

    def __post_init__(self):
        if self.record is None:
            self.record = CastingRecord(seed=self.seed)

    @property
    def tosses_done(self) -> int:
        return len(self.record.tosses)


def create_session(session_id: str, seed: int, now: str) -> Session:
    return Session(id=session_id, seed=seed, created_at=now, updated_at=now)


def submit_inquiry(session: Session, question: str, name: Optional[str], now: str) -> Session:
    if session.state is not SessionState.INTAKE:
        raise InvalidState(f"cannot submit an inquiry while {session.state.value}")
    session.inquiry = Inquiry(question=question, name=name)  # validates emptiness
    session.casting_rng = substream(
        session.seed, stream_index(STREAM_CASTING, session.epoch)
    )
    session.state = SessionState.CASTING
    session.updated_at = now
    return session


def perform_toss(
    session: Session, params: GenParams, now: str
) -> tuple[Session, CoinToss, Line, LoopLayer]:
    if session.state is not SessionState.CASTING:
        raise InvalidState(f"cannot toss while {session.state.value}")
    assert session.casting_rng is not None
    toss = toss_coins(session.casting_rng)
    session.record = session.record.with_toss(toss)
    line_index = session.tosses_done
    line = session.record.lines[-1]
    layer = layer_for_line(
        line,
        line_index,
        params,
        session.seed,
        stream_index(line_index, session.epoch),
    )
    session.layers = accumulate_layers(session.layers, layer)
    if session.record.complete:
        session.state = SessionState.INTERPRETING
    session.updated_at = now
    return session, toss, line, layer


def run_interpretation(
    session: Session, provider: InterpretationProvider, corpus: Corpus, now: str
) -> Session:
    if session.state is not SessionState.INTERPRETING:
        raise InvalidState(f"cannot interpret while {session.state.value}")
    assert session.inquiry is not None
    doc = assemble_prompt(session.inquiry, session.record, corpus)
    # a provider failure propagates here, before any mutation
    reading = interpret(doc, provider)
    plan = build_music_plan(
        reading, session.record, provider.provider_id, doc.template_version
    )
    session.reading = reading
    session.plan = plan
    session.state = SessionState.PLAYBACK
    session.updated_at = now
    return session


def get_plan(session: Session) -> MusicPlan:
    if session.plan is None:
        raise PlanNotReady("no plan yet; interpretation has not completed")
    return session.plan


def get_playback(
    session: Session, from_time: Fraction, window: Fraction, params: GenParams
) -> PlaybackChunk:
    """Chunks of whatever should be sounding in the current state.

    Casting and interpreting serve the accumulated loop layers (the
    loops keep going while the reading is computed); playback and
    complete serve the plan-conditioned ambient stream.
    """
    if session.state is SessionState.INTAKE:
        raise InvalidState("nothing is sounding during intake")
    if session.state in (SessionState.CASTING, SessionState.INTERPRETING):
        if not session.layers:
            stream = EventStream(events=(), tempo=params.tempo, total_duration=Fraction(0))
        else:
            loop_seconds = params.loop_length * 60 / params.tempo
            cycles = max(1, ceil((from_time + window) / loop_seconds))
            stream = render_casting(session.layers, cycles, params)
        return chunk_stream(stream, from_time, window)
    plan = get_plan(session)
    stream = render_ambient(plan, session.seed, params)
    return chunk_stream(stream, from_time, window)


def reset(session: Session, now: str) -> Session:
    """Back to a silent intake state; the session id and seed survive."""
    session.epoch += 1
    session.state = SessionState.INTAKE
    session.inquiry = None
    session.record = CastingRecord(seed=session.seed)
    session.layers = []
    session.reading = None
    session.plan = None
    session.casting_rng = None
    session.updated_at = now
    return session


def complete(session: Session, now: str) -> Session:
    if session.state is not SessionState.PLAYBACK:
        raise InvalidState(f"cannot complete while {session.state.value}")
    session.state = SessionState.COMPLETE
    session.updated_at = now
    return session


def layer_summary(layer: LoopLayer) -> dict:
    return {
        "line_index": layer.line_index,
        "instrument": layer.instrument.value,
        "pan": layer.pan,
        "loop_length": frac_str(layer.loop_length),
        "note_count": len(layer.loop),
    }


def session_view(session: Session) -> dict:
    """Wire view of a session, redacted while semantics are withheld."""
    view: dict = {
        "id": session.id,
        "seed": session.seed,
        "epoch": session.epoch,
        "state": session.state.value,
        "created_at": session.created_at,
        "updated_at": session.updated_at,
        "tosses_done": session.tosses_done,
        "inquiry": (
            {"question": session.inquiry.question, "name": session.inquiry.name}
            if session.inquiry
            else None
        ),
        "layers": [layer_summary(layer) for layer in session.layers],
    }
    if session.state in (SessionState.INTAKE, SessionState.CASTING):
        # pre-interpretation: coin faces only, no line or hexagram identity
        view["tosses"] = [[c.value for c in t.coins] for t in session.record.tosses]
        return view
    view["record"] = session.record.to_jsonable()
    if session.record.complete:
        view["hexagrams"] = {
            "ben": hexagram_jsonable(session.record.ben_gua),
            "dong_yao": list(session.record.dong_yao),
            "zhi": hexagram_jsonable(session.record.zhi_gua),
        }
    view["reading"] = session.reading.to_jsonable() if session.reading else None
    view["plan"] = session.plan.to_jsonable() if session.plan else None
    return view


def session_snapshot(session: Session) -> dict:
    """Full unredacted state, used for replay equivalence checks."""
    return {
        "id": session.id,
        "seed": session.seed,
        "epoch": session.epoch,
        "state": session.state.value,
        "created_at": session.created_at,
        "updated_at": session.updated_at,
        "inquiry": (
            {"question": session.inquiry.question, "name": session.inquiry.name}
            if session.inquiry
            else None
        ),
        "record": session.record.to_jsonable(),
        "layers": [layer.to_jsonable() for layer in session.layers],
        "reading": session.reading.to_jsonable() if session.reading else None,
        "plan": session.plan.to_jsonable() if session.plan else None,
    }
