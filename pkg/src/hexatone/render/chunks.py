"""Windowed playback chunks for the wire API.

A chunk carries the events whose onset (in seconds) falls inside
``[from_time, from_time + window)`` together with a content digest of
the source stream. Selection happens on exact fractional seconds, so
consecutive windows partition a stream with no duplicated or dropped
events. The wire form (docs/playback_chunk.schema.json) converts
onsets and durations to float seconds for the player.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..music.events import EventStream, NoteEvent
from ..serialize import digest


@dataclass(frozen=True)
class PlaybackChunk:
    from_time: Fraction                # seconds
    window: Fraction                   # seconds
    tempo: int
    events: tuple[NoteEvent, ...]      # onset_seconds in [from_time, from_time+window)
    stream_digest: str

    def to_jsonable(self) -> dict:
        scale = Fraction(60, self.tempo)
        return {
            "from_time": float(self.from_time),
            "window": float(self.window),
            "tempo": self.tempo,
            "stream_digest": self.stream_digest,
            "events": [
                {
                    "onset_seconds": float(e.onset * scale),
                    "duration_seconds": float(e.duration * scale),
                    "pitch": e.pitch,
                    "velocity": e.velocity,
                    "instrument": e.instrument.value,
                    "pan": e.pan,
                }
                for e in self.events
            ],
        }


def stream_digest(stream: EventStream) -> str:
    return digest(stream.to_jsonable())


def chunk_stream(
    stream: EventStream, from_time: Fraction, window_seconds: Fraction
) -> PlaybackChunk:
    """Slice a stream by onset time in seconds."""
    if from_time < 0:
        raise ValueError("from_time must be >= 0")
    if window_seconds <= 0:
        raise ValueError("window must be > 0")
    lo = Fraction(from_time)
    hi = lo + Fraction(window_seconds)
    selected = tuple(
        e
        for e in stream.events
        if lo <= stream.beats_to_seconds(e.onset) < hi
    )
    return PlaybackChunk(
        from_time=lo,
        window=Fraction(window_seconds),
        tempo=stream.tempo,
        events=selected,
        stream_digest=stream_digest(stream),
    )
