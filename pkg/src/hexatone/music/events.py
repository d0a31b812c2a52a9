"""Timed note events, loop layers, and rendered event streams.

Onsets and durations are beats as exact fractions, so tick conversion
and window slicing never accumulate float error. Seconds enter only
through a stream's tempo: ``seconds = beats * 60 / tempo``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..serialize import frac_str
from .params import Instrument


@dataclass(frozen=True)
class NoteEvent:
    onset: Fraction        # beats from stream start, >= 0
    duration: Fraction     # beats, > 0
    pitch: int             # MIDI note number 0..127
    velocity: int          # 1..127
    instrument: Instrument
    pan: float             # -1 (left) .. +1 (right)

    def __post_init__(self):
        if self.onset < 0:
            raise ValueError("onset must be >= 0")
        if self.duration <= 0:
            raise ValueError("duration must be > 0")
        if not 0 <= self.pitch <= 127:
            raise ValueError(f"pitch {self.pitch} outside 0..127")
        if not 1 <= self.velocity <= 127:
            raise ValueError(f"velocity {self.velocity} outside 1..127")
        if not -1.0 <= self.pan <= 1.0:
            raise ValueError(f"pan {self.pan} outside [-1, 1]")

    def end(self) -> Fraction:
        return self.onset + self.duration

    def to_jsonable(self) -> dict:
        return {
            "onset": frac_str(self.onset),
            "duration": frac_str(self.duration),
            "pitch": self.pitch,
            "velocity": self.velocity,
            "instrument": self.instrument.value,
            "pan": self.pan,
        }


@dataclass(frozen=True)
class LoopLayer:
    """One looping voice tied to a cast line."""

    line_index: int             # 1..6, bottom line first
    line_sum: int               # coin sum 6..9 that produced the line
    instrument: Instrument
    loop: tuple[NoteEvent, ...]  # onsets all < loop_length
    loop_length: Fraction        # beats
    pan: float

    def __post_init__(self):
        if not 1 <= self.line_index <= 6:
            raise ValueError("line_index outside 1..6")
        for event in self.loop:
            if event.onset >= self.loop_length:
                raise ValueError("loop event onset beyond loop length")

    def to_jsonable(self) -> dict:
        return {
            "line_index": self.line_index,
            "line_sum": self.line_sum,
            "instrument": self.instrument.value,
            "loop_length": frac_str(self.loop_length),
            "pan": self.pan,
            "loop": [e.to_jsonable() for e in self.loop],
        }


@dataclass(frozen=True)
class EventStream:
    """Onset-sorted events with a tempo and a total length in seconds."""

    events: tuple[NoteEvent, ...]
    tempo: int                   # BPM
    total_duration: Fraction     # seconds

    def __post_init__(self):
        if self.tempo <= 0:
            raise ValueError("tempo must be positive")
        if self.total_duration < 0:
            raise ValueError("total_duration must be >= 0")
        last = Fraction(-1)
        for event in self.events:
            if event.onset < last:
                raise ValueError("events must be sorted by onset")
            last = event.onset
            if self.beats_to_seconds(event.end()) > self.total_duration:
                raise ValueError("event ends after total_duration")

    def beats_to_seconds(self, beats: Fraction) -> Fraction:
        return beats * 60 / self.tempo

    def seconds_to_beats(self, seconds: Fraction) -> Fraction:
        return seconds * self.tempo / 60

    def to_jsonable(self) -> dict:
        return {
            "tempo": self.tempo,
            "total_duration": frac_str(self.total_duration),
            "events": [e.to_jsonable() for e in self.events],
        }
