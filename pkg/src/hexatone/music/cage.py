"""Chart mode: the historical chance operation, kept for comparison.

Instead of probability distributions, this mode uses three 64-entry
charts (sound, duration, dynamic). Each event casts a full hexagram by
six three-coin tosses and the hexagram's number selects one entry from
each chart. A null sound entry is a silence: time advances by the
selected duration but no note is emitted.

Chart file schema: JSON object with ``sounds`` (64 pitch-class ints or
null), ``durations`` (64 beat values, numbers or fraction strings), and
``dynamics`` (64 velocities 1..127). The bundled demo set is
illustrative; any chart file matching the schema can be swapped in.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional

from ..casting import Hexagram, build_hexagram, line_from_toss, toss_coins
from ..errors import CorpusSchemaError
from ..rng import STREAM_CAGE, substream
from .events import EventStream, NoteEvent
from .params import Instrument

CAGE_TEMPO = 72
CAGE_BASE_PITCH = 60  # pitch classes are realized in the octave above middle C
CAGE_INSTRUMENT = Instrument.KOTO


@dataclass(frozen=True)
class ChanceCharts:
    sounds: tuple[Optional[int], ...]    # pitch class 0..11 or None for silence
    durations: tuple[Fraction, ...]      # beats
    dynamics: tuple[int, ...]            # velocity 1..127

    def __post_init__(self):
        for name, chart in [
            ("sounds", self.sounds),
            ("durations", self.durations),
            ("dynamics", self.dynamics),
        ]:
            if len(chart) != 64:
                raise CorpusSchemaError(f"chart '{name}' must have 64 entries")
        for s in self.sounds:
            if s is not None and not 0 <= s <= 11:
                raise CorpusSchemaError("sound entries must be pitch classes or null")
        for d in self.durations:
            if d <= 0:
                raise CorpusSchemaError("durations must be positive beats")
        for v in self.dynamics:
            if not 1 <= v <= 127:
                raise CorpusSchemaError("dynamics must be velocities 1..127")


def charts_from_data(raw: object) -> ChanceCharts:
    if not isinstance(raw, dict):
        raise CorpusSchemaError("chart file must be a JSON object")
    try:
        sounds = tuple(None if s is None else int(s) for s in raw["sounds"])
        durations = tuple(Fraction(str(d)) for d in raw["durations"])
        dynamics = tuple(int(v) for v in raw["dynamics"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CorpusSchemaError(f"chart file malformed: {exc}") from exc
    return ChanceCharts(sounds=sounds, durations=durations, dynamics=dynamics)


def load_charts(path: str | Path) -> ChanceCharts:
    with open(path, encoding="utf-8") as f:
        return charts_from_data(json.load(f))


def default_charts() -> ChanceCharts:
    text = resources.files("hexatone.data").joinpath("cage_charts.json").read_text("utf-8")
    return charts_from_data(json.loads(text))


def cage_chart_select(
    hexagram: Hexagram, charts: ChanceCharts
) -> tuple[Optional[int], Fraction, int]:
    """Entries selected by the hexagram's number (1-based index)."""
    i = hexagram.king_wen - 1
    return charts.sounds[i], charts.durations[i], charts.dynamics[i]


def cage_compose(n_events: int, charts: ChanceCharts, seed: int) -> EventStream:
    """Compose by repeated hexagram casts against the charts."""
    if n_events < 1:
        raise ValueError("n_events must be >= 1")
    rng = substream(seed, STREAM_CAGE)
    cursor = Fraction(0)
    events = []
    for _ in range(n_events):
        lines = [line_from_toss(toss_coins(rng)) for _ in range(6)]
        hexagram = build_hexagram(lines)
        sound, duration, dynamic = cage_chart_select(hexagram, charts)
        if sound is not None:
            events.append(
                NoteEvent(
                    onset=cursor,
                    duration=duration,
                    pitch=CAGE_BASE_PITCH + sound,
                    velocity=dynamic,
                    instrument=CAGE_INSTRUMENT,
                    pan=0.0,
                )
            )
        cursor += duration  # silences still advance time
    total_seconds = cursor * 60 / CAGE_TEMPO
    return EventStream(events=tuple(events), tempo=CAGE_TEMPO, total_duration=total_seconds)
