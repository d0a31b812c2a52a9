"""Plan-conditioned ambient rendering.

This is the offline, deterministic realization of a music plan: where a
hosted text-to-music service would stream audio, this renderer turns
the same plan document into a 30-60 second note stream. The mapping
from plan to sound is a fixed, documented lookup:

    energy   (first keyword)  tempo comes from plan.config.bpm; the
                              keyword also scales event density
                              (still 0.4, flowing 0.7, surging 1.0)
    dynamics (first keyword)  velocity window: soft 28-56,
                              swelling 40-92, bold 64-108, shaped by an
                              arch envelope over the piece
    spatial  (first keyword)  stereo spread for per-event panning
    mood     (first keyword)  pentatonic rotation: selects which scale
                              degree acts as the tonal center the line
                              keeps returning to

Rendering is a pure function of (plan, seed): the same plan document
and seed always produce the same stream.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

from ..errors import InvalidPlan
from ..interpret.plan import MusicPlan
from ..rng import STREAM_AMBIENT, substream
from .events import EventStream, NoteEvent
from .params import GenParams, Instrument

ENERGY_DENSITY = {"still": 0.4, "flowing": 0.7, "surging": 1.0}
FALLBACK_ENERGY_DENSITY = 0.7

DYNAMICS_VELOCITY = {"soft": (28, 56), "swelling": (40, 92), "bold": (64, 108)}
FALLBACK_VELOCITY = (40, 80)

SPATIAL_SPREAD = {
    "vast": 0.9, "open": 0.85, "skyward": 0.8, "wide": 0.8, "cavernous": 0.8,
    "rolling": 0.75, "broad": 0.75, "echoing": 0.7, "monolithic": 0.7,
    "distant": 0.7, "enveloping": 0.6, "deepening": 0.6, "pervasive": 0.6,
    "weaving": 0.55, "airy": 0.55, "embracing": 0.5, "high": 0.5,
    "shimmering": 0.5, "haloed": 0.45, "reflective": 0.45, "low": 0.45,
    "focused": 0.3, "close": 0.25, "near": 0.25, "intimate": 0.2,
}
FALLBACK_SPREAD = 0.5

AMBIENT_REGISTER = (50, 88)
AMBIENT_INSTRUMENTS = (
    Instrument.KOTO,
    Instrument.NYLON_GUITAR,
    Instrument.SHAKUHACHI,
    Instrument.FLUTE,
)

# beats, quarter-beat grid
_GRID = 4
_MIN_DURATION = Fraction(1, 4)
_MAX_DURATION = Fraction(4)


def _mood_rotation(mood: str) -> int:
    """Stable 0..4 rotation index from a mood keyword's bytes."""
    return sum(mood.encode("utf-8")) % 5


def render_ambient(
    plan: MusicPlan, seed: int, params: Optional[GenParams] = None
) -> EventStream:
    """Render a plan into an ambient event stream."""
    if not isinstance(plan, MusicPlan):
        raise InvalidPlan("render_ambient needs a MusicPlan")
    params = params or GenParams()
    rng = substream(seed, STREAM_AMBIENT)

    bpm = plan.config.bpm
    duration_seconds = Fraction(plan.config.duration_seconds)
    total_beats = duration_seconds * bpm / 60

    energy = plan.keywords["energy"][0]
    dynamics = plan.keywords["dynamics"][0]
    spatial = plan.keywords["spatial"][0]
    mood = plan.keywords["mood"][0]

    energy_mult = ENERGY_DENSITY.get(energy, FALLBACK_ENERGY_DENSITY)
    vel_lo, vel_hi = DYNAMICS_VELOCITY.get(dynamics, FALLBACK_VELOCITY)
    spread = SPATIAL_SPREAD.get(spatial, FALLBACK_SPREAD)

    n_events = max(3, int(total_beats * energy_mult * (0.35 + 0.65 * plan.config.density)))

    # tonal center from the mood rotation of the pentatonic set
    degrees = sorted(params.pentatonic_degrees)
    center_class = (params.scale_root + degrees[_mood_rotation(mood)]) % 12
    classes = params.pitch_classes()
    low, high = AMBIENT_REGISTER
    lattice = [p for p in range(low, high + 1) if p % 12 in classes]
    centers = [p for p in lattice if p % 12 == center_class]
    center_index = lattice.index(centers[len(centers) // 2])

    # onsets on the quarter-beat grid, leaving room for a minimal note
    onset_slots = int((total_beats - _MIN_DURATION) * _GRID)
    onsets = sorted(
        Fraction(rng.next_below(onset_slots + 1), _GRID) for _ in range(n_events)
    )

    position = center_index
    events = []
    for onset in onsets:
        # drift with a pull back toward the tonal center
        if position > center_index:
            p_up = 0.35
        elif position < center_index:
            p_up = 0.65
        else:
            p_up = 0.5
        step = 1 + rng.next_below(2)
        position += step if rng.next_float() < p_up else -step
        position = max(0, min(len(lattice) - 1, position))

        duration = _MIN_DURATION + Fraction(rng.next_below(int(_MAX_DURATION * _GRID)), _GRID)
        duration = min(duration, total_beats - onset)

        arch = math.sin(math.pi * float(onset / total_beats)) if total_beats else 0.0
        jitter = rng.next_below(11) - 5
        velocity = vel_lo + int((vel_hi - vel_lo) * (0.35 + 0.65 * arch)) + jitter
        velocity = max(1, min(127, velocity))

        pan = round(spread * (rng.next_float() * 2 - 1), 6)
        events.append(
            NoteEvent(
                onset=onset,
                duration=duration,
                pitch=lattice[position],
                velocity=velocity,
                instrument=AMBIENT_INSTRUMENTS[rng.next_below(len(AMBIENT_INSTRUMENTS))],
                pan=pan,
            )
        )

    return EventStream(events=tuple(events), tempo=bpm, total_duration=duration_seconds)
