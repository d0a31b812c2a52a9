"""Instruments and the tunable generation parameters.

The six voices and their line assignment (bottom line = lowest
register):

    line 1  taiko drum     two fixed strike pitches, duration-only
    line 2  koto
    line 3  shamisen
    line 4  nylon guitar
    line 5  shakuhachi
    line 6  flute

Defaults encode the casting-music character: melodies confined to a
major-pentatonic set rooted on D, old-yang lines favoring ascending and
longer notes, old-yin lines descending and shorter, young lines in
between. Everything here can be overridden from a JSON params file.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path

from ..serialize import frac_str


class Instrument(enum.Enum):
    TAIKO_DRUM = "taiko_drum"
    KOTO = "koto"
    SHAMISEN = "shamisen"
    NYLON_GUITAR = "nylon_guitar"
    SHAKUHACHI = "shakuhachi"
    FLUTE = "flute"


# Playable MIDI range per instrument (inclusive).
REGISTERS: dict[Instrument, tuple[int, int]] = {
    Instrument.TAIKO_DRUM: (47, 50),
    Instrument.KOTO: (50, 76),
    Instrument.SHAMISEN: (55, 81),
    Instrument.NYLON_GUITAR: (57, 84),
    Instrument.SHAKUHACHI: (62, 88),
    Instrument.FLUTE: (72, 96),
}

LINE_INSTRUMENTS: dict[int, Instrument] = {
    1: Instrument.TAIKO_DRUM,
    2: Instrument.KOTO,
    3: Instrument.SHAMISEN,
    4: Instrument.NYLON_GUITAR,
    5: Instrument.SHAKUHACHI,
    6: Instrument.FLUTE,
}

# Tom strikes standing in for low/high taiko hits; both lie in the
# default pentatonic pitch-class set so the scale invariant holds for
# every layer.
TAIKO_STRIKES: tuple[int, int] = (47, 50)


def instrument_for_line(line_index: int) -> Instrument:
    return LINE_INSTRUMENTS[line_index]


def pan_for_line(line_index: int) -> float:
    """Spread the six voices across the stereo field."""
    return round(-0.75 + 0.3 * (line_index - 1), 10)


# Line types keyed by coin sum.
OLD_YIN, YOUNG_YANG, YOUNG_YIN, OLD_YANG = 6, 7, 8, 9


@dataclass(frozen=True)
class GenParams:
    tempo: int = 72
    scale_root: int = 2                      # pitch class D
    pentatonic_degrees: tuple[int, ...] = (0, 2, 4, 7, 9)
    loop_length: Fraction = Fraction(8)      # beats
    notes_per_loop: int = 8
    # P(next interval ascends) per line type
    direction_bias: dict[int, float] = field(
        default_factory=lambda: {
            OLD_YANG: 0.7,
            YOUNG_YANG: 0.6,
            YOUNG_YIN: 0.4,
            OLD_YIN: 0.3,
        }
    )
    # weighted duration menus in beats per line type
    duration_weights: dict[int, tuple[tuple[Fraction, float], ...]] = field(
        default_factory=lambda: {
            OLD_YANG: (
                (Fraction(1), 0.2),
                (Fraction(3, 2), 0.3),
                (Fraction(2), 0.5),
            ),
            YOUNG_YANG: (
                (Fraction(1, 2), 1.0),
                (Fraction(1), 1.0),
                (Fraction(3, 2), 1.0),
            ),
            YOUNG_YIN: (
                (Fraction(1, 2), 1.0),
                (Fraction(1), 1.0),
                (Fraction(3, 2), 1.0),
            ),
            OLD_YIN: (
                (Fraction(1, 4), 0.5),
                (Fraction(1, 2), 0.3),
                (Fraction(1), 0.2),
            ),
        }
    )
    # walk step size in scale degrees
    step_weights: tuple[tuple[int, float], ...] = ((1, 0.7), (2, 0.3))

    def __post_init__(self):
        if len(set(self.pentatonic_degrees)) != 5:
            raise ValueError("pentatonic_degrees must be 5 distinct pitch classes")
        for bias in self.direction_bias.values():
            if not 0.0 <= bias <= 1.0:
                raise ValueError("direction bias must be a probability")

    def pitch_classes(self) -> frozenset[int]:
        """Absolute pitch classes of the configured pentatonic set."""
        return frozenset((self.scale_root + d) % 12 for d in self.pentatonic_degrees)

    def to_jsonable(self) -> dict:
        return {
            "tempo": self.tempo,
            "scale_root": self.scale_root,
            "pentatonic_degrees": list(self.pentatonic_degrees),
            "loop_length": frac_str(self.loop_length),
            "notes_per_loop": self.notes_per_loop,
            "direction_bias": {str(k): v for k, v in self.direction_bias.items()},
            "duration_weights": {
                str(k): [[frac_str(d), w] for d, w in menu]
                for k, menu in self.duration_weights.items()
            },
            "step_weights": [[s, w] for s, w in self.step_weights],
        }


def params_from_json(path: str | Path) -> GenParams:
    """GenParams with overrides applied from a JSON file."""
    with open(path, encoding="utf-8") as f:
        raw = json.load(f)
    base = GenParams()
    updates: dict = {}
    if "tempo" in raw:
        updates["tempo"] = int(raw["tempo"])
    if "scale_root" in raw:
        updates["scale_root"] = int(raw["scale_root"]) % 12
    if "pentatonic_degrees" in raw:
        updates["pentatonic_degrees"] = tuple(int(d) % 12 for d in raw["pentatonic_degrees"])
    if "loop_length" in raw:
        updates["loop_length"] = Fraction(str(raw["loop_length"]))
    if "notes_per_loop" in raw:
        updates["notes_per_loop"] = int(raw["notes_per_loop"])
    if "direction_bias" in raw:
        updates["direction_bias"] = {int(k): float(v) for k, v in raw["direction_bias"].items()}
    if "duration_weights" in raw:
        updates["duration_weights"] = {
            int(k): tuple((Fraction(str(d)), float(w)) for d, w in menu)
            for k, menu in raw["duration_weights"].items()
        }
    if "step_weights" in raw:
        updates["step_weights"] = tuple((int(s), float(w)) for s, w in raw["step_weights"])
    return replace(base, **updates) if updates else base
