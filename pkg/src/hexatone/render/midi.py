"""Standard MIDI file writer (format 1), deterministic byte-for-byte.

One track per instrument present in the stream, preceded by a tempo
track. Beats convert to ticks exactly: at the default 480 PPQ every
quarter-of-a-beat duration lands on an integer tick with zero error.
Pan is emitted as controller 10, re-sent on a track whenever the next
event's pan differs from the last value sent.

The general-MIDI programs are nearest available approximations of the
six voices; the taiko has no melodic program and is routed to the
percussion channel on a single configurable key.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import PitchOutOfRange
from ..music.events import EventStream
from ..music.params import Instrument

PERCUSSION_CHANNEL = 9

DEFAULT_PROGRAMS: dict[Instrument, int] = {
    Instrument.KOTO: 107,
    Instrument.SHAMISEN: 106,
    Instrument.SHAKUHACHI: 77,
    Instrument.FLUTE: 73,
    Instrument.NYLON_GUITAR: 24,
}

DEFAULT_CHANNELS: dict[Instrument, int] = {
    Instrument.TAIKO_DRUM: PERCUSSION_CHANNEL,
    Instrument.KOTO: 0,
    Instrument.SHAMISEN: 1,
    Instrument.NYLON_GUITAR: 2,
    Instrument.SHAKUHACHI: 3,
    Instrument.FLUTE: 4,
}

# canonical track order for instruments present in a stream
TRACK_ORDER = (
    Instrument.TAIKO_DRUM,
    Instrument.KOTO,
    Instrument.SHAMISEN,
    Instrument.NYLON_GUITAR,
    Instrument.SHAKUHACHI,
    Instrument.FLUTE,
)


@dataclass(frozen=True)
class MidiRenderConfig:
    ppq: int = 480
    program_map: dict[Instrument, int] = field(default_factory=lambda: dict(DEFAULT_PROGRAMS))
    channel_map: dict[Instrument, int] = field(default_factory=lambda: dict(DEFAULT_CHANNELS))
    taiko_key: int = 116

    def __post_init__(self):
        channels = list(self.channel_map.values())
        if len(set(channels)) != len(channels):
            raise ValueError("instruments must use distinct channels")
        if self.channel_map.get(Instrument.TAIKO_DRUM, PERCUSSION_CHANNEL) != PERCUSSION_CHANNEL:
            raise ValueError("taiko must stay on the percussion channel")
        if any(not 0 <= c <= 15 for c in channels):
            raise ValueError("channels must lie in 0..15")


def var_len(value: int) -> bytes:
    """MIDI variable-length quantity encoding."""
    if value < 0:
        raise ValueError("delta time must be non-negative")
    out = [value & 0x7F]
    value >>= 7
    while value:
        out.append(0x80 | (value & 0x7F))
        value >>= 7
    return bytes(reversed(out))


def _beats_to_ticks(beats: Fraction, ppq: int) -> int:
    scaled = beats * ppq
    q, r = divmod(scaled.numerator, scaled.denominator)
    return q + (1 if 2 * r >= scaled.denominator else 0)


def _pan_cc_value(pan: float) -> int:
    return max(0, min(127, int(round((pan + 1.0) / 2.0 * 127))))


def _track_chunk(body: bytes) -> bytes:
    return b"MTrk" + struct.pack(">I", len(body)) + body


OrderKey = tuple[int, int, int]


def _delta_encode(items: list[tuple[int, OrderKey, bytes]]) -> bytes:
    """Sort (tick, order, message) items and emit delta-timed bytes."""
    items.sort(key=lambda item: (item[0], item[1]))
    out = bytearray()
    cursor = 0
    for tick, _, message in items:
        out += var_len(tick - cursor)
        out += message
        cursor = tick
    return bytes(out)


def write_midi(stream: EventStream, config: MidiRenderConfig | None = None) -> bytes:
    """Serialize a stream to standard MIDI file bytes (format 1)."""
    config = config or MidiRenderConfig()
    present = [i for i in TRACK_ORDER if any(e.instrument is i for e in stream.events)]

    # tempo track
    tempo_items: list[tuple[int, OrderKey, bytes]] = []
    microseconds = int(round(60_000_000 / stream.tempo))
    tempo_items.append((0, (0, 0, 0), b"\xff\x51\x03" + struct.pack(">I", microseconds)[1:]))
    total_ticks = _beats_to_ticks(stream.seconds_to_beats(stream.total_duration), config.ppq)
    tempo_body = _delta_encode(tempo_items) + var_len(total_ticks) + b"\xff\x2f\x00"
    tracks = [_track_chunk(tempo_body)]

    for instrument in present:
        channel = config.channel_map[instrument]
        items: list[tuple[int, OrderKey, bytes]] = []
        name = instrument.value.encode("ascii")
        items.append((0, (0, 0, 0), b"\xff\x03" + var_len(len(name)) + name))
        if channel != PERCUSSION_CHANNEL:
            program = config.program_map[instrument]
            items.append((0, (0, 0, 1), bytes([0xC0 | channel, program])))
        last_pan: int | None = None
        sequence = 0
        for event in stream.events:
            if event.instrument is not instrument:
                continue
            if channel == PERCUSSION_CHANNEL:
                pitch = config.taiko_key
            else:
                pitch = event.pitch
            if not 0 <= pitch <= 127:
                raise PitchOutOfRange(f"pitch {pitch} unplayable after mapping")
            on_tick = _beats_to_ticks(event.onset, config.ppq)
            off_tick = _beats_to_ticks(event.end(), config.ppq)
            if off_tick <= on_tick:
                off_tick = on_tick + 1  # ultrashort notes still get a hair of length
            pan_value = _pan_cc_value(event.pan)
            sequence += 1
            if pan_value != last_pan:
                items.append((on_tick, (2, sequence, 0), bytes([0xB0 | channel, 10, pan_value])))
                last_pan = pan_value
            items.append((on_tick, (3, sequence, 1), bytes([0x90 | channel, pitch, event.velocity])))
            items.append((off_tick, (1, sequence, 2), bytes([0x80 | channel, pitch, 0])))
        body = _delta_encode(items)
        body += var_len(0) + b"\xff\x2f\x00"
        tracks.append(_track_chunk(body))

    header = b"MThd" + struct.pack(">IHHH", 6, 1, len(tracks), config.ppq)
    return header + b"".join(tracks)
