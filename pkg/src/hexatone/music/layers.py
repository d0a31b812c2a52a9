"""Casting-stage loop layers: one probabilistic voice per cast line.

Each layer is a fixed-size loop whose pitches walk a lattice of
in-register pentatonic notes. The walk direction is biased by the line
type (old yang ascends most, old yin descends most) and note durations
are drawn from the line type's weighted menu, so the character of each
toss is audible before anything is said about it. The taiko layer is
the exception: an unpitched walk is meaningless there, so it alternates
two strike pitches and carries rhythm only.

Generation is a pure function of (line, line_index, params, seed,
stream_index); the session passes its seed and the line's stream index
so replays rebuild identical layers.
"""

from __future__ import annotations

from fractions import Fraction

from ..casting import Line
from ..errors import DuplicateLineIndex, EmptyLayers
from ..rng import substream
from .events import EventStream, LoopLayer, NoteEvent
from .params import (
    REGISTERS,
    TAIKO_STRIKES,
    GenParams,
    Instrument,
    instrument_for_line,
    pan_for_line,
)

# Base velocity window per coin sum: changing lines speak louder or
# softer than the stable middle.
_VELOCITY_BASE: dict[int, tuple[int, int]] = {
    9: (76, 96),   # old yang
    7: (62, 82),   # young yang
    8: (54, 74),   # young yin
    6: (44, 64),   # old yin
}


def pitch_lattice(instrument: Instrument, params: GenParams) -> list[int]:
    """In-register pitches whose pitch class is in the pentatonic set."""
    low, high = REGISTERS[instrument]
    classes = params.pitch_classes()
    return [p for p in range(low, high + 1) if p % 12 in classes]


def layer_for_line(
    line: Line,
    line_index: int,
    params: GenParams,
    seed: int,
    stream_index: int,
) -> LoopLayer:
    """Build the loop layer announcing one cast line."""
    rng = substream(seed, stream_index)
    instrument = instrument_for_line(line_index)
    pan = pan_for_line(line_index)
    bias = params.direction_bias[line.source_sum]
    menu = params.duration_weights[line.source_sum]
    menu_durations = [d for d, _ in menu]
    menu_weights = [w for _, w in menu]
    vel_lo, vel_hi = _VELOCITY_BASE[line.source_sum]
    grid = params.loop_length / params.notes_per_loop

    events = []
    if instrument is Instrument.TAIKO_DRUM:
        low, high = TAIKO_STRIKES
        for k in range(params.notes_per_loop):
            strike = high if rng.next_below(3) == 0 else low
            duration = menu_durations[rng.weighted_index(menu_weights)]
            velocity = vel_lo + rng.next_below(vel_hi - vel_lo + 1)
            events.append(
                NoteEvent(
                    onset=grid * k,
                    duration=duration,
                    pitch=strike,
                    velocity=velocity,
                    instrument=instrument,
                    pan=pan,
                )
            )
    else:
        lattice = pitch_lattice(instrument, params)
        # Start one step in from the edge the drift leaves behind.
        # Reflections at the near edge flip sampled steps toward the
        # drift and reflections at the far edge flip them against it;
        # this start window balances the two, so realized direction
        # statistics track the configured bias (verified by the
        # Monte-Carlo bias tests).
        third = max(1, len(lattice) // 3)
        if bias >= 0.5:
            position = 1 + rng.next_below(third)
        else:
            position = len(lattice) - 2 - rng.next_below(third)
        for k in range(params.notes_per_loop):
            duration = menu_durations[rng.weighted_index(menu_weights)]
            velocity = vel_lo + rng.next_below(vel_hi - vel_lo + 1)
            events.append(
                NoteEvent(
                    onset=grid * k,
                    duration=duration,
                    pitch=lattice[position],
                    velocity=velocity,
                    instrument=instrument,
                    pan=pan,
                )
            )
            step_sizes = [s for s, _ in params.step_weights]
            step = step_sizes[rng.weighted_index([w for _, w in params.step_weights])]
            ascending = rng.next_float() < bias
            position += step if ascending else -step
            # reflect at register boundaries
            if position < 0:
                position = -position
            elif position >= len(lattice):
                position = 2 * (len(lattice) - 1) - position

    return LoopLayer(
        line_index=line_index,
        line_sum=line.source_sum,
        instrument=instrument,
        loop=tuple(events),
        loop_length=params.loop_length,
        pan=pan,
    )


def accumulate_layers(existing: list[LoopLayer], new_layer: LoopLayer) -> list[LoopLayer]:
    """Append a layer, refusing a line index already present."""
    if any(layer.line_index == new_layer.line_index for layer in existing):
        raise DuplicateLineIndex(f"layer for line {new_layer.line_index} already present")
    return [*existing, new_layer]


def render_casting(layers: list[LoopLayer], cycles: int, params: GenParams) -> EventStream:
    """Unroll the loop layers into one merged, onset-sorted stream."""
    if not layers:
        raise EmptyLayers("no layers to render")
    if cycles < 1:
        raise ValueError("cycles must be >= 1")
    keyed = []
    end_beats = Fraction(0)
    for layer in layers:
        for cycle in range(cycles):
            offset = layer.loop_length * cycle
            for position, event in enumerate(layer.loop):
                shifted = NoteEvent(
                    onset=event.onset + offset,
                    duration=event.duration,
                    pitch=event.pitch,
                    velocity=event.velocity,
                    instrument=event.instrument,
                    pan=event.pan,
                )
                keyed.append(((shifted.onset, layer.line_index, position), shifted))
                end_beats = max(end_beats, shifted.end())
        end_beats = max(end_beats, layer.loop_length * cycles)
    keyed.sort(key=lambda pair: pair[0])
    events = tuple(event for _, event in keyed)
    total_seconds = end_beats * 60 / params.tempo
    return EventStream(events=events, tempo=params.tempo, total_duration=total_seconds)
