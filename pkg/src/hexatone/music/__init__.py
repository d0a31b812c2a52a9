"""Chance-driven music generation: loop layers, ambient rendering, charts."""

from .ambient import render_ambient
from .cage import ChanceCharts, cage_chart_select, cage_compose, default_charts, load_charts
from .events import EventStream, LoopLayer, NoteEvent
from .layers import accumulate_layers, layer_for_line, pitch_lattice, render_casting
from .params import (
    GenParams,
    Instrument,
    REGISTERS,
    instrument_for_line,
    pan_for_line,
    params_from_json,
)

__all__ = [
    "render_ambient",
    "ChanceCharts",
    "cage_chart_select",
    "cage_compose",
    "default_charts",
    "load_charts",
    "EventStream",
    "LoopLayer",
    "NoteEvent",
    "accumulate_layers",
    "layer_for_line",
    "pitch_lattice",
    "render_casting",
    "GenParams",
    "Instrument",
    "REGISTERS",
    "instrument_for_line",
    "pan_for_line",
    "params_from_json",
]
