"""Serialization of event streams: MIDI files and playback chunks."""

from .chunks import PlaybackChunk, chunk_stream, stream_digest
from .midi import MidiRenderConfig, write_midi

__all__ = ["PlaybackChunk", "chunk_stream", "stream_digest", "MidiRenderConfig", "write_midi"]
