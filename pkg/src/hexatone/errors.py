"""Exception types shared across the engine.

Each error carries a stable ``code`` used verbatim in CLI output and in
the HTTP error payload ``{code, message}``.
"""

from __future__ import annotations


class HexatoneError(Exception):
    """Base class for all engine errors."""

    code = "error"


class WrongLineCount(HexatoneError):
    code = "wrong_line_count"


class IndexOutOfRange(HexatoneError):
    code = "index_out_of_range"


class CorpusSchemaError(HexatoneError):
    code = "corpus_schema_error"


class CorpusMissingEntry(HexatoneError):
    code = "corpus_missing_entry"


class DuplicateLineIndex(HexatoneError):
    code = "duplicate_line_index"


class EmptyLayers(HexatoneError):
    code = "empty_layers"


class InvalidPlan(HexatoneError):
    code = "invalid_plan"


class PitchOutOfRange(HexatoneError):
    code = "pitch_out_of_range"


class EmptyQuestion(HexatoneError):
    code = "empty_question"


class IncompleteCasting(HexatoneError):
    code = "incomplete_casting"


class ProviderUnavailable(HexatoneError):
    code = "provider_unavailable"


class MalformedProviderOutput(HexatoneError):
    """Provider returned something that does not validate as a reading.

    The raw payload is attached for diagnostics; no partial reading is
    ever constructed from it.
    """

    code = "malformed_provider_output"

    def __init__(self, message: str, raw: object = None):
        super().__init__(message)
        self.raw = raw


class InvalidState(HexatoneError):
    code = "invalid_state"


class PlanNotReady(HexatoneError):
    code = "plan_not_ready"


class UnknownSession(HexatoneError):
    code = "unknown_session"


class SessionBusy(HexatoneError):
    code = "session_busy"


class LogCorrupt(HexatoneError):
    code = "log_corrupt"
