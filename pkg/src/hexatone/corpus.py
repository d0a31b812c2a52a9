"""The divination text corpus: judgments (Gua Ci) and line texts (Yao Ci).

A corpus is a UTF-8 JSON array of exactly 64 objects::

    {"king_wen": 1, "name_pinyin": "Qian", "name_translated": "The Creative",
     "gua_ci": "...", "yao_ci": ["bottom line text", ..., "top line text"]}

The bundled corpus is a compact original rendering of the traditional
imagery and may be swapped for any file matching the schema (for
example a user-supplied full translation) via ``load_corpus``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .casting import CastingRecord
from .errors import CorpusMissingEntry, CorpusSchemaError


@dataclass(frozen=True)
class CorpusEntry:
    king_wen: int
    name_pinyin: str
    name_translated: str
    gua_ci: str
    yao_ci: tuple[str, str, str, str, str, str]  # index 0 = bottom line


class Corpus:
    """Validated, immutable set of 64 corpus entries."""

    def __init__(self, entries: dict[int, CorpusEntry]):
        self._entries = entries

    def entry(self, king_wen: int) -> CorpusEntry:
        try:
            return self._entries[king_wen]
        except KeyError:
            raise CorpusMissingEntry(f"no corpus entry for hexagram {king_wen}") from None

    def __len__(self) -> int:
        return len(self._entries)


def _parse_entry(raw: object, position: int) -> CorpusEntry:
    if not isinstance(raw, dict):
        raise CorpusSchemaError(f"entry {position} is not an object")
    try:
        king_wen = raw["king_wen"]
        name_pinyin = raw["name_pinyin"]
        name_translated = raw["name_translated"]
        gua_ci = raw["gua_ci"]
        yao_ci = raw["yao_ci"]
    except KeyError as exc:
        raise CorpusSchemaError(f"entry {position} missing field {exc}") from None
    if not isinstance(king_wen, int) or not 1 <= king_wen <= 64:
        raise CorpusSchemaError(f"entry {position}: king_wen must be 1..64")
    for name, value in [
        ("name_pinyin", name_pinyin),
        ("name_translated", name_translated),
        ("gua_ci", gua_ci),
    ]:
        if not isinstance(value, str) or not value.strip():
            raise CorpusSchemaError(f"entry {king_wen}: {name} must be non-empty text")
    if (
        not isinstance(yao_ci, list)
        or len(yao_ci) != 6
        or any(not isinstance(t, str) or not t.strip() for t in yao_ci)
    ):
        raise CorpusSchemaError(f"entry {king_wen}: yao_ci must be 6 non-empty texts")
    return CorpusEntry(
        king_wen=king_wen,
        name_pinyin=name_pinyin,
        name_translated=name_translated,
        gua_ci=gua_ci,
        yao_ci=tuple(yao_ci),
    )


def corpus_from_data(data: object) -> Corpus:
    if not isinstance(data, list):
        raise CorpusSchemaError("corpus must be a JSON array")
    if len(data) != 64:
        raise CorpusSchemaError(f"corpus must have 64 entries, got {len(data)}")
    entries: dict[int, CorpusEntry] = {}
    for position, raw in enumerate(data):
        entry = _parse_entry(raw, position)
        if entry.king_wen in entries:
            raise CorpusSchemaError(f"duplicate king_wen {entry.king_wen}")
        entries[entry.king_wen] = entry
    return Corpus(entries)


def load_corpus(path: str | Path) -> Corpus:
    """Load and validate a corpus file. Raises OSError on I/O failure."""
    with open(path, encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as exc:
            raise CorpusSchemaError(f"corpus is not valid JSON: {exc}") from exc
    return corpus_from_data(data)


def default_corpus() -> Corpus:
    """The corpus bundled with the package."""
    text = resources.files("hexatone.data").joinpath("corpus.json").read_text("utf-8")
    return corpus_from_data(json.loads(text))


def lookup_texts(
    corpus: Corpus, record: CastingRecord
) -> tuple[str, list[tuple[int, str]], str]:
    """Texts for a completed casting.

    Returns the Ben Gua judgment, the (line_index, text) pairs for each
    changing line in ascending line order, and the Zhi Gua judgment.
    """
    ben = corpus.entry(record.ben_gua.king_wen)
    zhi = corpus.entry(record.zhi_gua.king_wen)
    changing = [(i, ben.yao_ci[i - 1]) for i in record.dong_yao]
    return ben.gua_ci, changing, zhi.gua_ci
