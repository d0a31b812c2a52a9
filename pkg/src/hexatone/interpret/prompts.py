"""Prompt assembly: casting results plus the inquiry, ready for a provider.

The document is fully structured (not just a rendered string) so that
providers, logging, and the UI's prompt viewer all see the same fields.
The instruction template is versioned; the version id travels into the
music plan's provenance so any reading can be traced to the exact
wording that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..casting import CastingRecord
from ..corpus import Corpus, lookup_texts
from ..errors import EmptyQuestion, IncompleteCasting

TEMPLATE_VERSION = "reading-v1"

INSTRUCTIONS = (
    "You are an oracle interpreter. Using the judgment of the original "
    "hexagram, the texts of any changing lines, and the judgment of the "
    "derived hexagram, write a short reading that speaks directly to the "
    "querent's question. Then give keywords for the music that should "
    "accompany the reading, exactly four categories: mood, energy, "
    "dynamics, spatial."
)


@dataclass(frozen=True)
class Inquiry:
    question: str
    name: Optional[str] = None

    def __post_init__(self):
        if not self.question or not self.question.strip():
            raise EmptyQuestion("question must not be empty")
        if self.name is not None and not self.name.strip():
            raise EmptyQuestion("name, when given, must not be empty")


@dataclass(frozen=True)
class HexagramTexts:
    king_wen: int
    name_pinyin: str
    name_translated: str
    gua_ci: str


@dataclass(frozen=True)
class PromptDocument:
    question: str
    name: Optional[str]
    ben: HexagramTexts
    dong_yao: tuple[tuple[int, str], ...]  # (line_index, yao_ci) ascending
    zhi: HexagramTexts
    template_version: str
    instructions: str

    def render_text(self) -> str:
        """Single prompt string sent to text providers."""
        parts = [self.instructions, ""]
        if self.name:
            parts.append(f"Querent: {self.name}")
        parts.append(f"Question: {self.question}")
        parts.append("")
        parts.append(
            f"Original hexagram {self.ben.king_wen} "
            f"({self.ben.name_pinyin}, {self.ben.name_translated}): {self.ben.gua_ci}"
        )
        if self.dong_yao:
            parts.append("Changing lines:")
            for index, text in self.dong_yao:
                parts.append(f"  line {index}: {text}")
        else:
            parts.append("Changing lines: none")
        parts.append(
            f"Derived hexagram {self.zhi.king_wen} "
            f"({self.zhi.name_pinyin}, {self.zhi.name_translated}): {self.zhi.gua_ci}"
        )
        return "\n".join(parts)

    def to_jsonable(self) -> dict:
        return {
            "question": self.question,
            "name": self.name,
            "ben": vars(self.ben).copy(),
            "dong_yao": [[i, t] for i, t in self.dong_yao],
            "zhi": vars(self.zhi).copy(),
            "template_version": self.template_version,
            "instructions": self.instructions,
        }


def assemble_prompt(inquiry: Inquiry, record: CastingRecord, corpus: Corpus) -> PromptDocument:
    """Build the provider-facing document for a completed casting."""
    if not record.complete:
        raise IncompleteCasting("cannot assemble a prompt before the sixth toss")
    gua_ci_ben, changing, gua_ci_zhi = lookup_texts(corpus, record)
    ben_entry = corpus.entry(record.ben_gua.king_wen)
    zhi_entry = corpus.entry(record.zhi_gua.king_wen)
    return PromptDocument(
        question=inquiry.question,
        name=inquiry.name,
        ben=HexagramTexts(
            king_wen=ben_entry.king_wen,
            name_pinyin=ben_entry.name_pinyin,
            name_translated=ben_entry.name_translated,
            gua_ci=gua_ci_ben,
        ),
        dong_yao=tuple(changing),
        zhi=HexagramTexts(
            king_wen=zhi_entry.king_wen,
            name_pinyin=zhi_entry.name_pinyin,
            name_translated=zhi_entry.name_translated,
            gua_ci=gua_ci_zhi,
        ),
        template_version=TEMPLATE_VERSION,
        instructions=INSTRUCTIONS,
    )
