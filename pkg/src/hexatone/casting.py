"""Coin-oracle casting: tosses, lines, hexagrams, and the casting record.

The three-coin method assigns heads the value 3 and tails the value 2,
so one toss of three coins sums to 6..9:

    6 = three tails   -> old yin    (broken line, changing)
    7 = one head      -> young yang (solid line, stable)
    8 = two heads     -> young yin  (broken line, stable)
    9 = three heads   -> old yang   (solid line, changing)

Six tosses build a hexagram bottom line first. The changing lines form
the Dong Yao set; flipping exactly those lines in the original hexagram
(Ben Gua) yields the derived hexagram (Zhi Gua).

All types are immutable; the only stateful object is the caller-owned
generator passed into :func:`toss_coins`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from . import kingwen
from .errors import IndexOutOfRange, WrongLineCount
from .rng import SplitMix64


class Face(enum.Enum):
    HEADS = "H"
    TAILS = "T"

    @property
    def coin_value(self) -> int:
        return 3 if self is Face.HEADS else 2


class Polarity(enum.Enum):
    YIN = "yin"
    YANG = "yang"

    def flipped(self) -> "Polarity":
        return Polarity.YANG if self is Polarity.YIN else Polarity.YIN


@dataclass(frozen=True)
class CoinToss:
    """One throw of three coins."""

    coins: tuple[Face, Face, Face]

    @property
    def total(self) -> int:
        return sum(c.coin_value for c in self.coins)


@dataclass(frozen=True)
class Line:
    """A single hexagram line with its changing (old) status."""

    polarity: Polarity
    changing: bool
    source_sum: int

    _BY_SUM = {
        6: (Polarity.YIN, True),
        7: (Polarity.YANG, False),
        8: (Polarity.YIN, False),
        9: (Polarity.YANG, True),
    }

    @classmethod
    def from_sum(cls, total: int) -> "Line":
        polarity, changing = cls._BY_SUM[total]
        return cls(polarity=polarity, changing=changing, source_sum=total)


def toss_coins(rng: SplitMix64) -> CoinToss:
    """Draw three fair coins from the generator, advancing it."""
    coins = tuple(
        Face.HEADS if rng.next_below(2) == 1 else Face.TAILS for _ in range(3)
    )
    return CoinToss(coins=coins)


def line_from_toss(toss: CoinToss) -> Line:
    return Line.from_sum(toss.total)


@dataclass(frozen=True)
class Hexagram:
    """Six line polarities (bottom first) plus derived identity."""

    lines: tuple[Polarity, Polarity, Polarity, Polarity, Polarity, Polarity]
    king_wen: int
    trigrams: tuple[int, int]  # (lower, upper), numbered 1..8

    @classmethod
    def from_polarities(cls, polarities: Iterable[Polarity]) -> "Hexagram":
        lines = tuple(polarities)
        if len(lines) != 6:
            raise WrongLineCount(f"hexagram needs 6 lines, got {len(lines)}")
        pattern = tuple(1 if p is Polarity.YANG else 0 for p in lines)
        return cls(
            lines=lines,
            king_wen=kingwen.number_for_pattern(pattern),
            trigrams=kingwen.trigrams_for_pattern(pattern),
        )


def build_hexagram(lines: Iterable[Line]) -> Hexagram:
    """Assemble the Ben Gua from six cast lines (bottom first)."""
    line_list = list(lines)
    if len(line_list) != 6:
        raise WrongLineCount(f"expected 6 lines, got {len(line_list)}")
    return Hexagram.from_polarities(line.polarity for line in line_list)


def derive_zhi_gua(ben: Hexagram, dong_yao: Iterable[int]) -> Hexagram:
    """Flip the given 1-based line indices of the Ben Gua.

    Flipping is an involution: deriving twice with the same index set
    returns the original hexagram.
    """
    indices = set(dong_yao)
    for i in indices:
        if not 1 <= i <= 6:
            raise IndexOutOfRange(f"line index {i} outside 1..6")
    flipped = tuple(
        line.flipped() if (i + 1) in indices else line
        for i, line in enumerate(ben.lines)
    )
    return Hexagram.from_polarities(flipped)


@dataclass(frozen=True)
class CastingRecord:
    """Progress and result of one six-toss casting."""

    seed: int
    tosses: tuple[CoinToss, ...] = ()
    lines: tuple[Line, ...] = ()

    def __post_init__(self):
        if len(self.tosses) != len(self.lines):
            raise WrongLineCount("tosses and lines must advance together")
        if len(self.tosses) > 6:
            raise WrongLineCount("a casting has at most 6 tosses")

    @property
    def complete(self) -> bool:
        return len(self.lines) == 6

    @property
    def dong_yao(self) -> tuple[int, ...]:
        """1-based indices of changing lines, ascending."""
        return tuple(i + 1 for i, line in enumerate(self.lines) if line.changing)

    @property
    def ben_gua(self) -> Hexagram:
        if not self.complete:
            raise WrongLineCount("casting incomplete, no hexagram yet")
        return build_hexagram(self.lines)

    @property
    def zhi_gua(self) -> Hexagram:
        return derive_zhi_gua(self.ben_gua, self.dong_yao)

    def with_toss(self, toss: CoinToss) -> "CastingRecord":
        if self.complete:
            raise WrongLineCount("casting already complete")
        return CastingRecord(
            seed=self.seed,
            tosses=self.tosses + (toss,),
            lines=self.lines + (line_from_toss(toss),),
        )

    def to_jsonable(self) -> dict:
        """Plain-JSON form; canonical bytes come from serialize.canonical_json."""
        doc: dict = {
            "seed": self.seed,
            "tosses": [[c.value for c in t.coins] for t in self.tosses],
            "lines": [
                {
                    "polarity": line.polarity.value,
                    "changing": line.changing,
                    "sum": line.source_sum,
                }
                for line in self.lines
            ],
        }
        if self.complete:
            ben, zhi = self.ben_gua, self.zhi_gua
            doc["ben_gua"] = hexagram_jsonable(ben)
            doc["dong_yao"] = list(self.dong_yao)
            doc["zhi_gua"] = hexagram_jsonable(zhi)
        return doc


def hexagram_jsonable(hexagram: Hexagram) -> dict:
    return {
        "king_wen": hexagram.king_wen,
        "lines": [p.value for p in hexagram.lines],
        "trigrams": list(hexagram.trigrams),
    }
