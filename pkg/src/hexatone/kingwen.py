"""King Wen numbering and trigram identification.

The King Wen sequence is a fixed historical ordering with no closed
formula, so it ships as a data table: ``KING_WEN_LINES`` maps each
number 1..64 to its six line polarities, bottom line first (1 = yang
solid, 0 = yin broken). The inverse map is derived at import time and
both directions are exhaustively checked by the test suite.

The table was cross-validated structurally: it is a bijection over all
64 patterns, and every consecutive odd/even pair is either the upside-
down inversion of its partner or, where inversion is symmetric, its
line-by-line complement — the defining pairing of the sequence.

Trigrams are numbered 1..8 in the conventional Qian..Kun enumeration;
the hexagram's lower trigram is lines 1-3 and the upper is lines 4-6.
"""

from __future__ import annotations

LinePattern = tuple[int, int, int, int, int, int]

KING_WEN_LINES: dict[int, LinePattern] = {
    1: (1, 1, 1, 1, 1, 1),
    2: (0, 0, 0, 0, 0, 0),
    3: (1, 0, 0, 0, 1, 0),
    4: (0, 1, 0, 0, 0, 1),
    5: (1, 1, 1, 0, 1, 0),
    6: (0, 1, 0, 1, 1, 1),
    7: (0, 1, 0, 0, 0, 0),
    8: (0, 0, 0, 0, 1, 0),
    9: (1, 1, 1, 0, 1, 1),
    10: (1, 1, 0, 1, 1, 1),
    11: (1, 1, 1, 0, 0, 0),
    12: (0, 0, 0, 1, 1, 1),
    13: (1, 0, 1, 1, 1, 1),
    14: (1, 1, 1, 1, 0, 1),
    15: (0, 0, 1, 0, 0, 0),
    16: (0, 0, 0, 1, 0, 0),
    17: (1, 0, 0, 1, 1, 0),
    18: (0, 1, 1, 0, 0, 1),
    19: (1, 1, 0, 0, 0, 0),
    20: (0, 0, 0, 0, 1, 1),
    21: (1, 0, 0, 1, 0, 1),
    22: (1, 0, 1, 0, 0, 1),
    23: (0, 0, 0, 0, 0, 1),
    24: (1, 0, 0, 0, 0, 0),
    25: (1, 0, 0, 1, 1, 1),
    26: (1, 1, 1, 0, 0, 1),
    27: (1, 0, 0, 0, 0, 1),
    28: (0, 1, 1, 1, 1, 0),
    29: (0, 1, 0, 0, 1, 0),
    30: (1, 0, 1, 1, 0, 1),
    31: (0, 0, 1, 1, 1, 0),
    32: (0, 1, 1, 1, 0, 0),
    33: (0, 0, 1, 1, 1, 1),
    34: (1, 1, 1, 1, 0, 0),
    35: (0, 0, 0, 1, 0, 1),
    36: (1, 0, 1, 0, 0, 0),
    37: (1, 0, 1, 0, 1, 1),
    38: (1, 1, 0, 1, 0, 1),
    39: (0, 0, 1, 0, 1, 0),
    40: (0, 1, 0, 1, 0, 0),
    41: (1, 1, 0, 0, 0, 1),
    42: (1, 0, 0, 0, 1, 1),
    43: (1, 1, 1, 1, 1, 0),
    44: (0, 1, 1, 1, 1, 1),
    45: (0, 0, 0, 1, 1, 0),
    46: (0, 1, 1, 0, 0, 0),
    47: (0, 1, 0, 1, 1, 0),
    48: (0, 1, 1, 0, 1, 0),
    49: (1, 0, 1, 1, 1, 0),
    50: (0, 1, 1, 1, 0, 1),
    51: (1, 0, 0, 1, 0, 0),
    52: (0, 0, 1, 0, 0, 1),
    53: (0, 0, 1, 0, 1, 1),
    54: (1, 1, 0, 1, 0, 0),
    55: (1, 0, 1, 1, 0, 0),
    56: (0, 0, 1, 1, 0, 1),
    57: (0, 1, 1, 0, 1, 1),
    58: (1, 1, 0, 1, 1, 0),
    59: (0, 1, 0, 0, 1, 1),
    60: (1, 1, 0, 0, 1, 0),
    61: (1, 1, 0, 0, 1, 1),
    62: (0, 0, 1, 1, 0, 0),
    63: (1, 0, 1, 0, 1, 0),
    64: (0, 1, 0, 1, 0, 1),
}

PATTERN_TO_NUMBER: dict[LinePattern, int] = {
    pattern: number for number, pattern in KING_WEN_LINES.items()
}
assert len(PATTERN_TO_NUMBER) == 64, "King Wen table must be a bijection"

# Trigram number by its three lines, bottom first.
TRIGRAM_NUMBER: dict[tuple[int, int, int], int] = {
    (1, 1, 1): 1,  # Qian, heaven
    (1, 1, 0): 2,  # Dui, lake
    (1, 0, 1): 3,  # Li, fire
    (1, 0, 0): 4,  # Zhen, thunder
    (0, 1, 1): 5,  # Xun, wind
    (0, 1, 0): 6,  # Kan, water
    (0, 0, 1): 7,  # Gen, mountain
    (0, 0, 0): 8,  # Kun, earth
}

TRIGRAM_NAMES: dict[int, str] = {
    1: "Qian",
    2: "Dui",
    3: "Li",
    4: "Zhen",
    5: "Xun",
    6: "Kan",
    7: "Gen",
    8: "Kun",
}


def number_for_pattern(pattern: LinePattern) -> int:
    """King Wen number for six line polarities, bottom first."""
    return PATTERN_TO_NUMBER[pattern]


def trigrams_for_pattern(pattern: LinePattern) -> tuple[int, int]:
    """(lower, upper) trigram numbers for a hexagram line pattern."""
    lower = TRIGRAM_NUMBER[pattern[0:3]]
    upper = TRIGRAM_NUMBER[pattern[3:6]]
    return lower, upper
