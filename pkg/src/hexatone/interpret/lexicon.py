"""Keyword lexicon for the offline interpretation provider.

Keywords are grouped by the eight trigram families (indexed by the
upper trigram of the original hexagram), giving readings a consistent
character per family while selection arithmetic over (original number,
changing-line count, derived number) varies the exact picks. The
first energy and dynamics keywords are always drawn from the vocabulary
the plan builder maps to tempo and density, so downstream conditioning
stays total.
"""

from __future__ import annotations

from ..kingwen import KING_WEN_LINES, trigrams_for_pattern

# Primary vocabulary understood by the plan's config mapping.
ENERGY_PRIMARY = ("still", "flowing", "surging")
DYNAMICS_PRIMARY = ("soft", "swelling", "bold")

# family -> category pools; family order is trigram number 1..8
_FAMILIES: dict[int, dict[str, tuple[str, ...]]] = {
    1: {  # Qian, heaven
        "mood": ("luminous", "resolute", "vaulting", "clear", "sovereign"),
        "energy": ("ascending", "radiant", "ceaseless"),
        "dynamics": ("commanding", "bright", "firm"),
        "spatial": ("vast", "open", "skyward"),
    },
    2: {  # Dui, lake
        "mood": ("joyous", "gleaming", "tender", "candid", "light"),
        "energy": ("rippling", "playful", "easy"),
        "dynamics": ("sparkling", "buoyant", "gentle"),
        "spatial": ("shimmering", "close", "reflective"),
    },
    3: {  # Li, fire
        "mood": ("radiant", "warm", "clinging", "vivid", "awake"),
        "energy": ("flickering", "rising", "bright"),
        "dynamics": ("glowing", "crackling", "keen"),
        "spatial": ("haloed", "near", "focused"),
    },
    4: {  # Zhen, thunder
        "mood": ("startled", "electric", "awakening", "raw", "urgent"),
        "energy": ("shaking", "driving", "sudden"),
        "dynamics": ("striking", "jolting", "emphatic"),
        "spatial": ("rolling", "wide", "echoing"),
    },
    5: {  # Xun, wind
        "mood": ("gentle", "searching", "pliant", "subtle", "patient"),
        "energy": ("drifting", "threading", "persistent"),
        "dynamics": ("whispering", "breathing", "light"),
        "spatial": ("weaving", "pervasive", "airy"),
    },
    6: {  # Kan, water
        "mood": ("deep", "grave", "searching", "shadowed", "resolute"),
        "energy": ("coursing", "plunging", "relentless"),
        "dynamics": ("undertowed", "weighty", "dark"),
        "spatial": ("cavernous", "enveloping", "deepening"),
    },
    7: {  # Gen, mountain
        "mood": ("still", "composed", "watchful", "austere", "grounded"),
        "energy": ("resting", "held", "steady"),
        "dynamics": ("hushed", "measured", "quiet"),
        "spatial": ("monolithic", "distant", "high"),
    },
    8: {  # Kun, earth
        "mood": ("receptive", "warm", "devoted", "calm", "abiding"),
        "energy": ("carrying", "slow", "yielding"),
        "dynamics": ("soft-spoken", "rounded", "even"),
        "spatial": ("broad", "low", "embracing"),
    },
}

_CATEGORIES = ("mood", "energy", "dynamics", "spatial")


def _family_of(king_wen: int) -> int:
    _, upper = trigrams_for_pattern(KING_WEN_LINES[king_wen])
    return upper


def select_keywords(ben: int, n_changing: int, zhi: int) -> dict[str, list[str]]:
    """Deterministic four-category keyword map for a casting outcome."""
    family = _FAMILIES[_family_of(ben)]
    index = ben * 31 + zhi * 7 + n_changing * 3
    keywords: dict[str, list[str]] = {}
    for offset, category in enumerate(_CATEGORIES):
        pool = family[category]
        first = pool[(index + offset) % len(pool)]
        second = pool[(index + offset + 1 + n_changing) % len(pool)]
        picks = [first] if first == second else [first, second]
        keywords[category] = picks
    # anchor the plan-facing categories on mapped vocabulary
    keywords["energy"].insert(0, ENERGY_PRIMARY[(ben + n_changing) % 3])
    keywords["dynamics"].insert(0, DYNAMICS_PRIMARY[(zhi + n_changing) % 3])
    return keywords
