"""Readings and the music plan that conditions generative playback.

The plan's canonical JSON schema (stable key order, published in
docs/music_plan.schema.json)::

    {
      "prompts": [{"text": "...", "weight": 1.0}, ...],
      "config": {"bpm": 66, "density": 0.6, "duration_seconds": 45},
      "keywords": {"mood": [...], "energy": [...],
                   "dynamics": [...], "spatial": [...]},
      "provenance": {"provider": "...", "template_version": "...",
                     "casting_digest": "sha256 hex"}
    }

Config derivation is a total function over the keyword space: the first
energy keyword picks the tempo (still 50, flowing 66, surging 84), the
first dynamics keyword picks the density (soft 0.3, swelling 0.6, bold
0.9), and anything unmapped falls back to (66, 0.6).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..casting import CastingRecord
from ..errors import InvalidPlan, MalformedProviderOutput
from ..serialize import canonical_json, digest

CATEGORIES = ("mood", "energy", "dynamics", "spatial")

ENERGY_BPM = {"still": 50, "flowing": 66, "surging": 84}
DYNAMICS_DENSITY = {"soft": 0.3, "swelling": 0.6, "bold": 0.9}
FALLBACK_BPM = 66
FALLBACK_DENSITY = 0.6
DEFAULT_DURATION_SECONDS = 45

# per-category prompt weights plus the summary prompt
PROMPT_WEIGHTS = {"mood": 1.0, "energy": 0.9, "dynamics": 0.7, "spatial": 0.6}
SUMMARY_WEIGHT = 1.5


@dataclass(frozen=True)
class Reading:
    body: str
    keywords: dict[str, list[str]]

    def __post_init__(self):
        if not self.body or not self.body.strip():
            raise MalformedProviderOutput("reading body is empty", raw=self.body)
        for category in CATEGORIES:
            value = self.keywords.get(category)
            if not isinstance(value, list) or not value or not all(
                isinstance(k, str) and k.strip() for k in value
            ):
                raise MalformedProviderOutput(
                    f"keyword category '{category}' missing or empty",
                    raw=self.keywords,
                )
        extra = set(self.keywords) - set(CATEGORIES)
        if extra:
            raise MalformedProviderOutput(
                f"unexpected keyword categories: {sorted(extra)}", raw=self.keywords
            )

    def to_jsonable(self) -> dict:
        return {
            "body": self.body,
            "keywords": {c: list(self.keywords[c]) for c in CATEGORIES},
        }


@dataclass(frozen=True)
class PlanConfig:
    bpm: int
    density: float
    duration_seconds: int


@dataclass(frozen=True)
class Provenance:
    provider: str
    template_version: str
    casting_digest: str


@dataclass(frozen=True)
class MusicPlan:
    prompts: tuple[tuple[str, float], ...]
    config: PlanConfig
    keywords: dict[str, list[str]]
    provenance: Provenance

    def __post_init__(self):
        if not self.prompts:
            raise InvalidPlan("plan needs at least one prompt")
        if any(w < 0 for _, w in self.prompts):
            raise InvalidPlan("prompt weights must be non-negative")
        if not any(w > 0 for _, w in self.prompts):
            raise InvalidPlan("at least one prompt weight must be positive")
        if not 30 <= self.config.duration_seconds <= 60:
            raise InvalidPlan("duration_seconds must lie in [30, 60]")
        if not 0.0 <= self.config.density <= 1.0:
            raise InvalidPlan("density must lie in [0, 1]")
        if self.config.bpm <= 0:
            raise InvalidPlan("bpm must be positive")
        for category in CATEGORIES:
            if not self.keywords.get(category):
                raise InvalidPlan(f"keyword category '{category}' missing or empty")

    def to_jsonable(self) -> dict:
        return {
            "prompts": [{"text": t, "weight": w} for t, w in self.prompts],
            "config": {
                "bpm": self.config.bpm,
                "density": self.config.density,
                "duration_seconds": self.config.duration_seconds,
            },
            "keywords": {c: list(self.keywords[c]) for c in CATEGORIES},
            "provenance": {
                "provider": self.provenance.provider,
                "template_version": self.provenance.template_version,
                "casting_digest": self.provenance.casting_digest,
            },
        }

    def to_canonical_json(self) -> str:
        return canonical_json(self.to_jsonable())


def plan_from_jsonable(raw: dict) -> MusicPlan:
    """Parse a plan document; inverse of ``to_jsonable``."""
    try:
        prompts = tuple((p["text"], float(p["weight"])) for p in raw["prompts"])
        config = PlanConfig(
            bpm=int(raw["config"]["bpm"]),
            density=float(raw["config"]["density"]),
            duration_seconds=int(raw["config"]["duration_seconds"]),
        )
        keywords = {c: [str(k) for k in raw["keywords"][c]] for c in CATEGORIES}
        provenance = Provenance(
            provider=str(raw["provenance"]["provider"]),
            template_version=str(raw["provenance"]["template_version"]),
            casting_digest=str(raw["provenance"]["casting_digest"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidPlan(f"plan document malformed: {exc}") from exc
    return MusicPlan(prompts=prompts, config=config, keywords=keywords, provenance=provenance)


def derive_config(keywords: dict[str, list[str]]) -> PlanConfig:
    energy = keywords["energy"][0] if keywords.get("energy") else ""
    dynamics = keywords["dynamics"][0] if keywords.get("dynamics") else ""
    return PlanConfig(
        bpm=ENERGY_BPM.get(energy, FALLBACK_BPM),
        density=DYNAMICS_DENSITY.get(dynamics, FALLBACK_DENSITY),
        duration_seconds=DEFAULT_DURATION_SECONDS,
    )


def build_music_plan(
    reading: Reading,
    record: CastingRecord,
    provider: str,
    template_version: str,
) -> MusicPlan:
    """Deterministic plan from a validated reading and its casting."""
    prompts: list[tuple[str, float]] = []
    for category in CATEGORIES:
        words = ", ".join(reading.keywords[category])
        prompts.append((f"{category}: {words}", PROMPT_WEIGHTS[category]))
    all_words = [k for c in CATEGORIES for k in reading.keywords[c]]
    prompts.append(
        ("an ambient passage, " + ", ".join(all_words), SUMMARY_WEIGHT)
    )
    return MusicPlan(
        prompts=tuple(prompts),
        config=derive_config(reading.keywords),
        keywords={c: list(reading.keywords[c]) for c in CATEGORIES},
        provenance=Provenance(
            provider=provider,
            template_version=template_version,
            casting_digest=digest(record.to_jsonable()),
        ),
    )
