"""Interpretation pipeline: prompt assembly, providers, and music plans."""

from .plan import MusicPlan, PlanConfig, Provenance, Reading, build_music_plan, plan_from_jsonable
from .prompts import Inquiry, PromptDocument, assemble_prompt
from .providers import (
    InterpretationProvider,
    MockProvider,
    RemoteConfig,
    RemoteProvider,
    interpret,
    provider_by_name,
    remote_provider_stub,
)

__all__ = [
    "MusicPlan",
    "PlanConfig",
    "Provenance",
    "Reading",
    "build_music_plan",
    "plan_from_jsonable",
    "Inquiry",
    "PromptDocument",
    "assemble_prompt",
    "InterpretationProvider",
    "MockProvider",
    "RemoteConfig",
    "RemoteProvider",
    "interpret",
    "provider_by_name",
    "remote_provider_stub",
]
