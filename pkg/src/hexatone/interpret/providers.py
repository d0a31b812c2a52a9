"""Interpretation providers: the pluggable reading source.

A provider turns a prompt document into a raw payload shaped like::

    {"body": "...", "keywords": {"mood": [...], "energy": [...],
                                 "dynamics": [...], "spatial": [...]}}

:func:`interpret` is the only entry point the rest of the system uses;
it validates whatever the provider returned and never lets a partial
reading escape. The default provider is fully offline and
deterministic: its reading is templated from the prompt document's own
texts and its keywords come from the bundled lexicon. The remote
provider is an adapter boundary only — it forwards the document to a
configured HTTP endpoint and is disabled unless explicitly configured.
"""

from __future__ import annotations

import os
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

from ..errors import MalformedProviderOutput, ProviderUnavailable
from .lexicon import select_keywords
from .plan import CATEGORIES, Reading
from .prompts import PromptDocument


class InterpretationProvider(ABC):
    provider_id: str = "abstract"

    @abstractmethod
    def generate(self, doc: PromptDocument) -> dict:
        """Return the raw reading payload for a prompt document."""


def interpret(doc: PromptDocument, provider: InterpretationProvider) -> Reading:
    """Obtain and validate a reading; failures never yield partial data."""
    raw = provider.generate(doc)
    if not isinstance(raw, dict):
        raise MalformedProviderOutput("provider returned a non-object payload", raw=raw)
    body = raw.get("body")
    keywords = raw.get("keywords")
    if not isinstance(body, str) or not isinstance(keywords, dict):
        raise MalformedProviderOutput("payload missing body or keywords", raw=raw)
    try:
        return Reading(
            body=body,
            keywords={c: list(keywords.get(c, [])) for c in CATEGORIES if c in keywords},
        )
    except MalformedProviderOutput as exc:
        # re-attach the full payload for diagnostics
        raise MalformedProviderOutput(str(exc), raw=raw) from None


class MockProvider(InterpretationProvider):
    """Offline deterministic reading generator."""

    provider_id = "mock"

    def generate(self, doc: PromptDocument) -> dict:
        ben, zhi = doc.ben, doc.zhi
        lines = [
            f"You asked: {doc.question}",
            (
                f"The casting gave hexagram {ben.king_wen}, {ben.name_pinyin} "
                f"({ben.name_translated}). Its judgment says: {ben.gua_ci}"
            ),
        ]
        if doc.name:
            lines.insert(0, f"{doc.name}, the oracle has heard your question.")
        if doc.dong_yao:
            lines.append("The changing lines speak in turn:")
            for index, text in doc.dong_yao:
                lines.append(f"Line {index}: {text}")
            lines.append(
                f"Through these changes the situation moves toward hexagram "
                f"{zhi.king_wen}, {zhi.name_pinyin} ({zhi.name_translated}): {zhi.gua_ci}"
            )
        else:
            lines.append(
                "No line is changing; the situation rests in the original "
                "hexagram, and its judgment stands whole."
            )
        lines.append(
            "Hold the question lightly and let the judgment color what you "
            "already know of the matter."
        )
        return {
            "body": "\n".join(lines),
            "keywords": select_keywords(
                ben=ben.king_wen,
                n_changing=len(doc.dong_yao),
                zhi=zhi.king_wen,
            ),
        }


@dataclass(frozen=True)
class RemoteConfig:
    endpoint: str
    model: str
    api_key_env: str = "HEXATONE_PROVIDER_KEY"
    timeout_seconds: float = 30.0


class RemoteProvider(InterpretationProvider):
    """Adapter that forwards the prompt to a hosted model endpoint.

    Request shape: POST ``{endpoint}`` with JSON
    ``{"model": ..., "prompt": doc.render_text(), "document": doc}``
    and a bearer token read from the configured environment variable.
    The response must already be payload-shaped; validation happens in
    :func:`interpret` like for any other provider.
    """

    provider_id = "remote"

    def __init__(self, config: RemoteConfig):
        self.config = config

    def generate(self, doc: PromptDocument) -> dict:
        api_key = os.environ.get(self.config.api_key_env)
        if not self.config.endpoint or not api_key:
            raise ProviderUnavailable(
                "remote provider not configured: endpoint and "
                f"{self.config.api_key_env} are required"
            )
        import httpx

        try:
            response = httpx.post(
                self.config.endpoint,
                json={
                    "model": self.config.model,
                    "prompt": doc.render_text(),
                    "document": doc.to_jsonable(),
                },
                headers={"Authorization": f"Bearer {api_key}"},
                timeout=self.config.timeout_seconds,
            )
            response.raise_for_status()
            return response.json()
        except httpx.HTTPError as exc:
            raise ProviderUnavailable(f"remote provider failed: {exc}") from exc


def remote_provider_stub(config: RemoteConfig) -> RemoteProvider:
    return RemoteProvider(config)


def provider_by_name(name: str, remote_config: Optional[RemoteConfig] = None) -> InterpretationProvider:
    if name == "mock":
        return MockProvider()
    if name == "remote":
        if remote_config is None:
            endpoint = os.environ.get("HEXATONE_PROVIDER_ENDPOINT", "")
            model = os.environ.get("HEXATONE_PROVIDER_MODEL", "")
            remote_config = RemoteConfig(endpoint=endpoint, model=model)
        return RemoteProvider(remote_config)
    raise ValueError(f"unknown provider '{name}'")
