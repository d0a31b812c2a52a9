"""Canonical JSON serialization.

Byte-identity guarantees (reproducible records, plans, and streams)
depend on one canonical form: UTF-8, keys sorted lexicographically,
no insignificant whitespace, non-ASCII characters unescaped. Beat and
second quantities are :class:`fractions.Fraction` values serialized as
their reduced ``"num/den"`` string (integers as plain ``"n"``), which
keeps timing math exact across the wire.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def canonical_bytes(obj) -> bytes:
    return canonical_json(obj).encode("utf-8")


def digest(obj) -> str:
    """SHA-256 hex digest of the canonical JSON form."""
    return hashlib.sha256(canonical_bytes(obj)).hexdigest()


def frac_str(value: Fraction) -> str:
    return str(Fraction(value))


def parse_frac(text: str) -> Fraction:
    return Fraction(text)
