"""Deterministic 64-bit random number generation.

Every chance operation in the engine draws from SplitMix64, a small,
well-known generator that is trivial to reimplement bit-for-bit in any
language. A session owns a single 64-bit seed; independent sub-streams
(casting, one per loop layer, ambient, chart mode) are derived from that
seed plus a stream index, so replaying the same seed always reproduces
the same ritual.

Sub-stream rule (normative, keep in sync with any reimplementation):

    state0(seed, index) = mix64((seed XOR (index * GOLDEN)) mod 2**64)

where GOLDEN = 0x9E3779B97F4A7C15 and mix64 is the SplitMix64 output
finalizer. Stream indices are the ``STREAM_*`` constants below; after a
session reset the indices are offset by ``EPOCH_STRIDE * epoch`` so a
re-cast never replays the previous casting.

Bounded draws use rejection sampling, so they are unbiased for every
bound and consume a data-independent *expected* number of raw outputs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, TypeVar

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15

# Stream indices within one session epoch.
STREAM_CASTING = 0          # the six coin tosses, drawn sequentially
STREAM_LAYER_BASE = 0       # layer for line i uses index STREAM_LAYER_BASE + i
STREAM_AMBIENT = 7          # plan-conditioned ambient rendering
STREAM_CAGE = 8             # chart-mode compositions
EPOCH_STRIDE = 16           # reset bumps every index by one stride

T = TypeVar("T")


def mix64(x: int) -> int:
    """SplitMix64 output finalizer: avalanche one 64-bit word."""
    x &= MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


class SplitMix64:
    """SplitMix64 sequence starting from an explicit 64-bit state."""

    __slots__ = ("state",)

    def __init__(self, state: int):
        self.state = state & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def next_below(self, n: int) -> int:
        """Unbiased integer in [0, n) via rejection sampling."""
        if n <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    def next_float(self) -> float:
        """Float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) / (1 << 53)

    def next_fraction(self, denominator: int, limit: Fraction) -> Fraction:
        """Fraction in [0, limit) on a 1/denominator grid."""
        steps = int(limit * denominator)
        if steps <= 0:
            raise ValueError("limit too small for grid")
        return Fraction(self.next_below(steps), denominator)

    def choice(self, seq: Sequence[T]) -> T:
        return seq[self.next_below(len(seq))]

    def weighted_index(self, weights: Sequence[float]) -> int:
        """Index sampled proportionally to non-negative weights."""
        total = float(sum(weights))
        if total <= 0:
            raise ValueError("weights must sum to a positive value")
        r = self.next_float() * total
        acc = 0.0
        for i, w in enumerate(weights):
            acc += w
            if r < acc:
                return i
        return len(weights) - 1  # guard against accumulated rounding


def substream(seed: int, index: int) -> SplitMix64:
    """Derive the generator for one named stream of a session seed."""
    return SplitMix64(mix64((seed ^ ((index * GOLDEN) & MASK64)) & MASK64))


def stream_index(base: int, epoch: int = 0) -> int:
    """Offset a base stream index into the given reset epoch."""
    return base + epoch * EPOCH_STRIDE
