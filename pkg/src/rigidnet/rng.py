"""Deterministic pseudorandom numbers for deployments and random placements.

The generator is splitmix64: the 64-bit state advances by the golden-gamma
constant 0x9E3779B97F4A7C15 and each output is the finalized mix of the new
state (xor-shift-multiply with 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB).
It is tiny, well studied, and exactly reproducible from a 64-bit seed on any
platform, which is what makes every sampled deployment regenerable.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Stateful splitmix64 stream seeded by an integer (used modulo 2^64)."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def unit(self) -> float:
        """Uniform double in [0, 1) built from the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0 ** -53

    def below_2_31(self) -> int:
        """Uniform integer in [0, 2^31); 2^31 divides 2^64, so this is exact."""
        return self.next_u64() & 0x7FFFFFFF
