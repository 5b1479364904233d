"""SplitMix64: a tiny, portable, seedable pseudorandom generator.

This is the generator of Steele, Lea and Vigna with 64 bits of state.
Every certificate and fixture in this package is keyed to it, so results
reproduce across platforms and languages that implement the same stream.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    """64-bit-state generator; next_u64 yields the canonical stream."""

    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection (unbiased)."""
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def choice_sign(self) -> int:
        """Uniform value from {-1, +1}."""
        return 1 if self.next_u64() & 1 else -1
