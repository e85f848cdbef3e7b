"""Deterministic 64-bit random streams (SplitMix64).

All random corpora in this package are generated from SplitMix64, the
mixer/generator of Steele, Lea and Flood's SplittableRandom.  It is tiny,
fully specified by two integer constants, and trivially splittable, so a
(seed, index) pair identifies the same bit stream in any language.

Stream derivation: ``stream(seed, index)`` seeds a generator with
``mix(seed) XOR mix((index + 1) * GAMMA)`` where ``mix`` is the SplitMix64
finalizer and GAMMA = 0x9E3779B97F4A7C15.  All arithmetic is mod 2**64.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """SplitMix64 generator with exact integer helpers (no floats)."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + GAMMA) & _MASK64
        return _mix(self._state)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), exact via rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] inclusive."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.below(hi - lo + 1)

    def bernoulli(self, numerator: int, denominator: int) -> bool:
        """Exact Bernoulli(numerator/denominator) draw, one below() call."""
        if not 0 <= numerator <= denominator or denominator <= 0:
            raise ValueError("probability must be in [0, 1]")
        if numerator == 0:
            return False
        if numerator == denominator:
            return True
        return self.below(denominator) < numerator


def stream(seed: int, index: int = 0) -> SplitMix64:
    """The index-th substream of a 64-bit seed (see module docstring)."""
    return SplitMix64(_mix(seed) ^ _mix(((index + 1) * GAMMA) & _MASK64))
