"""Deterministic 64-bit randomness for reproducible sampling.

The generator is splitmix64 (Steele/Lea/Flood): state advances by the
golden-ratio gamma and each output word goes through the standard
xor-shift/multiply finalizer. Uniform draws below an arbitrary modulus
use bit-masked rejection sampling, so moduli wider than 64 bits are fine
and there is no modulo bias.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """splitmix64 output finalizer; a bijection on 64-bit words."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(master_seed: int, index: int) -> int:
    """Per-sample seed for batch runs: mix64(master + (index+1) * gamma).

    Distinct indices give distinct seeds for any fixed master, and serial
    and parallel batch runs agree because sample i never depends on the
    draws made for sample i-1.
    """
    return mix64((master_seed + (index + 1) * GOLDEN_GAMMA) & MASK64)


class SplitMix64:
    """Seeded stream of 64-bit words with unbiased bounded draws."""

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_word(self) -> int:
        self._state = (self._state + GOLDEN_GAMMA) & MASK64
        return mix64(self._state)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) for any n >= 1, however wide.

        Draws ceil(bits/64) words, masks to the bit length of n-1, and
        rejects overshoots; acceptance probability is above 1/2.
        """
        if n < 1:
            raise ValueError("modulus must be >= 1")
        if n == 1:
            return 0
        bits = (n - 1).bit_length()
        words = (bits + 63) // 64
        mask = (1 << bits) - 1
        while True:
            value = 0
            for _ in range(words):
                value = (value << 64) | self.next_word()
            value &= mask
            if value < n:
                return value
