"""Portable seeded randomness.

Every random choice in the package flows through SplitMix64 so that
results are bit-identical across platforms and library versions.  The
generator is the standard 64-bit SplitMix: a Weyl sequence on the golden
gamma constant pushed through a two-round multiply/xor finalizer.
Sub-streams (per layer, per permutation side) are derived by mixing an
index into the master seed rather than by consuming the parent stream,
so adding a layer never perturbs earlier layers.
"""

from __future__ import annotations

from typing import Sequence

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def mix64(value: int) -> int:
    """Finalize a 64-bit value (SplitMix64 mixer)."""
    z = value & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(master: int, index: int) -> int:
    """Seed for the ``index``-th independent sub-stream of ``master``."""
    return mix64((master + (index + 1) * _GAMMA) & _MASK64)


class SplitMix64:
    """Deterministic 64-bit stream with the usual integer helpers."""

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return mix64(self._state)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), unbiased via rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        threshold = ((1 << 64) // bound) * bound
        while True:
            value = self.next_u64()
            if value < threshold:
                return value % bound

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def permutation(self, n: int) -> tuple[int, ...]:
        items = list(range(n))
        self.shuffle(items)
        return tuple(items)

    def subset(self, n: int, size: int) -> tuple[int, ...]:
        """Uniform ``size``-subset of range(n), returned sorted."""
        if not 0 < size <= n:
            raise ValueError(f"size must be in [1, {n}], got {size}")
        items = list(range(n))
        # partial Fisher-Yates: the first `size` slots become the sample
        for i in range(size):
            j = i + self.below(n - i)
            items[i], items[j] = items[j], items[i]
        return tuple(sorted(items[:size]))

    def choice(self, items: Sequence):
        return items[self.below(len(items))]
