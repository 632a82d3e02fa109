"""Pluggable randomness sources.

The hardware design defers randomness to an external TRNG; here every
consumer takes an explicit source object so runs are reproducible.  Same
seed, same stream -- that contract is what the golden tests rely on.
"""

import random


class SeededSource:
    """Deterministic stream backed by the stdlib Mersenne Twister."""

    def __init__(self, seed: int):
        self.seed = seed
        self._rng = random.Random(seed)

    def randrange(self, lo: int, hi: int) -> int:
        """Uniform value in [lo, hi)."""
        return self._rng.randrange(lo, hi)


class SequenceSource:
    """Replays a fixed list of values; used to pin ephemeral exponents in tests."""

    def __init__(self, values):
        self._values = list(values)
        self._pos = 0

    def randrange(self, lo: int, hi: int) -> int:
        if self._pos >= len(self._values):
            raise IndexError("SequenceSource exhausted")
        v = self._values[self._pos]
        self._pos += 1
        if not (lo <= v < hi):
            raise ValueError(f"pinned value {v} outside [{lo}, {hi})")
        return v
