"""Deterministic splitmix64 stream used for every random sample."""
from __future__ import annotations

_MASK = (1 << 64) - 1
PARAMS = (-3, -2, -1, 1, 2, 3)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        x = self.state
        x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK
        return x ^ (x >> 31)

    def below(self, n: int) -> int:
        return self.next() % n

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def param(self) -> int:
        """A nonzero integer parameter in {+-1, +-2, +-3}."""
        return self.choice(PARAMS)

    def split(self, index: int) -> "SplitMix64":
        """Independent child stream, so trial ``index`` is reproducible on its own."""
        child = SplitMix64(self.state ^ ((index + 1) * 0xD1B54A32D192ED03 & _MASK))
        child.next()
        return child
