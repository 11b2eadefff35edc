"""Seedable, splittable 64-bit random generator (SplitMix64).

Every stream in a campaign derives from one 64-bit campaign seed via
``derive_seed``, so ledgers are reproducible bit-for-bit across runs and
platforms. The exact algorithm is pinned in docs/FORMATS.md and mirrored
by the compiled simulation kernel; do not change constants without
bumping the ledger schema version.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

# namespace keys for derive_seed, so independent streams never collide
NS_SAMPLER = 1
NS_SCENE = 2
NS_COMPARE = 3


def mix64(z: int) -> int:
    """SplitMix64 finalizer: a bijective 64-bit mix."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def derive_seed(seed: int, *keys: int) -> int:
    """Derive a child seed from ``seed`` and integer keys, order-sensitive.

    Pure function of its arguments: deriving never consumes generator
    state, so streams can be split before or after any draws.
    """
    s = seed & _MASK
    for k in keys:
        s = mix64((s ^ mix64((k + _GAMMA) & _MASK)) + _GAMMA)
    return s


class Rng:
    """SplitMix64 stream."""

    __slots__ = ("seed", "_state")

    def __init__(self, seed: int):
        self.seed = seed & _MASK
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return mix64(self._state)

    def next_float(self) -> float:
        """Uniform double in [0, 1): top 53 bits scaled by 2^-53."""
        return (self.next_u64() >> 11) * 2.0**-53

    def uniform(self, low: float, high: float) -> float:
        return low + (high - low) * self.next_float()

    def below(self, n: int) -> int:
        """Integer in [0, n) via multiply-shift (documented, biased < 2^-64)."""
        if n <= 0:
            raise ValueError("n must be positive")
        return (self.next_u64() * n) >> 64

    def split(self, key: int) -> "Rng":
        """Independent child stream; depends only on (seed, key)."""
        return Rng(derive_seed(self.seed, key))

    def __repr__(self) -> str:  # pragma: no cover
        return f"Rng(seed={self.seed:#x})"
