"""Passive samplers: uniform random, lattice grid, Halton sequence.

These never consume feedback; each point is a pure function of
(space, seed or index).
"""

from __future__ import annotations

from ..rng import Rng
from ..scenario.space import SamplePoint, SearchSpace


def random_next(space: SearchSpace, rng: Rng) -> SamplePoint:
    """Each coordinate i.i.d. uniform on [0,1]; advances the rng state."""
    return SamplePoint(tuple(rng.next_float() for _ in range(space.ndim)))


def grid_next(space: SearchSpace, resolution: int, index: int) -> SamplePoint:
    """The index-th point of the row-major cell-center lattice.

    Coordinates are (j + 0.5)/resolution; the last dimension varies fastest.
    """
    if resolution < 1:
        raise ValueError("resolution must be >= 1")
    total = resolution**space.ndim
    if not 0 <= index < total:
        raise IndexError(f"grid index {index} outside 0..{total - 1}")
    coords = []
    for _ in range(space.ndim):
        index, j = divmod(index, resolution)
        coords.append((j + 0.5) / resolution)
    return SamplePoint(tuple(reversed(coords)))


def radical_inverse(n: int, base: int) -> float:
    """Digit reversal of n in the given base, read as a base-b fraction.

    Computed in exact integer arithmetic with one final division, so the
    result is the correctly rounded double.
    """
    if base < 2:
        raise ValueError("base must be >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    rev = 0
    denom = 1
    while n > 0:
        n, digit = divmod(n, base)
        rev = rev * base + digit
        denom *= base
    return rev / denom


def first_primes(count: int) -> list[int]:
    primes: list[int] = []
    candidate = 2
    while len(primes) < count:
        if all(candidate % p for p in primes):
            primes.append(candidate)
        candidate += 1
    return primes


def halton_next(space: SearchSpace, index: int) -> SamplePoint:
    """Halton point: dimension i uses the i-th prime as its base."""
    if index < 1:
        raise ValueError("Halton index starts at 1")
    bases = first_primes(space.ndim)
    return SamplePoint(tuple(radical_inverse(index, b) for b in bases))
