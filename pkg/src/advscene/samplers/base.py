"""Common sampler interface and feedback record."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..scenario.space import SamplePoint, SearchSpace

# Normalized box: per-dim (low, high) within [0,1]; None means the full cube.
ConstraintRegion = tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class SamplerFeedback:
    """Score feedback for one executed test case."""

    point: SamplePoint
    test_score: float
    failed: bool

    def __post_init__(self):
        if not math.isfinite(self.test_score):
            raise ValueError("test_score must be finite")


class Sampler:
    """One proposal stream. Instances are single-owner mutable state; the
    sequence of propose/observe calls and the seed fully determine output."""

    name = ""

    def __init__(self, space: SearchSpace, seed: int, options: dict | None = None):
        self.space = space
        self.seed = seed
        self.options = dict(options or {})

    def propose(self, constraint_region: ConstraintRegion | None = None) -> SamplePoint:
        raise NotImplementedError

    def observe(self, feedback: SamplerFeedback) -> None:
        """Default: passive samplers ignore feedback."""
