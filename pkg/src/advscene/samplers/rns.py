"""Random neighborhood search: random sampling that exploits the region
around the most recent high-scoring test case, with a k-d-tree novelty
check so exploitation does not resample known points."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..rng import Rng
from ..scenario.space import SamplePoint, SearchSpace
from .base import Sampler, SamplerFeedback
from .kdtree import KdTree
from .passive import random_next

_MAX_REJECTIONS = 32


@dataclass(frozen=True)
class RnsConfig:
    radius: float = 0.1  # L-inf exploitation ball, normalized units
    threshold: float = 0.0  # exploit when the last score exceeds this
    novelty: float = 0.01  # min Euclidean distance to any stored point
    retries: int = _MAX_REJECTIONS

    def __post_init__(self):
        if not (0 < self.radius <= 1):
            raise ValueError("radius must be in (0, 1]")
        if self.threshold < 0 or self.novelty < 0 or self.retries < 0:
            raise ValueError("threshold, novelty, and retries must be >= 0")


def rns_next(
    space: SearchSpace,
    history: list[SamplerFeedback],
    kd: KdTree,
    rng: Rng,
    cfg: RnsConfig | None = None,
) -> SamplePoint:
    """Exploit the neighborhood of the last feedback point when its score
    beat the threshold; otherwise sample uniformly.

    Exploitation draws uniformly within the clipped L-inf ball and rejects
    points within `novelty` of a stored point, falling back to a global
    uniform draw after the retry budget.
    """
    cfg = cfg or RnsConfig()
    if history and history[-1].test_score > cfg.threshold:
        center = history[-1].point.coords
        for _ in range(cfg.retries):
            coords = tuple(
                rng.uniform(max(0.0, c - cfg.radius), min(1.0, c + cfg.radius))
                for c in center
            )
            if len(kd) == 0:
                return SamplePoint(coords)
            _, dist = _nearest_dist(kd, coords)
            if dist > cfg.novelty:
                return SamplePoint(coords)
    return random_next(space, rng)


def _nearest_dist(kd: KdTree, coords: tuple[float, ...]) -> tuple[tuple[float, ...], float]:
    point, _, dist = kd.nearest(coords)
    return point, dist


class RnsSampler(Sampler):
    name = "rns"

    def __init__(self, space: SearchSpace, seed: int, options: dict | None = None):
        super().__init__(space, seed, options)
        opts = self.options
        self.config = RnsConfig(
            radius=float(opts.get("rns.radius", 0.1)),
            threshold=float(opts.get("rns.threshold", 0.0)),
            novelty=float(opts.get("rns.novelty", 0.01)),
            retries=int(opts.get("rns.retries", _MAX_REJECTIONS)),
        )
        self._rng = Rng(seed)
        self._kd = KdTree(space.ndim)
        self._history: list[SamplerFeedback] = []

    def propose(self, constraint_region=None) -> SamplePoint:
        return rns_next(self.space, self._history, self._kd, self._rng, self.config)

    def observe(self, feedback: SamplerFeedback) -> None:
        if not math.isfinite(feedback.test_score):
            raise ValueError("test_score must be finite")
        self._history.append(feedback)
        self._kd.insert(feedback.point.coords, feedback.test_score)
