"""Guided Bayesian optimization: EI over a GP surrogate, with the
acquisition search restricted to a constraint box when one applies.

Cold start covers the space with Halton points (mapped into the box, so the
restriction holds from the first call); afterwards the GP is refit on the
whole history and the next point is the EI argmax over seeded uniform
candidates drawn inside the box."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..rng import Rng
from ..scenario.space import SamplePoint, SearchSpace
from .base import ConstraintRegion, Sampler, SamplerFeedback
from .gp import GpConfig, expected_improvement_batch, gp_fit
from .passive import halton_next


@dataclass(frozen=True)
class GboConfig:
    cold_start: int = 10
    length_scale: float = 0.2
    signal_variance: float = 1.0
    noise: float = 1e-4
    candidates: int = 1024
    standardize: bool = True

    def __post_init__(self):
        if self.cold_start < 1 or self.candidates < 1:
            raise ValueError("cold_start and candidates must be >= 1")


def _box(space: SearchSpace, region: ConstraintRegion | None) -> list[tuple[float, float]]:
    if region is None:
        return [(0.0, 1.0)] * space.ndim
    if len(region) != space.ndim:
        raise ValueError("constraint region dimensionality mismatch")
    out = []
    for low, high in region:
        low, high = max(0.0, low), min(1.0, high)
        if low > high:
            low = high = min(1.0, max(0.0, low))
        out.append((low, high))
    return out


def gbo_next(
    space: SearchSpace,
    history: list[SamplerFeedback],
    rng: Rng,
    cfg: GboConfig | None = None,
    constraint_region: ConstraintRegion | None = None,
) -> SamplePoint:
    cfg = cfg or GboConfig()
    box = _box(space, constraint_region)
    if len(history) < cfg.cold_start:
        h = halton_next(space, len(history) + 1)
        coords = tuple(
            low + c * (high - low) for c, (low, high) in zip(h.coords, box)
        )
        return SamplePoint(coords)

    scores = np.asarray([f.test_score for f in history], dtype=float)
    if cfg.standardize:
        std = float(scores.std())
        scores = (scores - scores.mean()) / std if std > 0 else scores - scores.mean()
    gp = gp_fit(
        [f.point for f in history],
        scores,
        GpConfig(cfg.length_scale, cfg.signal_variance, cfg.noise),
    )
    incumbent = float(scores.max())

    lows = np.array([low for low, _ in box])
    spans = np.array([high - low for low, high in box])
    u = np.array(
        [[rng.next_float() for _ in range(space.ndim)] for _ in range(cfg.candidates)]
    )
    cands = lows + u * spans
    ei = expected_improvement_batch(gp, cands, incumbent)
    best = int(np.argmax(ei))
    return SamplePoint(tuple(float(v) for v in cands[best]))


class GboSampler(Sampler):
    name = "gbo"

    def __init__(self, space: SearchSpace, seed: int, options: dict | None = None):
        super().__init__(space, seed, options)
        opts = self.options
        self.config = GboConfig(
            cold_start=int(opts.get("gbo.cold_start", 10)),
            length_scale=float(opts.get("gbo.length_scale", 0.2)),
            signal_variance=float(opts.get("gbo.signal_variance", 1.0)),
            noise=float(opts.get("gbo.noise", 1e-4)),
            candidates=int(opts.get("gbo.candidates", 1024)),
            standardize=bool(opts.get("gbo.standardize", True)),
        )
        self._rng = Rng(seed)
        self._history: list[SamplerFeedback] = []

    def propose(self, constraint_region=None) -> SamplePoint:
        return gbo_next(self.space, self._history, self._rng, self.config, constraint_region)

    def observe(self, feedback: SamplerFeedback) -> None:
        self._history.append(feedback)
