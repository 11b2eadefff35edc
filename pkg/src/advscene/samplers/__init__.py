"""Test-case samplers behind one interface, keyed by specification name."""

from __future__ import annotations

from ..scenario.space import SamplePoint, SearchSpace
from ..sdl.model import SamplerSpecification
from .base import ConstraintRegion, Sampler, SamplerFeedback
from .gbo import GboConfig, GboSampler, gbo_next
from .gp import (
    GpConfig,
    GpFitError,
    GpSurrogate,
    expected_improvement,
    gp_fit,
    gp_predict,
)
from .kdtree import EmptyTreeError, KdTree, kd_nearest
from .passive import first_primes, grid_next, halton_next, radical_inverse, random_next
from .rns import RnsConfig, RnsSampler, rns_next
from ..rng import Rng


class RandomSampler(Sampler):
    name = "random"

    def __init__(self, space: SearchSpace, seed: int, options: dict | None = None):
        super().__init__(space, seed, options)
        self._rng = Rng(seed)

    def propose(self, constraint_region=None) -> SamplePoint:
        return random_next(self.space, self._rng)


class GridSampler(Sampler):
    name = "grid"

    def __init__(self, space: SearchSpace, seed: int, options: dict | None = None):
        super().__init__(space, seed, options)
        self.resolution = int(self.options.get("grid.resolution", 1))
        if self.resolution < 1:
            raise ValueError("grid.resolution must be >= 1")
        self._index = 0

    def propose(self, constraint_region=None) -> SamplePoint:
        total = self.resolution**self.space.ndim
        point = grid_next(self.space, self.resolution, self._index % total)
        self._index += 1
        return point


class HaltonSampler(Sampler):
    name = "halton"

    def __init__(self, space: SearchSpace, seed: int, options: dict | None = None):
        super().__init__(space, seed, options)
        self._index = 1

    def propose(self, constraint_region=None) -> SamplePoint:
        point = halton_next(self.space, self._index)
        self._index += 1
        return point


SAMPLER_REGISTRY: dict[str, type[Sampler]] = {
    "random": RandomSampler,
    "grid": GridSampler,
    "halton": HaltonSampler,
    "rns": RnsSampler,
    "gbo": GboSampler,
}


def default_grid_resolution(budget: int, dims: int) -> int:
    """Largest per-dim resolution whose lattice fits within the budget."""
    r = 1
    while (r + 1) ** dims <= budget:
        r += 1
    return r


def make_sampler(spec: SamplerSpecification, space: SearchSpace) -> Sampler:
    """Instantiate the sampler named by the specification."""
    options = spec.options()
    if spec.sampler == "grid" and "grid.resolution" not in options:
        options["grid.resolution"] = default_grid_resolution(spec.budget, space.ndim)
    return SAMPLER_REGISTRY[spec.sampler](space, spec.seed, options)


__all__ = [
    "ConstraintRegion",
    "EmptyTreeError",
    "GboConfig",
    "GboSampler",
    "GpConfig",
    "GpFitError",
    "GpSurrogate",
    "GridSampler",
    "HaltonSampler",
    "KdTree",
    "RandomSampler",
    "RnsConfig",
    "RnsSampler",
    "SAMPLER_REGISTRY",
    "Sampler",
    "SamplerFeedback",
    "default_grid_resolution",
    "expected_improvement",
    "first_primes",
    "gbo_next",
    "gp_fit",
    "gp_predict",
    "grid_next",
    "halton_next",
    "kd_nearest",
    "make_sampler",
    "radical_inverse",
    "random_next",
    "rns_next",
]
