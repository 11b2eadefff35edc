"""Normalized search space over the sampled scene parameters."""

from __future__ import annotations

from dataclasses import dataclass

from ..sdl.model import CANONICAL_PARAMS, INTEGER_PARAMS, SceneSpecification


class NothingToSampleError(ValueError):
    """Every parameter is a literal; the campaign would be one fixed test."""


@dataclass(frozen=True)
class Dim:
    name: str
    low: float
    high: float
    kind: str  # continuous | integer

    def __post_init__(self):
        if not self.low < self.high:
            raise ValueError(f"dim '{self.name}' needs low < high, got [{self.low}, {self.high}]")


@dataclass(frozen=True)
class SearchSpace:
    """Hyper-rectangle of sampled parameters, in canonical parameter order."""

    dims: tuple[Dim, ...]
    region_count: int = 1

    def __post_init__(self):
        names = [d.name for d in self.dims]
        if len(set(names)) != len(names):
            raise ValueError("dim names must be unique")

    @property
    def ndim(self) -> int:
        return len(self.dims)

    def names(self) -> tuple[str, ...]:
        return tuple(d.name for d in self.dims)

    def denormalize(self, point: "SamplePoint") -> dict[str, float]:
        """Map normalized coords to raw parameter values (no rounding)."""
        return {
            d.name: d.low + c * (d.high - d.low)
            for d, c in zip(self.dims, point.coords, strict=True)
        }

    def normalize(self, values: dict[str, float]) -> "SamplePoint":
        coords = tuple(
            min(1.0, max(0.0, (values[d.name] - d.low) / (d.high - d.low)))
            for d in self.dims
        )
        return SamplePoint(coords)

    def compatible_with(self, other: "SearchSpace") -> bool:
        return self.dims == other.dims


@dataclass(frozen=True)
class SamplePoint:
    """A point in the unit cube [0,1]^D."""

    coords: tuple[float, ...]

    def __post_init__(self):
        for c in self.coords:
            if not (0.0 <= c <= 1.0):
                raise ValueError(f"coordinate {c!r} outside [0,1]")

    def __len__(self) -> int:
        return len(self.coords)


def partition_parameters(spec: SceneSpecification) -> tuple[SearchSpace, dict[str, float]]:
    """Split scene parameters into the sampled search space and fixed values.

    Range-typed parameters become dims (canonical order); literals go to
    fixed_params. Raises NothingToSampleError when no parameter has a range.
    """
    dims: list[Dim] = []
    fixed: dict[str, float] = {}
    for name in CANONICAL_PARAMS:
        prop = spec.parameters()[name]
        if prop.is_range:
            low, high = prop.value  # type: ignore[misc]
            kind = "integer" if name in INTEGER_PARAMS else "continuous"
            if low == high:
                # degenerate range: nothing to vary, treat as fixed
                fixed[name] = float(low)
            else:
                dims.append(Dim(name, float(low), float(high), kind))
        else:
            fixed[name] = float(prop.value)  # type: ignore[arg-type]
    if not dims:
        raise NothingToSampleError(
            "no parameter has a non-degenerate range; nothing to sample"
        )
    return SearchSpace(tuple(dims), region_count=spec.regions), fixed
