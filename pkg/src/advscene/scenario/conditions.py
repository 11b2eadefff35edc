"""Environment conditions and the per-region rate-of-change constraints."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from ..sdl.model import ConstraintSet, SceneSpecification, SdlSemanticError

# Campaign starting conditions when the scene spec does not override them:
# dusk, clear sky, dry, light traffic, no pedestrians.
PAPER_INITIAL_CONDITIONS = {
    "cloudiness": 0.0,
    "precipitation": 0.0,
    "time_of_day": 0.0,
    "traffic_density": 5.0,
    "pedestrian_density": 0.0,
}

_WEATHER_FIELDS = ("cloudiness", "precipitation", "time_of_day")
_INTEGER_FIELDS = ("traffic_density", "pedestrian_density")


@dataclass(frozen=True)
class EnvironmentConditions:
    """The temporal scene variables: weather, time of day, actor densities."""

    cloudiness: float = 0.0
    precipitation: float = 0.0
    time_of_day: float = 0.0
    traffic_density: float = 0.0
    pedestrian_density: float = 0.0

    def as_dict(self) -> dict[str, float]:
        return {
            "cloudiness": self.cloudiness,
            "precipitation": self.precipitation,
            "time_of_day": self.time_of_day,
            "traffic_density": self.traffic_density,
            "pedestrian_density": self.pedestrian_density,
        }

    @classmethod
    def from_dict(cls, values: dict[str, float]) -> "EnvironmentConditions":
        return cls(**values)


def _clamp_integer(prev: float, candidate: float, delta: float) -> float:
    """Clamp an integer-valued field to within delta of prev, then round.

    The allowed band is snapped inward to integers before rounding
    (ties-to-even); naive clamp-then-round can leave the band when delta is
    fractional.
    """
    if math.isinf(delta):
        return float(round(candidate))
    lo = math.ceil(prev - delta)
    hi = math.floor(prev + delta)
    if lo > hi:  # delta too small to allow any integer move; hold position
        return float(round(prev))
    return float(min(max(round(candidate), lo), hi))


def apply_constraints(
    prev: EnvironmentConditions | None,
    candidate: EnvironmentConditions,
    constraints: ConstraintSet,
) -> EnvironmentConditions:
    """Clamp candidate toward prev so every field moves at most its delta.

    prev is the realized conditions of the previous region in the same
    traversal; None (first region) passes the candidate through untouched.
    Clamping is total: there is no rejection path.
    """
    if prev is None:
        return candidate
    updates: dict[str, float] = {}
    for name in _WEATHER_FIELDS:
        d = constraints.weather_delta
        p = getattr(prev, name)
        c = getattr(candidate, name)
        if not math.isinf(d):
            updates[name] = min(max(c, p - d), p + d)
    updates["traffic_density"] = _clamp_integer(
        prev.traffic_density, candidate.traffic_density, constraints.traffic_delta
    )
    updates["pedestrian_density"] = _clamp_integer(
        prev.pedestrian_density, candidate.pedestrian_density, constraints.pedestrian_delta
    )
    return replace(candidate, **updates)


def initial_conditions(spec: SceneSpecification) -> EnvironmentConditions:
    """Campaign starting conditions: spec overrides over the defaults.

    Raises SdlSemanticError when an override falls outside its declared
    range (literal parameters are not checked; they carry their own value).
    """
    values = dict(PAPER_INITIAL_CONDITIONS)
    params = spec.parameters()
    for name, value in spec.initial:
        low, high = params[name].bounds()
        if not (low <= value <= high):
            raise SdlSemanticError(
                f"initial value {name}={value:g} is outside the declared range "
                f"[{low:g}, {high:g}]",
                fieldname=name,
            )
        values[name] = float(value)
    return EnvironmentConditions.from_dict(values)
