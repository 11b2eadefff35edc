"""Infraction accounting and test scores.

Two scores exist and both are exposed: the weighted infraction sum, and the
composite score that multiplies it by route completion. Which one drives a
campaign's search is selected in the sampler specification (composite by
default).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .sdl.model import INFRACTION_KINDS, SceneSpecification

# Route completion within this tolerance of 1.0 counts as a completed route.
COMPLETION_TOLERANCE = 1e-6

# Default per-kind weights. The paper-side setup defers to challenge penalty
# coefficients without listing them; these are configuration, not ground
# truth, and every report prints the table in force.
DEFAULT_WEIGHTS: dict[str, float] = {
    "collision_pedestrian": 0.50,
    "collision_vehicle": 0.60,
    "collision_static": 0.65,
    "red_light": 0.70,
    "stop_sign": 0.80,
    "route_deviation": 0.70,
    "off_lane": 0.30,
    "off_road": 0.30,
    "timeout": 0.70,
}


@dataclass(frozen=True)
class InfractionRecord:
    """Non-negative count per infraction kind."""

    collision_pedestrian: int = 0
    collision_vehicle: int = 0
    collision_static: int = 0
    red_light: int = 0
    stop_sign: int = 0
    route_deviation: int = 0
    off_lane: int = 0
    off_road: int = 0
    timeout: int = 0

    def __post_init__(self):
        for kind in INFRACTION_KINDS:
            if getattr(self, kind) < 0:
                raise ValueError(f"negative count for {kind}")

    def count(self, kind: str) -> int:
        return int(getattr(self, kind))

    def total(self) -> int:
        return sum(self.count(k) for k in INFRACTION_KINDS)

    def as_dict(self) -> dict[str, int]:
        return {k: self.count(k) for k in INFRACTION_KINDS}

    @classmethod
    def from_dict(cls, counts: dict[str, int]) -> "InfractionRecord":
        return cls(**{k: int(v) for k, v in counts.items()})


@dataclass(frozen=True)
class WeightTable:
    """Weight per infraction kind; disabled metrics carry weight 0."""

    weights: tuple[tuple[str, float], ...] = field(
        default_factory=lambda: tuple(DEFAULT_WEIGHTS.items())
    )

    def __post_init__(self):
        table = dict(self.weights)
        for kind in INFRACTION_KINDS:
            w = table.get(kind, 0.0)
            if not (math.isfinite(w) and w >= 0):
                raise ValueError(f"weight for {kind} must be finite and >= 0")

    def weight(self, kind: str) -> float:
        return dict(self.weights).get(kind, 0.0)

    def as_dict(self) -> dict[str, float]:
        return {k: self.weight(k) for k in INFRACTION_KINDS}

    @classmethod
    def from_spec(cls, spec: SceneSpecification) -> "WeightTable":
        """Defaults, overridden by the spec's weights block, zeroed where the
        corresponding infraction metric is disabled."""
        table = dict(DEFAULT_WEIGHTS)
        table.update(dict(spec.weights))
        enabled = spec.metric_enabled()
        for kind in INFRACTION_KINDS:
            if not enabled.get(kind, True):
                table[kind] = 0.0
        return cls(tuple((k, table[k]) for k in INFRACTION_KINDS))


@dataclass(frozen=True)
class SceneResult:
    """Outcome of one executed scene."""

    scene_id: int
    infractions: InfractionRecord
    route_completion: float
    test_score: float
    wall_time_s: float
    status: str = "ok"  # ok | protocol_error | diverged
    trajectory: tuple[tuple[str, float], ...] = ()

    def __post_init__(self):
        if not (0.0 <= self.route_completion <= 1.0):
            raise ValueError(f"route completion {self.route_completion} outside [0,1]")
        if self.test_score < 0:
            raise ValueError("test score must be >= 0")

    @property
    def valid(self) -> bool:
        return self.status == "ok"


def weighted_score(infractions: InfractionRecord, weights: WeightTable) -> float:
    """Weighted infraction sum over all kinds."""
    return sum(weights.weight(k) * infractions.count(k) for k in INFRACTION_KINDS)


def composite_score(route_completion: float, weighted_sum: float) -> float:
    """Route-completion-weighted score: the product of the two."""
    if not (0.0 <= route_completion <= 1.0):
        raise ValueError(f"route completion {route_completion} outside [0,1]")
    return route_completion * weighted_sum


def classify_failure(result: SceneResult) -> bool:
    """A scene fails on any infraction or an incomplete route."""
    return (
        result.infractions.total() > 0
        or result.route_completion < 1.0 - COMPLETION_TOLERANCE
    )


def failed_test_rate(results) -> float:
    """Failed test cases as a percentage of all test cases.

    Multiplication before division keeps round counts exact (27/100 is
    exactly 27.0). Raises ValueError on an empty input.
    """
    results = list(results)
    if not results:
        raise ValueError("failed_test_rate needs at least one result")
    n_fail = sum(1 for r in results if classify_failure(r))
    return (n_fail * 100.0) / len(results)


def total_execution_time(results, overheads=()) -> float:
    """Sum of per-scene wall times plus any sampler-overhead entries."""
    total = sum(r.wall_time_s for r in results)
    total += sum(seconds for _, seconds in overheads)
    return total
