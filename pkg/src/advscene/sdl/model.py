"""Domain types for the three specification documents.

All types are immutable value objects; parsing the same text twice yields
structurally equal specifications.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

# Canonical environment parameter order. Search-space dimensions follow this
# order restricted to the sampled parameters.
CANONICAL_PARAMS = (
    "cloudiness",
    "precipitation",
    "time_of_day",
    "traffic_density",
    "pedestrian_density",
)

# Parameters whose realized values are integer counts.
INTEGER_PARAMS = frozenset({"traffic_density", "pedestrian_density"})

# Infraction kinds, in the order used by ledgers and the simulation kernel.
INFRACTION_KINDS = (
    "collision_pedestrian",
    "collision_vehicle",
    "collision_static",
    "red_light",
    "stop_sign",
    "route_deviation",
    "off_lane",
    "off_road",
    "timeout",
)

VALID_SAMPLERS = ("random", "grid", "halton", "rns", "gbo")

SCORE_MODES = ("composite", "weighted")

# Fig-4-style grouped metric switches and the kinds they control.
METRIC_GROUPS = {
    "infraction_penalty": (
        "collision_pedestrian",
        "collision_vehicle",
        "collision_static",
        "red_light",
        "stop_sign",
        "timeout",
    ),
    "off_road_driving": ("off_lane", "off_road"),
    "route_deviation": ("route_deviation",),
}


class SdlError(ValueError):
    """Base for specification-document errors; carries a source position."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, col {col}: {message}" if line else message)


class SdlSyntaxError(SdlError):
    """Tokenization or structure error; message names the expected token."""


class SdlSemanticError(SdlError):
    """Well-formed text with an invalid value; names the offending field."""

    def __init__(self, message: str, line: int = 0, col: int = 0, fieldname: str = ""):
        self.fieldname = fieldname
        super().__init__(message, line, col)


@dataclass(frozen=True)
class Property:
    """A named, typed scene parameter.

    dtype is one of scalar, integer, uniform-range, integer-array, boolean,
    enum. Range payloads are (low, high) with low <= high; integer-array
    payloads are non-empty tuples.
    """

    name: str
    dtype: str
    value: object

    def __post_init__(self):
        if self.dtype == "uniform-range":
            low, high = self.value  # type: ignore[misc]
            if low > high:
                raise SdlSemanticError(
                    f"range for '{self.name}' has low > high ({low} > {high})",
                    fieldname=self.name,
                )
        elif self.dtype == "integer-array":
            if not self.value:
                raise SdlSemanticError(
                    f"array for '{self.name}' is empty", fieldname=self.name
                )

    @property
    def is_range(self) -> bool:
        return self.dtype == "uniform-range"

    def bounds(self) -> tuple[float, float]:
        """Value range: (low, high) for ranges, (v, v) for literals."""
        if self.is_range:
            return tuple(self.value)  # type: ignore[return-value]
        v = float(self.value)  # type: ignore[arg-type]
        return (v, v)


@dataclass(frozen=True)
class Entity:
    """A named collection of properties with unique names."""

    name: str
    properties: tuple[Property, ...]

    def __post_init__(self):
        names = [p.name for p in self.properties]
        if len(names) != len(set(names)):
            raise SdlSemanticError(f"duplicate property names in entity '{self.name}'")

    def get(self, name: str) -> Property:
        for p in self.properties:
            if p.name == name:
                return p
        raise KeyError(name)


@dataclass(frozen=True)
class ConstraintSet:
    """Per-region-transition rate limits, in raw parameter units.

    Infinity means unconstrained (the default when no Constraints block is
    present).
    """

    weather_delta: float = math.inf
    traffic_delta: float = math.inf
    pedestrian_delta: float = math.inf

    def __post_init__(self):
        for name in ("weather_delta", "traffic_delta", "pedestrian_delta"):
            if getattr(self, name) < 0:
                raise SdlSemanticError(f"{name} must be >= 0", fieldname=name)

    def delta_for(self, param: str) -> float:
        if param == "traffic_density":
            return self.traffic_delta
        if param == "pedestrian_density":
            return self.pedestrian_delta
        return self.weather_delta


@dataclass(frozen=True)
class SceneSpecification:
    town: int = 5
    track: int = 1
    regions: int = 1
    weather: Entity = field(
        default_factory=lambda: Entity(
            "weather",
            (
                Property("cloudiness", "uniform-range", (0.0, 100.0)),
                Property("precipitation", "uniform-range", (0.0, 100.0)),
                Property("time_of_day", "uniform-range", (-90.0, 90.0)),
            ),
        )
    )
    pedestrian_density: Property = field(
        default_factory=lambda: Property("pedestrian_density", "uniform-range", (0.0, 3.0))
    )
    traffic_density: Property = field(
        default_factory=lambda: Property("traffic_density", "uniform-range", (0.0, 10.0))
    )
    constraints: ConstraintSet = field(default_factory=ConstraintSet)
    infraction_metrics: tuple[tuple[str, bool], ...] = field(
        default_factory=lambda: tuple((k, True) for k in INFRACTION_KINDS)
    )
    weights: tuple[tuple[str, float], ...] = ()
    record_frequency_hz: float = 5.0
    per_region_sampling: bool = False
    initial: tuple[tuple[str, float], ...] = ()
    source_digest: str = ""

    def __post_init__(self):
        if self.regions < 1:
            raise SdlSemanticError("regions must be >= 1", fieldname="regions")
        if self.record_frequency_hz <= 0:
            raise SdlSemanticError(
                "record_frequency must be > 0", fieldname="record_frequency"
            )

    def parameters(self) -> dict[str, Property]:
        """All five environment parameters in canonical order."""
        out: dict[str, Property] = {}
        for p in self.weather.properties:
            out[p.name] = p
        out["traffic_density"] = self.traffic_density
        out["pedestrian_density"] = self.pedestrian_density
        return {k: out[k] for k in CANONICAL_PARAMS}

    def metric_enabled(self) -> dict[str, bool]:
        return dict(self.infraction_metrics)


@dataclass(frozen=True)
class Sensor:
    kind: str
    pose: tuple[float, ...] = (0.0, 0.0, 0.0)
    rate_hz: float = 20.0

    def __post_init__(self):
        if self.rate_hz <= 0:
            raise SdlSemanticError("sensor rate must be > 0", fieldname="rate")


@dataclass(frozen=True)
class AgentSpecification:
    controller: str
    endpoint: str = ""
    sensors: tuple[Sensor, ...] = ()
    recorded_channels: tuple[str, ...] = ()
    source_digest: str = ""

    def __post_init__(self):
        if not self.controller:
            raise SdlSemanticError("controller must not be empty", fieldname="controller")


@dataclass(frozen=True)
class SamplerSpecification:
    sampler: str = "random"
    seed: int = 0
    budget: int = 100
    score_mode: str = "composite"
    sampler_options: tuple[tuple[str, object], ...] = ()
    source_digest: str = ""

    def __post_init__(self):
        if self.sampler not in VALID_SAMPLERS:
            raise SdlSemanticError(
                f"unknown sampler '{self.sampler}'; valid samplers: "
                + ", ".join(VALID_SAMPLERS),
                fieldname="sampler",
            )
        if self.budget < 1:
            raise SdlSemanticError("budget must be >= 1", fieldname="budget")
        if self.score_mode not in SCORE_MODES:
            raise SdlSemanticError(
                f"score must be one of {', '.join(SCORE_MODES)}", fieldname="score"
            )

    def options(self) -> dict[str, object]:
        return dict(self.sampler_options)


@dataclass(frozen=True)
class Finding:
    severity: str  # error | warning | info
    message: str
    source: str = ""


@dataclass
class ValidationReport:
    findings: list[Finding] = field(default_factory=list)

    def add(self, severity: str, message: str, source: str = "") -> None:
        self.findings.append(Finding(severity, message, source))

    @property
    def ok(self) -> bool:
        """True when the campaign may start (no error-severity findings)."""
        return not any(f.severity == "error" for f in self.findings)

    @property
    def empty(self) -> bool:
        return not self.findings

    def errors(self) -> list[Finding]:
        return [f for f in self.findings if f.severity == "error"]

    def warnings(self) -> list[Finding]:
        return [f for f in self.findings if f.severity == "warning"]
