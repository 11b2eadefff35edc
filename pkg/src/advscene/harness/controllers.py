"""Synthetic controller profiles and the controller handle.

The two named presets stand in for learned controllers with analytically
known failure envelopes: `lbc_like` is blind below a visibility threshold
(collisions in rain, at dusk, in tunnels) and misses red lights at dusk;
`transfuser_like` sees through weather but panic-brakes in tunnels, so its
failures are dominated by timeouts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .visibility import is_dusk


@dataclass(frozen=True)
class SyntheticControllerProfile:
    visibility_tolerance: float = 0.0  # hazards unseen while v < this
    reaction_steps: int = 0  # extra steps before reacting to a seen hazard
    red_light_miss_prob_at_dusk: float = 0.0
    tunnel_fragility: float = 0.0  # per-scene panic-brake probability in tunnels

    def __post_init__(self):
        if not 0.0 <= self.visibility_tolerance <= 1.0:
            raise ValueError("visibility_tolerance must be in [0,1]")
        if self.reaction_steps < 0:
            raise ValueError("reaction_steps must be >= 0")
        for name in ("red_light_miss_prob_at_dusk", "tunnel_fragility"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} must be in [0,1]")

    def sees(self, visibility: float) -> bool:
        return visibility >= self.visibility_tolerance


CONTROLLER_PRESETS: dict[str, SyntheticControllerProfile] = {
    "robust": SyntheticControllerProfile(),
    "lbc_like": SyntheticControllerProfile(
        visibility_tolerance=0.25,
        reaction_steps=3,
        red_light_miss_prob_at_dusk=0.5,
        tunnel_fragility=0.0,
    ),
    "transfuser_like": SyntheticControllerProfile(
        visibility_tolerance=0.02,
        reaction_steps=1,
        red_light_miss_prob_at_dusk=0.25,
        tunnel_fragility=0.85,
    ),
}


@dataclass(frozen=True)
class ControllerHandle:
    """Exactly one backing kind: a built-in profile or an external endpoint."""

    kind: str  # synthetic | external
    name: str = ""
    profile: SyntheticControllerProfile | None = None
    endpoint: str = ""

    def __post_init__(self):
        if self.kind == "synthetic":
            if self.profile is None or self.endpoint:
                raise ValueError("synthetic handle needs a profile and no endpoint")
        elif self.kind == "external":
            if not self.endpoint or self.profile is not None:
                raise ValueError("external handle needs an endpoint and no profile")
        else:
            raise ValueError(f"unknown controller kind '{self.kind}'")

    @classmethod
    def synthetic(cls, name: str, profile: SyntheticControllerProfile) -> "ControllerHandle":
        return cls(kind="synthetic", name=name, profile=profile)

    @classmethod
    def external(cls, endpoint: str, name: str = "external") -> "ControllerHandle":
        return cls(kind="external", name=name, endpoint=endpoint)


def resolve_controller(name: str, endpoint: str = "") -> ControllerHandle:
    """Map an agent specification's controller/endpoint onto a handle."""
    if name == "external":
        if not endpoint:
            raise ValueError("external controller requires an endpoint")
        return ControllerHandle.external(endpoint)
    if name in CONTROLLER_PRESETS:
        return ControllerHandle.synthetic(name, CONTROLLER_PRESETS[name])
    raise KeyError(
        f"unknown controller '{name}'; presets: {', '.join(CONTROLLER_PRESETS)}, "
        "or 'external'"
    )


def synthetic_control(profile: SyntheticControllerProfile, observation: dict, rng=None) -> dict:
    """One control decision from a flat observation.

    Mirrors the in-kernel controller for hand-testable single steps:
    brake for a hazard only when it is visible (v >= tolerance) and has
    been seen long enough; otherwise steer proportionally toward the
    route and hold cruise speed. The rng draws the red-light miss when a
    dusk red light first enters the decision.
    """
    for key, value in observation.items():
        if isinstance(value, (int, float)) and value != value:  # NaN
            raise ValueError(f"non-finite observation field '{key}'")
    v = observation["visibility"]
    dist = observation.get("distance_to_hazard")
    seen_steps = observation.get("seen_steps", profile.reaction_steps)
    heading_error = observation.get("heading_error", 0.0)
    speed = observation.get("speed", 0.0)
    target = observation.get("target_speed", 8.0)

    steer = max(-0.6, min(0.6, 1.8 * heading_error))
    throttle = max(0.0, min(1.0, 0.6 * (target - speed)))
    brake = 0.0

    red_ahead = observation.get("red_light_ahead", False)
    if red_ahead:
        miss = False
        if is_dusk(observation.get("time_of_day", 90.0)) and rng is not None:
            miss = rng.next_float() < profile.red_light_miss_prob_at_dusk
        if not miss:
            throttle, brake = 0.0, 1.0

    if dist is not None and profile.sees(v) and seen_steps >= profile.reaction_steps:
        stopping = speed * speed / (2.0 * 6.0 * 0.8)
        if dist - 4.0 <= stopping + 0.5:
            throttle, brake = 0.0, 1.0
    return {"throttle": throttle, "brake": brake, "steer": steer}
