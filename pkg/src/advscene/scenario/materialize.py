"""Turn sample points into executable scene instances."""

from __future__ import annotations

import json
from dataclasses import dataclass

from ..sdl.model import ConstraintSet, INTEGER_PARAMS
from .conditions import EnvironmentConditions, apply_constraints
from .space import SamplePoint, SearchSpace

SCENE_SCHEMA = "advscene-scene"
SCENE_SCHEMA_VERSION = 1

MIN_DURATION_S = 30.0
MAX_DURATION_S = 60.0
DEFAULT_TARGET_SPEED = 8.0  # m/s, cruise speed of the built-in vehicle

# headroom over the bare cruise time for braking, queued hazards, stop lines
_DURATION_SLACK_S = 30.0


def scene_duration(region_length_m: float, target_speed: float = DEFAULT_TARGET_SPEED) -> float:
    """Scene duration from region length and cruise speed, clamped to [30, 60] s."""
    base = region_length_m / target_speed + _DURATION_SLACK_S
    return min(MAX_DURATION_S, max(MIN_DURATION_S, base))


@dataclass(frozen=True)
class SceneInstance:
    """One executable test case: a region of the track under one environment."""

    scene_id: int
    region_index: int
    environment: EnvironmentConditions
    fixed_params: tuple[tuple[str, float], ...] = ()
    duration_s: float = 40.0

    def __post_init__(self):
        if not (MIN_DURATION_S <= self.duration_s <= MAX_DURATION_S):
            raise ValueError(f"duration {self.duration_s} outside [30, 60] s")
        if self.region_index < 0:
            raise ValueError("region_index must be >= 0")


def materialize_scene(
    point: SamplePoint,
    space: SearchSpace,
    fixed: dict[str, float],
    region: int,
    prev: EnvironmentConditions | None = None,
    constraints: ConstraintSet | None = None,
    scene_id: int = 0,
    duration_s: float | None = None,
) -> SceneInstance:
    """Denormalize, merge fixed parameters, constrain against prev, round.

    Integer dims are sampled continuously and rounded half-to-even at this
    point, after constraint clamping, so every sampler stays
    dimension-agnostic. Deterministic: equal inputs give equal scenes.
    """
    if region >= space.region_count:
        raise ValueError(f"region {region} outside 0..{space.region_count - 1}")
    values = space.denormalize(point)
    values.update(fixed)
    candidate = EnvironmentConditions.from_dict(values)
    env = apply_constraints(prev, candidate, constraints or ConstraintSet())
    rounded = {
        name: float(round(getattr(env, name))) for name in INTEGER_PARAMS
    }
    env = EnvironmentConditions.from_dict({**env.as_dict(), **rounded})
    return SceneInstance(
        scene_id=scene_id,
        region_index=region,
        environment=env,
        fixed_params=tuple(sorted(fixed.items())),
        duration_s=duration_s if duration_s is not None else 40.0,
    )


def scene_to_json(scene: SceneInstance) -> str:
    """Serialize one scene artifact (schema documented in docs/FORMATS.md)."""
    doc = {
        "schema": SCENE_SCHEMA,
        "schema_version": SCENE_SCHEMA_VERSION,
        "scene_id": scene.scene_id,
        "region": scene.region_index,
        "environment": scene.environment.as_dict(),
        "duration_s": scene.duration_s,
        "fixed": dict(scene.fixed_params),
    }
    return json.dumps(doc, separators=(", ", ": "))


def scene_from_json(text: str) -> SceneInstance:
    doc = json.loads(text)
    if doc.get("schema") != SCENE_SCHEMA:
        raise ValueError(f"not a scene artifact: schema={doc.get('schema')!r}")
    if doc.get("schema_version") != SCENE_SCHEMA_VERSION:
        raise ValueError(
            f"scene artifact schema version {doc.get('schema_version')} "
            f"(supported: {SCENE_SCHEMA_VERSION})"
        )
    return SceneInstance(
        scene_id=int(doc["scene_id"]),
        region_index=int(doc["region"]),
        environment=EnvironmentConditions.from_dict(doc["environment"]),
        fixed_params=tuple(sorted(doc.get("fixed", {}).items())),
        duration_s=float(doc["duration_s"]),
    )
