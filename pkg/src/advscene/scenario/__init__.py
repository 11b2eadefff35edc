"""Interpreter layer: search space, constraints, scene materialization."""

from .space import Dim, NothingToSampleError, SamplePoint, SearchSpace, partition_parameters
from .conditions import (
    EnvironmentConditions,
    PAPER_INITIAL_CONDITIONS,
    apply_constraints,
    initial_conditions,
)
from .materialize import (
    SceneInstance,
    materialize_scene,
    scene_duration,
    scene_from_json,
    scene_to_json,
)

__all__ = [
    "Dim",
    "NothingToSampleError",
    "SamplePoint",
    "SearchSpace",
    "partition_parameters",
    "EnvironmentConditions",
    "PAPER_INITIAL_CONDITIONS",
    "apply_constraints",
    "initial_conditions",
    "SceneInstance",
    "materialize_scene",
    "scene_duration",
    "scene_from_json",
    "scene_to_json",
]
