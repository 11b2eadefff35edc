"""Scenario description language: grammar, parsers, validators, serializers."""

from .model import (
    AgentSpecification,
    ConstraintSet,
    Entity,
    Finding,
    Property,
    SamplerSpecification,
    SceneSpecification,
    SdlError,
    SdlSemanticError,
    SdlSyntaxError,
    Sensor,
    ValidationReport,
    CANONICAL_PARAMS,
    INFRACTION_KINDS,
    VALID_SAMPLERS,
)
from .parser import parse_agent_spec, parse_sampler_spec, parse_scene_spec
from .serialize import agent_to_text, sampler_to_text, scene_to_text
from .crosscheck import validate_cross

__all__ = [
    "AgentSpecification",
    "ConstraintSet",
    "Entity",
    "Finding",
    "Property",
    "SamplerSpecification",
    "SceneSpecification",
    "SdlError",
    "SdlSemanticError",
    "SdlSyntaxError",
    "Sensor",
    "ValidationReport",
    "CANONICAL_PARAMS",
    "INFRACTION_KINDS",
    "VALID_SAMPLERS",
    "parse_agent_spec",
    "parse_sampler_spec",
    "parse_scene_spec",
    "agent_to_text",
    "sampler_to_text",
    "scene_to_text",
    "validate_cross",
]
