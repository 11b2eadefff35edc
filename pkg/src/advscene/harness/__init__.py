"""Scene execution: built-in kinematic simulator, synthetic controllers,
infraction detection, and the external-simulator wire adapter."""

from .visibility import daylight, effective_visibility, is_dusk
from .track import Landmark, Track, get_track, flats_track, town3_track, town5_track
from .controllers import (
    CONTROLLER_PRESETS,
    ControllerHandle,
    SyntheticControllerProfile,
    resolve_controller,
    synthetic_control,
)
from .engine import EngineParams, VehicleState, run_scene, step
from .adapter import (
    AdapterError,
    HandshakeError,
    ProtocolError,
    StepRequest,
    StepResponse,
    WireAdapter,
    PROTOCOL_VERSION,
)
from .backend import backend_name, kernel_available

__all__ = [
    "AdapterError",
    "CONTROLLER_PRESETS",
    "ControllerHandle",
    "EngineParams",
    "HandshakeError",
    "Landmark",
    "PROTOCOL_VERSION",
    "ProtocolError",
    "StepRequest",
    "StepResponse",
    "SyntheticControllerProfile",
    "Track",
    "VehicleState",
    "WireAdapter",
    "backend_name",
    "daylight",
    "effective_visibility",
    "flats_track",
    "get_track",
    "is_dusk",
    "kernel_available",
    "resolve_controller",
    "run_scene",
    "step",
    "synthetic_control",
    "town3_track",
    "town5_track",
]
