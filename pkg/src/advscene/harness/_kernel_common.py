"""Input/output structures shared by the pure-Python and compiled kernels.

Everything random is drawn before the kernel runs; a kernel is a pure
function of these inputs, and both backends must produce bit-identical
results (same float operations in the same order).
"""

from __future__ import annotations

from dataclasses import dataclass, field

FAR_FUTURE = 1e18

# infraction count indices (order = sdl.model.INFRACTION_KINDS)
IDX_COLLISION_PEDESTRIAN = 0
IDX_COLLISION_VEHICLE = 1
IDX_COLLISION_STATIC = 2
IDX_RED_LIGHT = 3
IDX_STOP_SIGN = 4
IDX_ROUTE_DEVIATION = 5
IDX_OFF_LANE = 6
IDX_OFF_ROAD = 7
IDX_TIMEOUT = 8

# hazard kinds
HAZ_LEAD_VEHICLE = 0
HAZ_PEDESTRIAN = 1
HAZ_STATIC = 2
HAZ_CROSS_VEHICLE = 3


@dataclass
class KernelInputs:
    # route polyline
    route_x: list[float]
    route_y: list[float]
    # stepping
    dt: float = 0.05
    max_steps: int = 800
    record_every: int = 4
    # vehicle
    wheelbase: float = 2.8
    max_steer: float = 0.6
    a_max: float = 3.0
    b_max: float = 6.0
    target_speed: float = 8.0
    k_steer: float = 1.8
    k_speed: float = 0.6
    lookahead: float = 8.0
    capture_radius: float = 2.5
    # environment-derived
    v_open: float = 1.0
    tunnel_s0: float = 1.0
    tunnel_s1: float = 0.0  # s0 > s1 means no tunnel
    tunnel_factor: float = 0.5
    round_s0: float = 1.0
    round_s1: float = 0.0
    round_speed: float = 5.0
    # controller profile
    vt: float = 0.0
    reaction_steps: int = 0
    panic: int = 0
    panic_duration: float = 4.5
    # hazards
    haz_kind: list[int] = field(default_factory=list)
    haz_s: list[float] = field(default_factory=list)
    haz_t0: list[float] = field(default_factory=list)
    haz_t1: list[float] = field(default_factory=list)
    # traffic lights (one red window each)
    light_s: list[float] = field(default_factory=list)
    light_r0: list[float] = field(default_factory=list)
    light_r1: list[float] = field(default_factory=list)
    light_miss: list[int] = field(default_factory=list)
    # stop signs
    sign_s: list[float] = field(default_factory=list)
    # interaction thresholds
    collide_radius: float = 2.0
    d_safe: float = 4.0
    sight_range: float = 40.0
    brake_eff: float = 0.8
    post_collision_hold: float = 1.0
    collision_kick: float = 0.25
    static_slow_zone: float = 15.0
    static_slow_speed: float = 3.0
    static_safe_speed: float = 3.5
    lane_half: float = 1.75
    road_half: float = 5.25
    route_dev: float = 9.0
    stop_eps: float = 0.01
    timeout_s: float = 3.0
    stopline_zone: float = 8.0
    hazard_zone: float = 15.0
    decision_dist: float = 12.0
    stop_at: float = 2.0
    red_sight: float = 35.0
    sign_zone: float = 8.0
    sign_cross_speed: float = 0.5
    sign_wait: float = 1.0


@dataclass
class KernelResult:
    counts: list[int]  # per infraction kind, canonical order
    best_s: float
    total_len: float
    captured: bool
    steps: int
    end_x: float
    end_y: float
    end_heading: float
    end_speed: float
    traj: list[tuple[float, float, float, float, float]]  # (t, x, y, heading, speed)
    aborted: str = ""  # "" | "protocol_error" | "diverged"
