"""Effective visibility of the synthetic perception stack.

The map encodes the failure drivers the harness is built around: rain and
cloud attenuate linearly, daylight is a piecewise-linear ramp that peaks at
midday (sun angle 90 deg) and bottoms out at dusk (0 deg) and below, and
tunnels halve whatever is left. Monotonically non-increasing in
precipitation and cloudiness.
"""

from __future__ import annotations

DUSK_FLOOR = 0.35
TUNNEL_FACTOR = 0.5
DUSK_BAND_DEG = 15.0  # |sun angle| below this counts as dusk


def daylight(time_of_day_deg: float) -> float:
    """Piecewise-linear daylight factor of the sun angle in degrees."""
    d = time_of_day_deg
    if d <= 0.0:
        return DUSK_FLOOR
    if d >= 90.0:
        return 1.0
    return DUSK_FLOOR + (1.0 - DUSK_FLOOR) * (d / 90.0)


def is_dusk(time_of_day_deg: float) -> bool:
    return abs(time_of_day_deg) < DUSK_BAND_DEG


def effective_visibility(env, in_tunnel: bool = False) -> float:
    """Visibility in [0,1] for the given environment conditions."""
    v = (
        (1.0 - 0.6 * env.precipitation / 100.0)
        * (1.0 - 0.2 * env.cloudiness / 100.0)
        * daylight(env.time_of_day)
    )
    if in_tunnel:
        v *= TUNNEL_FACTOR
    return v
