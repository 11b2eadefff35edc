"""Track fixtures: waypoint polylines, region partitions, landmarks.

Tracks have ten waypoints split into five regions of two waypoints each
(the flats fixture generalizes the region count). A region's drivable
route extends to the next region's first waypoint so routes can bend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

LANDMARK_KINDS = ("traffic_light", "stop_sign", "tunnel", "roundabout")


@dataclass(frozen=True)
class Landmark:
    kind: str
    position: tuple[float, float]
    extent: float = 0.0  # half-length along the route, meters

    def __post_init__(self):
        if self.kind not in LANDMARK_KINDS:
            raise ValueError(f"unknown landmark kind '{self.kind}'")
        if self.extent < 0:
            raise ValueError("extent must be >= 0")


@dataclass(frozen=True)
class Track:
    name: str
    waypoints: tuple[tuple[float, float], ...]
    region_starts: tuple[int, ...]  # waypoint index where each region begins
    landmarks: tuple[Landmark, ...] = ()

    def __post_init__(self):
        if len(self.waypoints) < 2:
            raise ValueError("a track needs at least 2 waypoints")
        if not self.region_starts or self.region_starts[0] != 0:
            raise ValueError("region_starts must begin at waypoint 0")
        if list(self.region_starts) != sorted(set(self.region_starts)):
            raise ValueError("region_starts must be strictly increasing")
        for i, start in enumerate(self.region_starts):
            end = (
                self.region_starts[i + 1]
                if i + 1 < len(self.region_starts)
                else len(self.waypoints)
            )
            if end - start < 2:
                raise ValueError(f"region {i} contains fewer than 2 waypoints")

    @property
    def region_count(self) -> int:
        return len(self.region_starts)

    def region_route(self, region: int) -> tuple[tuple[float, float], ...]:
        """Waypoints of the region's drivable polyline (shared endpoint with
        the next region)."""
        if not 0 <= region < self.region_count:
            raise IndexError(f"region {region} outside 0..{self.region_count - 1}")
        start = self.region_starts[region]
        if region + 1 < self.region_count:
            end = self.region_starts[region + 1] + 1
        else:
            end = len(self.waypoints)
        return self.waypoints[start:end]

    def region_length(self, region: int) -> float:
        route = self.region_route(region)
        return sum(
            math.dist(a, b) for a, b in zip(route, route[1:])
        )

    def region_landmarks(self, region: int) -> tuple[Landmark, ...]:
        """Landmarks whose position projects onto this region's route."""
        route = self.region_route(region)
        out = []
        for lm in self.landmarks:
            s, lateral = project_to_polyline(route, lm.position)
            if lateral <= 12.0 and 0.0 < s < polyline_length(route):
                out.append(lm)
        return tuple(out)


def polyline_length(route) -> float:
    return sum(math.dist(a, b) for a, b in zip(route, route[1:]))


def project_to_polyline(route, point) -> tuple[float, float]:
    """(arc position, lateral distance) of the closest point on the polyline."""
    px, py = point
    best_s, best_lat = 0.0, math.inf
    s_base = 0.0
    for (ax, ay), (bx, by) in zip(route, route[1:]):
        dx, dy = bx - ax, by - ay
        seg_len = math.sqrt(dx * dx + dy * dy)
        if seg_len == 0:
            continue
        t = ((px - ax) * dx + (py - ay) * dy) / (seg_len * seg_len)
        t = min(1.0, max(0.0, t))
        cx, cy = ax + t * dx, ay + t * dy
        lat = math.sqrt((px - cx) * (px - cx) + (py - cy) * (py - cy))
        if lat < best_lat:
            best_lat = lat
            best_s = s_base + t * seg_len
        s_base += seg_len
    return best_s, best_lat


def _point_along(route, s: float) -> tuple[float, float]:
    remaining = s
    for a, b in zip(route, route[1:]):
        seg = math.dist(a, b)
        if remaining <= seg:
            t = remaining / seg if seg else 0.0
            return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
        remaining -= seg
    return route[-1]


def _region_point(waypoints, region_starts, region: int, fraction: float):
    """Point at a fraction of a region's route; used to place landmarks."""
    track = Track("tmp", tuple(waypoints), tuple(region_starts))
    route = track.region_route(region)
    return _point_along(route, fraction * polyline_length(route))


def town3_track() -> Track:
    """Urban track: two traffic lights, a stop sign, a tunnel, a roundabout."""
    waypoints = (
        (0.0, 0.0),
        (60.0, 0.0),
        (120.0, 0.0),
        (180.0, 18.0),
        (240.0, 18.0),
        (300.0, 0.0),
        (360.0, 0.0),
        (420.0, 18.0),
        (480.0, 18.0),
        (540.0, 18.0),
    )
    starts = (0, 2, 4, 6, 8)
    lm = [
        Landmark("traffic_light", _region_point(waypoints, starts, 1, 0.55)),
        Landmark("tunnel", _region_point(waypoints, starts, 2, 0.5), extent=22.0),
        Landmark("stop_sign", _region_point(waypoints, starts, 3, 0.35)),
        Landmark("traffic_light", _region_point(waypoints, starts, 3, 0.75)),
        Landmark("roundabout", _region_point(waypoints, starts, 4, 0.5), extent=15.0),
    ]
    return Track("town3", waypoints, starts, tuple(lm))


def town5_track() -> Track:
    """Suburban track: shorter, one light, one stop sign, no tunnel."""
    waypoints = (
        (0.0, 0.0),
        (50.0, 0.0),
        (100.0, 0.0),
        (150.0, 12.0),
        (200.0, 12.0),
        (250.0, 0.0),
        (300.0, 0.0),
        (350.0, 0.0),
        (400.0, 12.0),
        (450.0, 12.0),
    )
    starts = (0, 2, 4, 6, 8)
    lm = [
        Landmark("traffic_light", _region_point(waypoints, starts, 1, 0.6)),
        Landmark("stop_sign", _region_point(waypoints, starts, 3, 0.5)),
    ]
    return Track("town5", waypoints, starts, tuple(lm))


def flats_track(regions: int = 5) -> Track:
    """Straight landmark-free track with a configurable region count."""
    if regions < 1:
        raise ValueError("regions must be >= 1")
    waypoints = tuple((60.0 * i, 0.0) for i in range(2 * regions))
    starts = tuple(2 * k for k in range(regions))
    return Track(f"flats{regions}", waypoints, starts)


def get_track(town: int, track: int = 1, regions: int | None = None) -> Track:
    """Fixture registry keyed by the scene specification's town/track ids."""
    if town == 3 and track == 1:
        return town3_track()
    if town == 5 and track == 1:
        return town5_track()
    if town == 0:
        return flats_track(regions or 5)
    raise KeyError(f"no track fixture for town={town}, track={track}")
