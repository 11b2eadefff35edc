"""Canonical serializers: byte-stable output, single space after colons.

parse(serialize(spec)) is structurally equal to spec for every valid
specification; comments and original whitespace are not preserved.
"""

from __future__ import annotations

import math

from .model import (
    AgentSpecification,
    Property,
    SamplerSpecification,
    SceneSpecification,
)


def _num(v: float) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    f = float(v)
    if f == int(f) and abs(f) < 1e15:
        return str(int(f))
    return repr(f)


def _param(p: Property) -> str:
    if p.is_range:
        low, high = p.value  # type: ignore[misc]
        return f"[{_num(low)},{_num(high)}]"
    return _num(p.value)  # type: ignore[arg-type]


def scene_to_text(spec: SceneSpecification) -> str:
    lines = ["Scenario Description{"]
    lines.append(f"    town: {spec.town}")
    lines.append(f"    track: {spec.track}")
    lines.append(f"    regions: {spec.regions}")
    lines.append("    weather:")
    for p in spec.weather.properties:
        lines.append(f"        {p.name}: {_param(p)}")
    lines.append(f"    pedestrian_density: {_param(spec.pedestrian_density)}")
    lines.append(f"    traffic_density: {_param(spec.traffic_density)}")
    deltas = [
        (n, getattr(spec.constraints, n))
        for n in ("weather_delta", "traffic_delta", "pedestrian_delta")
        if math.isfinite(getattr(spec.constraints, n))
    ]
    if deltas:
        lines.append("    constraints:")
        for name, v in deltas:
            lines.append(f"        {name}: {_num(v)}")
    lines.append("    infraction_metrics:")
    for kind, flag in spec.infraction_metrics:
        lines.append(f"        {kind}: {'true' if flag else 'false'}")
    if spec.weights:
        lines.append("        weights {")
        for kind, wv in spec.weights:
            lines.append(f"            {kind}: {_num(wv)}")
        lines.append("        }")
    if spec.initial:
        lines.append("    initial_conditions:")
        for name, v in spec.initial:
            lines.append(f"        {name}: {_num(v)}")
    lines.append(f"    record_frequency: {_num(spec.record_frequency_hz)}Hz")
    lines.append(
        f"    per_region_sampling: {'true' if spec.per_region_sampling else 'false'}"
    )
    lines.append("}")
    return "\n".join(lines) + "\n"


def agent_to_text(spec: AgentSpecification) -> str:
    lines = ["Agent Description{"]
    lines.append(f"    controller: {spec.controller}")
    if spec.endpoint:
        lines.append(f"    endpoint: {spec.endpoint}")
    for s in spec.sensors:
        lines.append("    sensor {")
        lines.append(f"        kind: {s.kind}")
        lines.append(f"        pose: [{','.join(_num(x) for x in s.pose)}]")
        lines.append(f"        rate: {_num(s.rate_hz)}Hz")
        lines.append("    }")
    if spec.recorded_channels:
        lines.append(f"    record: [{','.join(spec.recorded_channels)}]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def sampler_to_text(spec: SamplerSpecification) -> str:
    lines = ["Sampler Description{"]
    lines.append(f"    sampler: {spec.sampler}")
    lines.append(f"    seed: {spec.seed}")
    lines.append(f"    budget: {spec.budget}")
    lines.append(f"    score: {spec.score_mode}")
    if spec.sampler_options:
        lines.append("    options {")
        for key, v in spec.sampler_options:
            lines.append(f"        {key}: {_num(v)}")  # type: ignore[arg-type]
        lines.append("    }")
    lines.append("}")
    return "\n".join(lines) + "\n"
