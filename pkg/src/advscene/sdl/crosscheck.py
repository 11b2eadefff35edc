"""Cross-document consistency checks over a (scene, agent, sampler) trio.

All findings are report entries with a severity; validate_cross never
raises. An empty report means the campaign may start without caveats.
"""

from __future__ import annotations

from .model import (
    AgentSpecification,
    SamplerSpecification,
    SceneSpecification,
    ValidationReport,
)

# Built-in synthetic controller presets; kept in sync with harness.controllers
# by a test so sdl does not import the harness.
BUILTIN_CONTROLLERS = ("robust", "lbc_like", "transfuser_like")


def default_grid_resolution(budget: int, dims: int) -> int:
    """Largest per-dim resolution whose lattice fits within the budget."""
    r = 1
    while (r + 1) ** dims <= budget:
        r += 1
    return r


def validate_cross(
    scene: SceneSpecification,
    agent: AgentSpecification,
    sampler: SamplerSpecification,
) -> ValidationReport:
    report = ValidationReport()
    params = scene.parameters()
    dims = sum(1 for p in params.values() if p.is_range)

    if dims == 0:
        report.add(
            "error",
            "no parameter has a range: nothing to sample, the campaign would be "
            "a single fixed test",
            "scene",
        )

    if sampler.sampler == "grid" and dims > 0:
        opts = sampler.options()
        res = int(opts.get("grid.resolution", default_grid_resolution(sampler.budget, dims)))
        cells = res**dims
        if sampler.budget > cells:
            report.add(
                "warning",
                f"budget {sampler.budget} exceeds the grid size {cells} "
                f"({res}^{dims}); proposals beyond the grid wrap around",
                "sampler",
            )
        elif sampler.budget < cells:
            report.add(
                "info",
                f"budget {sampler.budget} covers only part of the {cells}-cell grid "
                f"({res}^{dims}); coverage will not be exhaustive",
                "sampler",
            )

    if sampler.sampler in ("rns", "gbo") and sampler.budget == 1:
        report.add(
            "warning",
            f"budget 1 gives the feedback sampler '{sampler.sampler}' nothing to "
            "learn from; it degenerates to random sampling",
            "sampler",
        )

    if agent.controller == "external":
        if not agent.endpoint:
            report.add("error", "external controller requires an 'endpoint'", "agent")
    elif agent.controller not in BUILTIN_CONTROLLERS:
        report.add(
            "error",
            f"unknown controller '{agent.controller}'; built-in presets: "
            + ", ".join(BUILTIN_CONTROLLERS)
            + ", or 'external' with an endpoint",
            "agent",
        )

    for name, value in spec_initial_violations(scene):
        report.add("error", f"initial value {name}={value:g} is outside its declared range", "scene")

    return report


def spec_initial_violations(scene: SceneSpecification) -> list[tuple[str, float]]:
    """Initial-condition overrides that fall outside their declared ranges."""
    params = scene.parameters()
    bad = []
    for name, value in scene.initial:
        low, high = params[name].bounds()
        if not (low <= value <= high):
            bad.append((name, value))
    return bad
