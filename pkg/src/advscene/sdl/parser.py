"""Parsers for the scene, agent, and sampler specification documents.

Parsing is total: any input yields either a specification value or an
SdlError carrying a line/column position. Bytes are accepted and decoded
as UTF-8 with replacement, so arbitrary byte strings never raise anything
but SdlError.
"""

from __future__ import annotations

import hashlib
import math

from .lexer import Stmt, Value, tokenize
from .model import (
    CANONICAL_PARAMS,
    INFRACTION_KINDS,
    METRIC_GROUPS,
    AgentSpecification,
    ConstraintSet,
    Entity,
    Property,
    SamplerSpecification,
    SceneSpecification,
    SdlSemanticError,
    SdlSyntaxError,
    Sensor,
)

_WEATHER_KEYS = ("cloudiness", "precipitation", "time_of_day")

_SCENE_TOP = {
    "town",
    "track",
    "regions",
    "pedestrian_density",
    "traffic_density",
    "record_frequency",
    "per_region_sampling",
}
_SCENE_SECTIONS = {
    "weather": set(_WEATHER_KEYS),
    "constraints": {"weather_delta", "traffic_delta", "pedestrian_delta"},
    "infraction_metrics": set(METRIC_GROUPS) | set(INFRACTION_KINDS),
    "initial_conditions": set(CANONICAL_PARAMS),
}

_AGENT_TOP = {"controller", "endpoint", "record"}
_SENSOR_KEYS = {"kind", "pose", "rate"}

_SAMPLER_TOP = {"sampler", "seed", "budget", "score"}

# Per-sampler option keys: (python type, predicate, requirement text).
_OPTION_SCHEMA: dict[str, tuple[type, object, str]] = {
    "grid.resolution": (int, lambda v: v >= 1, ">= 1"),
    "rns.radius": (float, lambda v: 0 < v <= 1, "in (0, 1]"),
    "rns.threshold": (float, lambda v: v >= 0, ">= 0"),
    "rns.novelty": (float, lambda v: v >= 0, ">= 0"),
    "rns.retries": (int, lambda v: v >= 0, ">= 0"),
    "gbo.cold_start": (int, lambda v: v >= 1, ">= 1"),
    "gbo.length_scale": (float, lambda v: v > 0, "> 0"),
    "gbo.signal_variance": (float, lambda v: v > 0, "> 0"),
    "gbo.noise": (float, lambda v: v >= 0, ">= 0"),
    "gbo.candidates": (int, lambda v: v >= 1, ">= 1"),
    "gbo.standardize": (bool, lambda v: True, ""),
}

_OUTER_BLOCKS = {
    "scene": ("scenario_description", "scene_description"),
    "agent": ("agent_description",),
    "sampler": ("sampler_description",),
}


def _coerce_text(text: str | bytes) -> str:
    if isinstance(text, bytes):
        return text.decode("utf-8", errors="replace")
    return text


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _as_number(key: str, v: Value) -> float:
    if v.kind in ("int", "float", "freq"):
        x = float(v.data)  # type: ignore[arg-type]
        if not math.isfinite(x):
            raise SdlSemanticError(f"'{key}' must be finite", v.line, v.col, key)
        return x
    raise SdlSemanticError(f"'{key}' must be a number", v.line, v.col, key)


def _as_int(key: str, v: Value) -> int:
    if v.kind != "int":
        raise SdlSemanticError(f"'{key}' must be an integer", v.line, v.col, key)
    return int(v.data)  # type: ignore[arg-type]


def _as_bool(key: str, v: Value) -> bool:
    if v.kind != "bool":
        raise SdlSemanticError(f"'{key}' must be true or false", v.line, v.col, key)
    return bool(v.data)


def _as_ident(key: str, v: Value) -> str:
    if v.kind != "ident":
        raise SdlSemanticError(f"'{key}' must be an identifier", v.line, v.col, key)
    return str(v.data)


def _as_param(key: str, v: Value) -> Property:
    """A scene parameter: either a [low,high] range or a literal number."""
    if v.kind == "array":
        items = v.data  # type: ignore[assignment]
        if len(items) != 2 or not all(isinstance(x, (int, float)) for x in items):  # type: ignore[arg-type]
            raise SdlSemanticError(
                f"'{key}' must be a [low,high] range of two numbers", v.line, v.col, key
            )
        low, high = (float(items[0]), float(items[1]))  # type: ignore[index]
        if not (math.isfinite(low) and math.isfinite(high)):
            raise SdlSemanticError(f"'{key}' bounds must be finite", v.line, v.col, key)
        if low > high:
            raise SdlSemanticError(
                f"range for '{key}' has low > high ({low:g} > {high:g})",
                v.line,
                v.col,
                key,
            )
        return Property(key, "uniform-range", (low, high))
    if v.kind == "int":
        return Property(key, "integer", int(v.data))  # type: ignore[arg-type]
    if v.kind in ("float", "freq"):
        return Property(key, "scalar", _as_number(key, v))
    raise SdlSemanticError(
        f"'{key}' must be a [low,high] range or a number", v.line, v.col, key
    )


class _Walker:
    """Shared statement-walking state: one optional outer block, sections,
    at most one nested brace block at a time."""

    def __init__(self, stmts: list[Stmt], outer_names: tuple[str, ...], doc_kind: str):
        self.stmts = stmts
        self.outer_names = outer_names
        self.doc_kind = doc_kind
        self.outer_open = False
        self.outer_closed = False
        self.section: str | None = None
        self.seen: dict[str, Stmt] = {}

    def check_position(self, st: Stmt) -> None:
        if self.outer_closed:
            raise SdlSyntaxError("statement after closing '}'", st.line, st.col)

    def open_outer(self, st: Stmt) -> None:
        if self.outer_open or self.seen:
            raise SdlSyntaxError(
                f"unexpected block '{st.key}' (document already started)", st.line, st.col
            )
        self.outer_open = True

    def close(self, st: Stmt) -> None:
        if not self.outer_open:
            raise SdlSyntaxError("unmatched '}'", st.line, st.col)
        self.outer_closed = True
        self.section = None

    def finish(self) -> None:
        if self.outer_open and not self.outer_closed:
            raise SdlSyntaxError("missing closing '}' at end of document")

    def record(self, scoped_key: str, st: Stmt) -> None:
        if scoped_key in self.seen:
            first = self.seen[scoped_key]
            raise SdlSemanticError(
                f"duplicate key '{scoped_key}' (first set at line {first.line})",
                st.line,
                st.col,
                scoped_key,
            )
        self.seen[scoped_key] = st


def parse_scene_spec(text: str | bytes) -> SceneSpecification:
    """Parse a scene specification document."""
    src = _coerce_text(text)
    w = _Walker(tokenize(src), _OUTER_BLOCKS["scene"], "scene")

    values: dict[str, Value] = {}
    metric_stmts: list[tuple[str, bool]] = []  # in document order
    weights: list[tuple[str, float]] = []
    initial: list[tuple[str, float]] = []
    in_weights = False

    for st in w.stmts:
        w.check_position(st)
        if st.kind == "block_open":
            if st.key in w.outer_names:
                w.open_outer(st)
            elif st.key == "weights" and w.section == "infraction_metrics":
                in_weights = True
            else:
                raise SdlSyntaxError(f"unknown block '{st.key}'", st.line, st.col)
        elif st.kind == "block_close":
            if in_weights:
                in_weights = False
            else:
                w.close(st)
        elif st.kind == "section":
            if in_weights:
                raise SdlSyntaxError("sections are not allowed inside weights", st.line, st.col)
            if st.key in _SCENE_SECTIONS:
                w.section = st.key
            elif st.key in _SCENE_TOP:
                raise SdlSyntaxError(f"expected a value after '{st.key}:'", st.line, st.col)
            else:
                raise SdlSyntaxError(f"unknown block '{st.key}'", st.line, st.col)
        else:  # kv
            key, v = st.key, st.value
            assert v is not None
            if in_weights:
                if key not in INFRACTION_KINDS:
                    raise SdlSemanticError(
                        f"unknown infraction kind '{key}' in weights", st.line, st.col, key
                    )
                w.record(f"weights.{key}", st)
                x = _as_number(key, v)
                if x < 0:
                    raise SdlSemanticError(f"weight '{key}' must be >= 0", v.line, v.col, key)
                weights.append((key, x))
            elif w.section and key in _SCENE_SECTIONS[w.section]:
                scoped = f"{w.section}.{key}"
                w.record(scoped, st)
                if w.section == "weather":
                    values[scoped] = v
                elif w.section == "constraints":
                    x = _as_number(key, v)
                    if x < 0:
                        raise SdlSemanticError(f"'{key}' must be >= 0", v.line, v.col, key)
                    values[scoped] = v
                elif w.section == "infraction_metrics":
                    flag = _as_bool(key, v)
                    if key in METRIC_GROUPS:
                        metric_stmts.extend((k, flag) for k in METRIC_GROUPS[key])
                    else:
                        metric_stmts.append((key, flag))
                else:  # initial_conditions
                    initial.append((key, _as_number(key, v)))
            elif key in _SCENE_TOP:
                w.section = None
                w.record(key, st)
                values[key] = v
            elif key in _SCENE_SECTIONS["weather"]:
                # weather parameters are unambiguous, so they may appear
                # unsectioned; initial values must use their section header
                w.section = None
                w.record(f"weather.{key}", st)
                values[f"weather.{key}"] = v
            elif key in _SCENE_SECTIONS["constraints"]:
                w.section = None
                w.record(f"constraints.{key}", st)
                x = _as_number(key, v)
                if x < 0:
                    raise SdlSemanticError(f"'{key}' must be >= 0", v.line, v.col, key)
                values[f"constraints.{key}"] = v
            elif key in _SCENE_SECTIONS:
                raise SdlSyntaxError(
                    f"'{key}' is a section header and takes no value", st.line, st.col
                )
            else:
                where = f" in section '{w.section}'" if w.section else ""
                raise SdlSemanticError(f"unknown key '{key}'{where}", st.line, st.col, key)
    if in_weights:
        raise SdlSyntaxError("missing closing '}' for weights block")
    w.finish()

    defaults = SceneSpecification()
    weather_props = []
    for name in _WEATHER_KEYS:
        v = values.get(f"weather.{name}")
        weather_props.append(_as_param(name, v) if v else defaults.weather.get(name))

    def delta(name: str) -> float:
        v = values.get(f"constraints.{name}")
        return _as_number(name, v) if v else math.inf

    enabled = {k: True for k in INFRACTION_KINDS}
    for kind, flag in metric_stmts:
        enabled[kind] = flag

    rf = values.get("record_frequency")
    rf_hz = _as_number("record_frequency", rf) if rf else 5.0
    if rf_hz <= 0:
        raise SdlSemanticError(
            "record_frequency must be > 0",
            rf.line if rf else 0,
            rf.col if rf else 0,
            "record_frequency",
        )

    regions_v = values.get("regions")
    regions = _as_int("regions", regions_v) if regions_v else 1
    if regions < 1:
        raise SdlSemanticError(
            "regions must be >= 1",
            regions_v.line if regions_v else 0,
            regions_v.col if regions_v else 0,
            "regions",
        )

    initial.sort(key=lambda kv: CANONICAL_PARAMS.index(kv[0]))
    return SceneSpecification(
        town=_as_int("town", values["town"]) if "town" in values else 5,
        track=_as_int("track", values["track"]) if "track" in values else 1,
        regions=regions,
        weather=Entity("weather", tuple(weather_props)),
        pedestrian_density=(
            _as_param("pedestrian_density", values["pedestrian_density"])
            if "pedestrian_density" in values
            else defaults.pedestrian_density
        ),
        traffic_density=(
            _as_param("traffic_density", values["traffic_density"])
            if "traffic_density" in values
            else defaults.traffic_density
        ),
        constraints=ConstraintSet(
            weather_delta=delta("weather_delta"),
            traffic_delta=delta("traffic_delta"),
            pedestrian_delta=delta("pedestrian_delta"),
        ),
        infraction_metrics=tuple((k, enabled[k]) for k in INFRACTION_KINDS),
        weights=tuple(weights),
        record_frequency_hz=rf_hz,
        per_region_sampling=(
            _as_bool("per_region_sampling", values["per_region_sampling"])
            if "per_region_sampling" in values
            else False
        ),
        initial=tuple(initial),
        source_digest=_digest(src),
    )


def parse_agent_spec(text: str | bytes) -> AgentSpecification:
    """Parse an agent specification document."""
    src = _coerce_text(text)
    w = _Walker(tokenize(src), _OUTER_BLOCKS["agent"], "agent")

    controller = ""
    endpoint = ""
    channels: tuple[str, ...] = ()
    sensors: list[Sensor] = []
    sensor_fields: dict[str, Value] | None = None

    def close_sensor(line: int, col: int) -> None:
        nonlocal sensor_fields
        assert sensor_fields is not None
        if "kind" not in sensor_fields:
            raise SdlSemanticError("sensor block is missing 'kind'", line, col, "kind")
        kind = _as_ident("kind", sensor_fields["kind"])
        pose = (0.0, 0.0, 0.0)
        if "pose" in sensor_fields:
            pv = sensor_fields["pose"]
            if pv.kind != "array" or not all(isinstance(x, (int, float)) for x in pv.data):  # type: ignore[union-attr]
                raise SdlSemanticError("'pose' must be an array of numbers", pv.line, pv.col, "pose")
            pose = tuple(float(x) for x in pv.data)  # type: ignore[union-attr]
        rate = 20.0
        if "rate" in sensor_fields:
            rate = _as_number("rate", sensor_fields["rate"])
            if rate <= 0:
                rv = sensor_fields["rate"]
                raise SdlSemanticError("sensor rate must be > 0", rv.line, rv.col, "rate")
        sensors.append(Sensor(kind=kind, pose=pose, rate_hz=rate))
        sensor_fields = None

    for st in w.stmts:
        w.check_position(st)
        if st.kind == "block_open":
            if st.key in w.outer_names:
                w.open_outer(st)
            elif st.key == "sensor":
                if sensor_fields is not None:
                    raise SdlSyntaxError("sensor blocks cannot nest", st.line, st.col)
                sensor_fields = {}
            else:
                raise SdlSyntaxError(f"unknown block '{st.key}'", st.line, st.col)
        elif st.kind == "block_close":
            if sensor_fields is not None:
                close_sensor(st.line, st.col)
            else:
                w.close(st)
        elif st.kind == "section":
            raise SdlSyntaxError(f"unknown block '{st.key}'", st.line, st.col)
        else:
            key, v = st.key, st.value
            assert v is not None
            if sensor_fields is not None:
                if key not in _SENSOR_KEYS:
                    raise SdlSemanticError(
                        f"unknown key '{key}' in sensor block", st.line, st.col, key
                    )
                if key in sensor_fields:
                    raise SdlSemanticError(f"duplicate key '{key}' in sensor", st.line, st.col, key)
                sensor_fields[key] = v
            elif key in _AGENT_TOP:
                w.record(key, st)
                if key == "controller":
                    controller = _as_ident(key, v)
                elif key == "endpoint":
                    endpoint = _as_ident(key, v)
                else:
                    if v.kind != "array" or not all(isinstance(x, str) for x in v.data):  # type: ignore[union-attr]
                        raise SdlSemanticError(
                            "'record' must be an array of channel names", v.line, v.col, key
                        )
                    channels = tuple(v.data)  # type: ignore[arg-type]
            else:
                raise SdlSemanticError(f"unknown key '{key}'", st.line, st.col, key)
    if sensor_fields is not None:
        raise SdlSyntaxError("missing closing '}' for sensor block")
    w.finish()

    if not controller:
        raise SdlSemanticError("missing mandatory key 'controller'", fieldname="controller")
    return AgentSpecification(
        controller=controller,
        endpoint=endpoint,
        sensors=tuple(sensors),
        recorded_channels=channels,
        source_digest=_digest(src),
    )


def parse_sampler_spec(text: str | bytes) -> SamplerSpecification:
    """Parse a sampler specification document."""
    src = _coerce_text(text)
    w = _Walker(tokenize(src), _OUTER_BLOCKS["sampler"], "sampler")

    fields: dict[str, Value] = {}
    options: list[tuple[str, Value]] = []
    in_options = False

    for st in w.stmts:
        w.check_position(st)
        if st.kind == "block_open":
            if st.key in w.outer_names:
                w.open_outer(st)
            elif st.key == "options":
                in_options = True
            else:
                raise SdlSyntaxError(f"unknown block '{st.key}'", st.line, st.col)
        elif st.kind == "block_close":
            if in_options:
                in_options = False
            else:
                w.close(st)
        elif st.kind == "section":
            raise SdlSyntaxError(f"unknown block '{st.key}'", st.line, st.col)
        else:
            key, v = st.key, st.value
            assert v is not None
            if "." in key or in_options:
                w.record(f"options.{key}", st)
                options.append((key, v))
            elif key in _SAMPLER_TOP:
                w.record(key, st)
                fields[key] = v
            else:
                raise SdlSemanticError(f"unknown key '{key}'", st.line, st.col, key)
    if in_options:
        raise SdlSyntaxError("missing closing '}' for options block")
    w.finish()

    sampler = _as_ident("sampler", fields["sampler"]) if "sampler" in fields else "random"
    if sampler not in ("random", "grid", "halton", "rns", "gbo"):
        sv = fields.get("sampler")
        raise SdlSemanticError(
            f"unknown sampler '{sampler}'; valid samplers: random, grid, halton, rns, gbo",
            sv.line if sv else 0,
            sv.col if sv else 0,
            "sampler",
        )

    typed_options: list[tuple[str, object]] = []
    for key, v in options:
        if key not in _OPTION_SCHEMA:
            raise SdlSemanticError(f"unknown sampler option '{key}'", v.line, v.col, key)
        if key.split(".", 1)[0] != sampler:
            raise SdlSemanticError(
                f"option '{key}' is not valid for sampler '{sampler}'", v.line, v.col, key
            )
        want, pred, req = _OPTION_SCHEMA[key]
        if want is int:
            x: object = _as_int(key, v)
        elif want is float:
            x = _as_number(key, v)
        else:
            x = _as_bool(key, v)
        if not pred(x):  # type: ignore[operator]
            raise SdlSemanticError(f"option '{key}' must be {req}", v.line, v.col, key)
        typed_options.append((key, x))

    budget = _as_int("budget", fields["budget"]) if "budget" in fields else 100
    if budget < 1:
        bv = fields.get("budget")
        raise SdlSemanticError(
            "budget must be >= 1", bv.line if bv else 0, bv.col if bv else 0, "budget"
        )
    score = _as_ident("score", fields["score"]) if "score" in fields else "composite"
    if score not in ("composite", "weighted"):
        sv = fields["score"]
        raise SdlSemanticError(
            "score must be 'composite' or 'weighted'", sv.line, sv.col, "score"
        )
    return SamplerSpecification(
        sampler=sampler,
        seed=_as_int("seed", fields["seed"]) if "seed" in fields else 0,
        budget=budget,
        score_mode=score,
        sampler_options=tuple(typed_options),
        source_digest=_digest(src),
    )
