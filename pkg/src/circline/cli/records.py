"""JSON records for shapes, regions, maps and jobs."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Mapping

from ..errors import CirclineError, ParseError
from ..extplane import DEFAULT_TOL, INF, Tolerance
from ..moebius import INVERSION, MoebiusMap
from ..shapes import Circle, ExtLine, Region, Side

DEFAULT_SAMPLES = 1000
DEFAULT_SEED = 0
DEFAULT_VIEWPORT = (-4.0, -4.0, 4.0, 4.0)

_LINE_FORMS = ({"slope", "intercept"}, {"slope"}, {"vertical_x"}, {"normal", "offset"})
_REGION_KEYS = {"closed", "side", "contains_infinity", "punctures"}


def _load(text) -> Mapping:
    if isinstance(text, (str, bytes)):
        try:
            text = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError("", f"malformed JSON: {e}") from None
    if not isinstance(text, Mapping):
        raise ParseError("", "expected a JSON object")
    return text


def _join(path, key):
    return f"{path}.{key}" if path else str(key)


def _finite(v, path) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
        raise ParseError(path, f"expected a finite number, got {v!r}")
    return float(v)


def _num(obj, key, path, default=None) -> float:
    if key not in obj:
        if default is not None:
            return default
        raise ParseError(_join(path, key), "missing field")
    return _finite(obj[key], _join(path, key))


def _pair(v, path) -> tuple:
    if not isinstance(v, (list, tuple)) or len(v) != 2:
        raise ParseError(path, f"expected [x, y], got {v!r}")
    return _finite(v[0], f"{path}[0]"), _finite(v[1], f"{path}[1]")


def _field_pair(obj, key, path) -> tuple:
    if key not in obj:
        raise ParseError(_join(path, key), "missing field")
    return _pair(obj[key], _join(path, key))


def _bool(obj, key, path, default: bool) -> bool:
    v = obj.get(key, default)
    if not isinstance(v, bool):
        raise ParseError(_join(path, key), f"expected true or false, got {v!r}")
    return v


def _reject_unknown(obj, allowed, path):
    extra = sorted(set(obj) - set(allowed))
    if extra:
        raise ParseError(_join(path, extra[0]), "unknown field")


def _build(path, ctor, *args):
    try:
        return ctor(*args)
    except ParseError:
        raise
    except CirclineError as e:
        raise ParseError(path, str(e)) from None


def _parse_line(obj, path) -> ExtLine:
    keys = set(obj) & {"slope", "intercept", "vertical_x", "normal", "offset"}
    if keys not in _LINE_FORMS:
        raise ParseError(path, "a line needs slope[/intercept], vertical_x, or normal/offset")
    if "slope" in keys:
        return ExtLine.from_slope(_num(obj, "slope", path), _num(obj, "intercept", path, 0.0))
    if "vertical_x" in keys:
        return ExtLine.vertical(_num(obj, "vertical_x", path))
    nx, ny = _field_pair(obj, "normal", path)
    if nx == 0 and ny == 0:
        raise ParseError(_join(path, "normal"), "normal must be nonzero")
    return _build(path, ExtLine, (nx, ny), _num(obj, "offset", path))


def _parse_circle(obj, path) -> Circle:
    center = _field_pair(obj, "center", path)
    radius = _num(obj, "radius", path)
    if radius <= 0:
        raise ParseError(_join(path, "radius"), "radius must be positive")
    return Circle(complex(*center), radius)


def _parse_region(obj, path, boundary, sides) -> Region:
    side_name = obj.get("side", sides[0].value)
    if side_name not in [s.value for s in sides]:
        raise ParseError(_join(path, "side"), f"expected one of {[s.value for s in sides]}")
    side = Side(side_name)
    closed = _bool(obj, "closed", path, False)
    if isinstance(boundary, Circle):
        default_inf = side is Side.OUTSIDE
    else:
        default_inf = closed
    contains_infinity = _bool(obj, "contains_infinity", path, default_inf)
    raw = obj.get("punctures", [])
    if not isinstance(raw, list):
        raise ParseError(_join(path, "punctures"), "expected a list of [x, y] points")
    punctures = tuple(complex(*_pair(p, f"{_join(path, 'punctures')}[{i}]")) for i, p in enumerate(raw))
    return _build(path, Region, boundary, side, closed, contains_infinity, punctures)


def parse_shape(text, path: str = ""):
    """Parse a shape record into a Circle, ExtLine or Region."""
    obj = _load(text)
    kind = obj.get("type")
    if kind == "circle":
        _reject_unknown(obj, {"type", "center", "radius"}, path)
        return _parse_circle(obj, path)
    if kind == "line":
        _reject_unknown(obj, {"type", "slope", "intercept", "vertical_x", "normal", "offset"}, path)
        return _parse_line(obj, path)
    if kind == "disk":
        _reject_unknown(obj, {"type", "center", "radius"} | _REGION_KEYS, path)
        return _parse_region(obj, path, _parse_circle(obj, path), (Side.INSIDE, Side.OUTSIDE))
    if kind == "half_plane":
        allowed = {"type", "slope", "intercept", "vertical_x", "normal", "offset"} | _REGION_KEYS
        _reject_unknown(obj, allowed, path)
        return _parse_region(obj, path, _parse_line(obj, path), (Side.POSITIVE, Side.NEGATIVE))
    raise ParseError(_join(path, "type"), f"unknown shape type {kind!r}")


def _f(x: float) -> float:
    return float(x) + 0.0


def _xy(z: complex) -> list:
    return [_f(z.real), _f(z.imag)]


def shape_record(shape) -> dict:
    """Inverse of :func:`parse_shape`; lines are written in normal form."""
    if isinstance(shape, Circle):
        return {"type": "circle", "center": _xy(shape.center), "radius": _f(shape.radius)}
    if isinstance(shape, ExtLine):
        return {"type": "line", "normal": [_f(v) for v in shape.normal], "offset": _f(shape.offset)}
    if isinstance(shape, Region):
        rec = shape_record(shape.boundary)
        rec["type"] = "disk" if isinstance(shape.boundary, Circle) else "half_plane"
        rec.update(
            side=shape.side.value,
            closed=shape.closed,
            contains_infinity=shape.contains_infinity,
            punctures=[_xy(p) for p in shape.punctures],
        )
        return rec
    raise TypeError(f"cannot serialize {type(shape).__name__}")


def _num_text(x: float) -> str:
    return repr(_f(x))


def _square(var, v):
    if v == 0:
        return f"{var}^2"
    return f"({var} - {_num_text(v)})^2" if v > 0 else f"({var} + {_num_text(-v)})^2"


def describe(shape) -> str:
    """Equation or inequality in x, y."""
    if isinstance(shape, Circle):
        c = shape.center
        return f"{_square('x', c.real)} + {_square('y', c.imag)} = {_num_text(shape.radius)}^2"
    if isinstance(shape, ExtLine):
        nx, ny = shape.normal
        return f"{_num_text(nx)}*x + {_num_text(ny)}*y = {_num_text(shape.offset)}"
    rel = {
        (Side.INSIDE, False): "<",
        (Side.INSIDE, True): "<=",
        (Side.OUTSIDE, False): ">",
        (Side.OUTSIDE, True): ">=",
        (Side.POSITIVE, False): ">",
        (Side.POSITIVE, True): ">=",
        (Side.NEGATIVE, False): "<",
        (Side.NEGATIVE, True): "<=",
    }[(shape.side, shape.closed)]
    return describe(shape.boundary).replace(" = ", f" {rel} ", 1)


def parse_map(v, path="transform") -> MoebiusMap:
    if not isinstance(v, list) or len(v) != 4:
        raise ParseError(path, "expected four [re, im] coefficient pairs")
    coeffs = []
    for i, c in enumerate(v):
        if isinstance(c, (int, float)) and not isinstance(c, bool):
            c = [c, 0]
        re, im = _pair(c, f"{path}[{i}]")
        coeffs.append(complex(re, im))
    return _build(path, MoebiusMap, *coeffs)


def map_record(m: MoebiusMap) -> list:
    return [_xy(v) for v in (m.a, m.b, m.c, m.d)]


def point_record(p):
    return "inf" if p is INF else _xy(p)


def _parse_tol(v, path, base: Tolerance) -> Tolerance:
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return tol_from_scalar(float(v), base, path)
    if not isinstance(v, Mapping):
        raise ParseError(path, "expected a number or an object of tolerances")
    _reject_unknown(v, {"classify_tol", "residual_tol", "margin"}, path)
    kw = {k: _num(v, k, path) for k in v}
    merged = {"classify_tol": base.classify_tol, "residual_tol": base.residual_tol, "margin": base.margin, **kw}
    return _build(path, lambda: Tolerance(**merged))


def tol_from_scalar(t: float, base: Tolerance = DEFAULT_TOL, path: str = "tol") -> Tolerance:
    """A single tolerance sets both the classification band and the residual bound."""
    if not (t > 0 and math.isfinite(t)):
        raise ParseError(path, "tolerance must be positive")
    return _build(path, lambda: Tolerance(t, t, max(base.margin, t)))


@dataclass
class JobSpec:
    transform: MoebiusMap
    shape: Any
    predicted: Any = None
    tol: Tolerance = DEFAULT_TOL
    tol_given: bool = False
    samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    viewport: tuple = field(default=DEFAULT_VIEWPORT)


def _int(obj, key, path, minimum):
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int) or v < minimum:
        raise ParseError(_join(path, key), f"expected an integer >= {minimum}, got {v!r}")
    return v


def parse_viewport(v, path="options.viewport") -> tuple:
    if not isinstance(v, (list, tuple)) or len(v) != 4:
        raise ParseError(path, "expected [xmin, ymin, xmax, ymax]")
    vals = tuple(_finite(x, f"{path}[{i}]") for i, x in enumerate(v))
    if not (vals[2] > vals[0] and vals[3] > vals[1]):
        raise ParseError(path, "viewport must have positive width and height")
    return vals


def parse_job(text, base_tol: Tolerance = DEFAULT_TOL) -> JobSpec:
    """Parse {"transform": ..., "shape": ..., "predicted": ..., "options": {...}}.

    ``transform`` defaults to the inversion 1/z.
    """
    obj = _load(text)
    _reject_unknown(obj, {"transform", "shape", "predicted", "options"}, "")
    if "shape" not in obj:
        raise ParseError("shape", "missing field")
    job = JobSpec(
        transform=parse_map(obj["transform"]) if "transform" in obj else INVERSION,
        shape=parse_shape(_load_at(obj["shape"], "shape"), "shape"),
        tol=base_tol,
    )
    if "predicted" in obj:
        job.predicted = parse_shape(_load_at(obj["predicted"], "predicted"), "predicted")
        if isinstance(job.predicted, Region) != isinstance(job.shape, Region):
            raise ParseError("predicted", "must be the same kind (region or generalized circle) as shape")
    opts = obj.get("options", {})
    if not isinstance(opts, Mapping):
        raise ParseError("options", "expected an object")
    _reject_unknown(opts, {"tol", "samples", "seed", "viewport"}, "options")
    if "tol" in opts:
        job.tol = _parse_tol(opts["tol"], "options.tol", base_tol)
        job.tol_given = True
    if "samples" in opts:
        job.samples = _int(opts, "samples", "options", 1)
    if "seed" in opts:
        job.seed = _int(opts, "seed", "options", 0)
    if "viewport" in opts:
        job.viewport = parse_viewport(opts["viewport"])
    return job


def _load_at(v, path):
    if not isinstance(v, Mapping):
        raise ParseError(path, "expected a JSON object")
    return v
