"""Deterministic SVG 1.1 figures of a shape and its image."""

from __future__ import annotations

import math

from ..errors import InvalidArgument
from ..shapes import Circle, ExtLine, Region, Side

WIDTH_PX = 600

STYLE = """\
.original { stroke: #1f77b4; fill: none; }
.image { stroke: #d62728; fill: none; }
.unit { stroke: #888888; fill: none; stroke-dasharray: 4 3; }
.open { stroke-dasharray: 6 4; }
.fill-original { fill: #1f77b4; fill-opacity: 0.15; stroke: none; fill-rule: evenodd; }
.fill-image { fill: #d62728; fill-opacity: 0.15; stroke: none; fill-rule: evenodd; }
.puncture { fill: #ffffff; }
circle, line, path { stroke-width: 1.5; vector-effect: non-scaling-stroke; }"""


def _n(x: float) -> str:
    s = f"{x:.8g}"
    return "0" if s == "-0" else s


def _check_viewport(viewport):
    try:
        xmin, ymin, xmax, ymax = (float(v) for v in viewport)
    except (TypeError, ValueError):
        raise InvalidArgument("viewport must be four numbers") from None
    if not all(math.isfinite(v) for v in (xmin, ymin, xmax, ymax)) or xmax <= xmin or ymax <= ymin:
        raise InvalidArgument("viewport must have positive width and height")
    return xmin, ymin, xmax, ymax


def _corners(vp):
    xmin, ymin, xmax, ymax = vp
    return [complex(xmin, ymin), complex(xmax, ymin), complex(xmax, ymax), complex(xmin, ymax)]


def _circle_crosses(c: Circle, vp) -> bool:
    """True if the circle itself passes through the viewport rectangle."""
    xmin, ymin, xmax, ymax = vp
    nx = min(max(c.center.real, xmin), xmax)
    ny = min(max(c.center.imag, ymin), ymax)
    nearest = abs(complex(nx, ny) - c.center)
    farthest = max(abs(p - c.center) for p in _corners(vp))
    return nearest <= c.radius <= farthest


def _clip_halfplane(poly, line: ExtLine, sign: float):
    """Sutherland-Hodgman clip of a polygon to sign*(n.p - d) >= 0."""

    def f(p):
        return sign * (line.normal[0] * p.real + line.normal[1] * p.imag - line.offset)

    out = []
    for i, p in enumerate(poly):
        q = poly[(i + 1) % len(poly)]
        fp, fq = f(p), f(q)
        if fp >= 0:
            out.append(p)
        if (fp >= 0) != (fq >= 0):
            out.append(p + (q - p) * (fp / (fp - fq)))
    return out


def _line_segment(line: ExtLine, vp):
    """Endpoints of the line clipped to the viewport, or None."""
    xmin, ymin, xmax, ymax = vp
    base, u = line.foot, line.direction
    lo, hi = -math.inf, math.inf
    for b, du, a, z in ((base.real, u.real, xmin, xmax), (base.imag, u.imag, ymin, ymax)):
        if abs(du) < 1e-300:
            if not (a <= b <= z):
                return None
            continue
        t1, t2 = (a - b) / du, (z - b) / du
        lo, hi = max(lo, min(t1, t2)), min(hi, max(t1, t2))
    if lo > hi:
        return None
    return base + lo * u, base + hi * u


def _circle_path(c: Circle) -> str:
    x, y, r = c.center.real, c.center.imag, c.radius
    return (
        f"M {_n(x + r)} {_n(y)} A {_n(r)} {_n(r)} 0 1 0 {_n(x - r)} {_n(y)} "
        f"A {_n(r)} {_n(r)} 0 1 0 {_n(x + r)} {_n(y)} Z"
    )


def _poly_path(pts) -> str:
    return "M " + " L ".join(f"{_n(p.real)} {_n(p.imag)}" for p in pts) + " Z"


def _stroke(g, cls, vp, label):
    if isinstance(g, Circle):
        if not _circle_crosses(g, vp):
            return [f"<!-- warning: {label} circle lies outside the viewport -->"]
        return [f'<circle class="{cls}" cx="{_n(g.center.real)}" cy="{_n(g.center.imag)}" r="{_n(g.radius)}"/>']
    seg = _line_segment(g, vp)
    if seg is None:
        return [f"<!-- warning: {label} line lies outside the viewport -->"]
    p, q = seg
    return [f'<line class="{cls}" x1="{_n(p.real)}" y1="{_n(p.imag)}" x2="{_n(q.real)}" y2="{_n(q.imag)}"/>']


def _fill(r: Region, role, vp, label):
    g = r.boundary
    cls = f"fill-{role}"
    if isinstance(g, Circle):
        inside_rect = all(abs(p - g.center) < g.radius for p in _corners(vp))
        if r.side is Side.INSIDE:
            if not (_circle_crosses(g, vp) or inside_rect or _point_in(g.center, vp)):
                return [f"<!-- warning: {label} region lies outside the viewport -->"]
            return [f'<path class="{cls}" d="{_circle_path(g)}"/>']
        if inside_rect:
            return [f"<!-- warning: {label} region lies outside the viewport -->"]
        return [f'<path class="{cls}" d="{_poly_path(_corners(vp))} {_circle_path(g)}"/>']
    sign = 1.0 if r.side is Side.POSITIVE else -1.0
    poly = _clip_halfplane(_corners(vp), g, sign)
    if len(poly) < 3:
        return [f"<!-- warning: {label} region lies outside the viewport -->"]
    return [f'<path class="{cls}" d="{_poly_path(poly)}"/>']


def _point_in(p, vp):
    xmin, ymin, xmax, ymax = vp
    return xmin <= p.real <= xmax and ymin <= p.imag <= ymax


def _draw(shape, role, vp, marker):
    label = role
    if isinstance(shape, Region):
        out = _fill(shape, role, vp, label)
        cls = role if shape.closed else f"{role} open"
        out += _stroke(shape.boundary, cls, vp, label)
        for p in shape.punctures:
            if _point_in(p, vp):
                out.append(
                    f'<circle class="{role} puncture" cx="{_n(p.real)}" cy="{_n(p.imag)}" r="{_n(marker)}"/>'
                )
        if shape.contains_infinity:
            out.append(f"<!-- {label} region contains the point at infinity -->")
        return out
    return _stroke(shape, role, vp, label)


def emit_svg(original, image, viewport, unit_circle: bool = False) -> str:
    """SVG text showing ``original`` (blue) and ``image`` (red) in world coordinates."""
    vp = _check_viewport(viewport)
    xmin, ymin, xmax, ymax = vp
    w, h = xmax - xmin, ymax - ymin
    marker = 0.008 * max(w, h)
    body = []
    if unit_circle:
        body += _stroke(Circle(0j, 1.0), "unit", vp, "unit")
    body += _draw(original, "original", vp, marker)
    body += _draw(image, "image", vp, marker)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH_PX}" '
        f'height="{_n(WIDTH_PX * h / w)}" viewBox="{_n(xmin)} {_n(-ymax)} {_n(w)} {_n(h)}">',
        "<style>",
        STYLE,
        "</style>",
        "<defs>",
        f'<clipPath id="viewport"><rect x="{_n(xmin)}" y="{_n(ymin)}" width="{_n(w)}" height="{_n(h)}"/></clipPath>',
        "</defs>",
        '<g transform="scale(1,-1)" clip-path="url(#viewport)">',
        *body,
        "</g>",
        "</svg>",
    ]
    return "\n".join(lines) + "\n"
