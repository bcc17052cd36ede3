"""Generalized circles, regions of the Riemann sphere, and predicates on them."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import DegenerateRegionError, InvalidArgument
from .extplane import DEFAULT_TOL, INF, ExtComplex, Tolerance, approx_eq, as_ext


# loose band so that punctures computed under a caller's tolerance validate
_VALIDATE_TOL = Tolerance(classify_tol=1e-6)


class Side(enum.Enum):
    """Where a point sits relative to a generalized circle.

    INSIDE/OUTSIDE refer to circles, POSITIVE/NEGATIVE to lines (relative to the
    line normal). ON is only used for incidence, never as a region side.
    """

    INSIDE = "inside"
    OUTSIDE = "outside"
    POSITIVE = "positive"
    NEGATIVE = "negative"
    ON = "on"

    def flipped(self) -> "Side":
        return _FLIP[self]


_FLIP = {
    Side.INSIDE: Side.OUTSIDE,
    Side.OUTSIDE: Side.INSIDE,
    Side.POSITIVE: Side.NEGATIVE,
    Side.NEGATIVE: Side.POSITIVE,
    Side.ON: Side.ON,
}


@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float

    def __post_init__(self):
        c = as_ext(self.center)
        if c is INF:
            raise InvalidArgument("circle center must be finite")
        object.__setattr__(self, "center", complex(c.real + 0.0, c.imag + 0.0))
        r = float(self.radius)
        if not (r > 0 and math.isfinite(r)):
            raise InvalidArgument("radius must be positive")
        object.__setattr__(self, "radius", r)


@dataclass(frozen=True)
class ExtLine:
    """The line nx*x + ny*y = offset together with the point at infinity.

    The normal is rescaled to unit length on construction.
    """

    normal: tuple
    offset: float

    def __post_init__(self):
        nx, ny = (float(v) for v in self.normal)
        d = float(self.offset)
        if not all(math.isfinite(v) for v in (nx, ny, d)):
            raise InvalidArgument("line coefficients must be finite")
        norm = math.hypot(nx, ny)
        if norm == 0:
            raise InvalidArgument("normal must be nonzero")
        if abs(norm - 1.0) > 1e-12:
            nx, ny, d = nx / norm, ny / norm, d / norm
        # + 0.0 folds negative zeros
        object.__setattr__(self, "normal", (nx + 0.0, ny + 0.0))
        object.__setattr__(self, "offset", d + 0.0)

    @classmethod
    def from_slope(cls, slope: float, intercept: float) -> "ExtLine":
        """y = slope*x + intercept."""
        return cls((-float(slope), 1.0), float(intercept))

    @classmethod
    def vertical(cls, x: float) -> "ExtLine":
        return cls((1.0, 0.0), float(x))

    @classmethod
    def through(cls, p: complex, q: complex) -> "ExtLine":
        """Line through p and q, normal pointing left of the direction p -> q."""
        t = complex(q) - complex(p)
        if t == 0:
            raise InvalidArgument("two distinct points required")
        n = 1j * t / abs(t)
        return cls((n.real, n.imag), n.real * p.real + n.imag * p.imag)

    @property
    def n(self) -> complex:
        return complex(*self.normal)

    @property
    def foot(self) -> complex:
        """Point of the line closest to the origin."""
        return self.offset * self.n

    @property
    def direction(self) -> complex:
        return 1j * self.n

    def flipped(self) -> "ExtLine":
        return ExtLine((-self.normal[0], -self.normal[1]), -self.offset)

    def is_canonical(self) -> bool:
        nx, ny = self.normal
        if self.offset != 0:
            return self.offset > 0
        return nx > 0 or (nx == 0 and ny > 0)

    def canonical(self) -> "ExtLine":
        """Orientation with offset > 0, or a normal pointing right/up when offset is 0."""
        return self if self.is_canonical() else self.flipped()


GeneralizedCircle = Union[Circle, ExtLine]


def _check_gcircle(g):
    if not isinstance(g, (Circle, ExtLine)):
        raise InvalidArgument(f"generalized circle expected, got {type(g).__name__}")


@dataclass(frozen=True)
class Incidence:
    """Classification of a point against a generalized circle.

    ``signed`` is R^2 - |p - center|^2 for circles (positive inside) and
    n.p - offset for lines (positive on the normal side).
    """

    tag: Side
    signed: float


def _dot(n: complex, p: complex) -> float:
    return n.real * p.real + n.imag * p.imag


def classify_point(g: GeneralizedCircle, p: complex, tol: Tolerance = DEFAULT_TOL) -> Incidence:
    p = complex(p)
    if isinstance(g, Circle):
        dz = p - g.center
        dist2 = dz.real * dz.real + dz.imag * dz.imag
        r2 = g.radius * g.radius
        s = r2 - dist2
        band = tol.classify_tol * max(1.0, r2, dist2)
        if abs(s) <= band:
            return Incidence(Side.ON, s)
        return Incidence(Side.INSIDE if s > 0 else Side.OUTSIDE, s)
    _check_gcircle(g)
    np_ = _dot(g.n, p)
    s = np_ - g.offset
    band = tol.classify_tol * max(1.0, abs(g.offset), abs(np_))
    if abs(s) <= band:
        return Incidence(Side.ON, s)
    return Incidence(Side.POSITIVE if s > 0 else Side.NEGATIVE, s)


def classify_origin(g: GeneralizedCircle, tol: Tolerance = DEFAULT_TOL) -> Incidence:
    """Where 0 lies relative to g.

    For a circle the signed value is the discriminant s = R^2 - |center|^2.
    """
    return classify_point(g, 0j, tol)


def signed_distance(g: GeneralizedCircle, p: complex) -> float:
    """Euclidean signed distance: positive outside a circle / on the normal side of a line."""
    p = complex(p)
    if isinstance(g, Circle):
        return abs(p - g.center) - g.radius
    return _dot(g.n, p) - g.offset


def boundary_residual(g: GeneralizedCircle, p: complex) -> float:
    """Relative distance of a finite point from g."""
    p = complex(p)
    if isinstance(g, Circle):
        return abs(abs(p - g.center) - g.radius) / max(1.0, g.radius, abs(p))
    return abs(_dot(g.n, p) - g.offset) / max(1.0, abs(p), abs(g.offset))


def on_gcircle(g: GeneralizedCircle, p: ExtComplex, tol: Tolerance = DEFAULT_TOL) -> bool:
    if p is INF:
        return isinstance(g, ExtLine)
    return classify_point(g, p, tol).tag is Side.ON


@dataclass(frozen=True)
class Region:
    """One side of a generalized circle on the Riemann sphere.

    The point set is {p finite : p on ``side`` of ``boundary`` (boundary
    included iff ``closed``)} minus ``punctures``, plus infinity iff
    ``contains_infinity``.
    """

    boundary: GeneralizedCircle
    side: Side
    closed: bool = False
    contains_infinity: bool = False
    punctures: tuple = field(default=())

    def __post_init__(self):
        _check_gcircle(self.boundary)
        side = Side(self.side)
        object.__setattr__(self, "side", side)
        object.__setattr__(self, "closed", bool(self.closed))
        object.__setattr__(self, "contains_infinity", bool(self.contains_infinity))
        if isinstance(self.boundary, Circle):
            if side not in (Side.INSIDE, Side.OUTSIDE):
                raise InvalidArgument("circle regions have side inside or outside")
            if side is Side.INSIDE and self.contains_infinity:
                raise InvalidArgument("a disk cannot contain infinity")
        else:
            if side not in (Side.POSITIVE, Side.NEGATIVE):
                raise InvalidArgument("half-planes have side positive or negative")
            if self.contains_infinity and not self.closed:
                # infinity lies on the boundary line; an open half-plane plus one
                # boundary point is not representable
                raise InvalidArgument("an open half-plane cannot contain infinity")
        pts = []
        for q in self.punctures:
            q = as_ext(q)
            if q is INF:
                raise InvalidArgument("puncture at infinity: set contains_infinity=False instead")
            if _base_incidence(self, q, _VALIDATE_TOL) == "out":
                raise InvalidArgument(f"puncture {q} lies outside the region")
            if not any(q == p for p in pts):
                pts.append(q)
        pts.sort(key=lambda z: (z.real, z.imag))
        object.__setattr__(self, "punctures", tuple(pts))

    @property
    def is_disk(self) -> bool:
        return isinstance(self.boundary, Circle) and self.side is Side.INSIDE

    def canonical(self) -> "Region":
        """Same set, with a half-plane boundary in canonical orientation."""
        g = self.boundary
        if isinstance(g, ExtLine) and not g.is_canonical():
            return self.replace(boundary=g.flipped(), side=self.side.flipped())
        return self

    def replace(self, **kw) -> "Region":
        args = dict(
            boundary=self.boundary,
            side=self.side,
            closed=self.closed,
            contains_infinity=self.contains_infinity,
            punctures=self.punctures,
        )
        args.update(kw)
        return Region(**args)


def disk(center, radius, closed=False) -> Region:
    return Region(Circle(center, radius), Side.INSIDE, closed=closed)


def disk_complement(center, radius, closed=False, contains_infinity=True, punctures=()) -> Region:
    """Exterior of a circle; open unless ``closed`` (boundary circle included)."""
    return Region(Circle(center, radius), Side.OUTSIDE, closed, contains_infinity, tuple(punctures))


def half_plane(line: ExtLine, side=Side.POSITIVE, closed=False, contains_infinity=None, punctures=()) -> Region:
    """Half-plane on ``side`` of ``line``.

    By default a closed half-plane is its closure on the sphere (it contains
    infinity) and an open one does not.
    """
    if contains_infinity is None:
        contains_infinity = closed
    return Region(line, side, closed, contains_infinity, tuple(punctures))


def _base_incidence(r: Region, p: complex, tol: Tolerance) -> str:
    """'in', 'on' or 'out' for a finite p, ignoring punctures and closedness."""
    tag = classify_point(r.boundary, p, tol).tag
    if tag is Side.ON:
        return "on"
    return "in" if tag is r.side else "out"


def in_base(r: Region, p: complex, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Membership of a finite point in r before punctures are removed."""
    where = _base_incidence(r, p, tol)
    return where == "in" or (where == "on" and r.closed)


def is_punctured_at(r: Region, p: complex, tol: Tolerance = DEFAULT_TOL) -> bool:
    return any(approx_eq(p, q, tol) for q in r.punctures)


def contains(r: Region, p: ExtComplex, tol: Tolerance = DEFAULT_TOL) -> bool:
    if p is INF:
        return r.contains_infinity
    p = complex(p)
    if is_punctured_at(r, p, tol):
        return False
    return in_base(r, p, tol)


def effective_punctures(r: Region, tol: Tolerance = DEFAULT_TOL) -> tuple:
    """Punctures that actually remove a point (drops ones on an open boundary)."""
    return tuple(q for q in r.punctures if in_base(r, q, tol))


def _uniform_offsets(rng, n, grid, grid_offset):
    if grid:
        return np.full(n, grid_offset)
    return rng.random(n)


LINE_SAMPLE_HALF_WIDTH = 1e3


def sample_boundary(g: GeneralizedCircle, n: int, seed: int = 0, grid: bool = False) -> list:
    """n finite points on g, stratified (or evenly spaced when ``grid``).

    Circles are sampled by angle over [0, 2pi); lines by the parameter t of
    foot + t*direction over [-1000, 1000].
    """
    _check_gcircle(g)
    if n < 1:
        raise InvalidArgument("n must be at least 1")
    rng = np.random.default_rng(seed)
    k = np.arange(n)
    if isinstance(g, Circle):
        phi = 2 * np.pi * (k + _uniform_offsets(rng, n, grid, 0.0)) / n
        pts = g.center + g.radius * np.exp(1j * phi)
    else:
        T = LINE_SAMPLE_HALF_WIDTH
        t = -T + 2 * T * (k + _uniform_offsets(rng, n, grid, 0.5)) / n
        pts = g.foot + t * g.direction
    return [complex(z) for z in pts]


# proposal shape for unbounded regions: Pareto-like tail truncated at this many scales
_TAIL_CAP = 1e2
_MAX_ROUNDS = 50


def _heavy_tail(rng, size):
    u = 1.0 - rng.random(size)  # (0, 1]
    return np.minimum(1.0 / u - 1.0, _TAIL_CAP)


def _propose(r: Region, rng, size, margin):
    g = r.boundary
    if isinstance(g, Circle):
        ang = rng.uniform(0, 2 * np.pi, size)
        if r.side is Side.INSIDE:
            rho = (g.radius - margin) * np.sqrt(rng.random(size))
        else:
            rho = g.radius + margin + max(1.0, g.radius) * _heavy_tail(rng, size)
        return g.center + rho * np.exp(1j * ang)
    scale = max(1.0, abs(g.offset))
    sign = 1.0 if r.side is Side.POSITIVE else -1.0
    t = np.clip(rng.standard_cauchy(size), -_TAIL_CAP, _TAIL_CAP) * scale
    h = margin + scale * _heavy_tail(rng, size)
    return g.foot + sign * h * g.n + t * g.direction


def sample_region(r: Region, n: int, seed: int = 0, tol: Tolerance = DEFAULT_TOL) -> list:
    """n finite points at least ``tol.margin`` inside r and away from its punctures."""
    if n < 1:
        raise InvalidArgument("n must be at least 1")
    margin = tol.margin
    g = r.boundary
    if isinstance(g, Circle) and r.side is Side.INSIDE and g.radius <= 2 * margin:
        raise DegenerateRegionError(f"disk of radius {g.radius} is thinner than the sampling margin")
    rng = np.random.default_rng(seed)
    out: list = []
    punct = np.array(r.punctures, dtype=complex)
    sign = -1.0 if r.side in (Side.INSIDE, Side.NEGATIVE) else 1.0
    for _ in range(_MAX_ROUNDS):
        need = n - len(out)
        cand = _propose(r, rng, 2 * need + 8, margin)
        if isinstance(g, Circle):
            sd = np.abs(cand - g.center) - g.radius
        else:
            sd = cand.real * g.normal[0] + cand.imag * g.normal[1] - g.offset
        ok = sign * sd >= margin
        if punct.size:
            ok &= np.min(np.abs(cand[:, None] - punct[None, :]), axis=1) >= margin
        out.extend(complex(z) for z in cand[ok][:need])
        if len(out) >= n:
            return out
    raise DegenerateRegionError(f"could only draw {len(out)} of {n} samples from {r}")


def gcircle_approx_eq(g: GeneralizedCircle, h: GeneralizedCircle, rtol: float = 1e-9) -> bool:
    """Same generalized circle, line orientation ignored."""
    if isinstance(g, Circle) and isinstance(h, Circle):
        scale = max(1.0, g.radius, h.radius, abs(g.center), abs(h.center))
        return abs(g.center - h.center) <= rtol * scale and abs(g.radius - h.radius) <= rtol * scale
    if isinstance(g, ExtLine) and isinstance(h, ExtLine):
        return _line_match(g, h, rtol) is not None
    return False


def _line_match(g: ExtLine, h: ExtLine, rtol: float):
    """+1 if g and h agree with the same orientation, -1 if opposite, else None."""
    scale = max(1.0, abs(g.offset), abs(h.offset))
    for s in (1.0, -1.0):
        if (
            abs(g.normal[0] - s * h.normal[0]) <= rtol
            and abs(g.normal[1] - s * h.normal[1]) <= rtol
            and abs(g.offset - s * h.offset) <= rtol * scale
        ):
            return s
    return None


def region_approx_eq(r: Region, q: Region, tol: Tolerance = DEFAULT_TOL, rtol: float = 1e-9) -> bool:
    """Equality of point sets, up to rtol on boundary parameters."""
    if isinstance(r.boundary, Circle) != isinstance(q.boundary, Circle):
        return False
    if isinstance(r.boundary, Circle):
        if not gcircle_approx_eq(r.boundary, q.boundary, rtol) or r.side is not q.side:
            return False
    else:
        s = _line_match(r.boundary, q.boundary, rtol)
        if s is None:
            return False
        if (r.side is q.side) != (s > 0):
            return False
    if r.closed != q.closed or r.contains_infinity != q.contains_infinity:
        return False
    ptol = Tolerance(tol.classify_tol, rtol, max(rtol, tol.margin))
    a = effective_punctures(r, tol)
    b = effective_punctures(q, tol)
    return len(a) == len(b) and all(any(approx_eq(x, y, ptol) for y in b) for x in a)
