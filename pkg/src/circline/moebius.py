"""Moebius maps h(z) = (az + b)/(cz + d) acting on points, circles and regions.

For c != 0 every map factors as

    z  ->  cz + d  ->  1/w  ->  ((bc - ad)/c) * w + a/c

so images of shapes are computed by two affine steps around the inversion
case table.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Union

from .errors import DegenerateMapError, InvalidArgument
from .extplane import DEFAULT_TOL, INF, ExtComplex, Tolerance, invert_point
from .inversion import AFFINE, invert_gcircle_case, invert_region_case
from .shapes import Circle, ExtLine, GeneralizedCircle, Region


def _coef(v) -> complex:
    try:
        z = complex(v)
    except (TypeError, ValueError):
        raise DegenerateMapError(f"coefficient {v!r} is not a number") from None
    if not cmath.isfinite(z):
        raise DegenerateMapError(f"coefficient {v!r} is not finite")
    return z


@dataclass(frozen=True)
class MoebiusMap:
    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        a, b, c, d = (_coef(v) for v in (self.a, self.b, self.c, self.d))
        for name, v in zip("abcd", (a, b, c, d)):
            object.__setattr__(self, name, v)
        det = b * c - a * d
        if abs(det) <= 1e-12 * max(1.0, abs(a) * abs(d), abs(b) * abs(c)):
            raise DegenerateMapError(f"bc - ad = {det} vanishes; not a Moebius map")

    @property
    def det(self) -> complex:
        """bc - ad (nonzero)."""
        return self.b * self.c - self.a * self.d

    @property
    def pole(self) -> ExtComplex:
        """The point sent to infinity."""
        return -(self.d / self.c) if self.c != 0 else INF

    @property
    def image_of_infinity(self) -> ExtComplex:
        return self.a / self.c if self.c != 0 else INF

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def __matmul__(self, other: "MoebiusMap") -> "MoebiusMap":
        """self @ other is the composition z -> self(other(z))."""
        a, b, c, d = self.a, self.b, self.c, self.d
        p, q, r, s = other.a, other.b, other.c, other.d
        return MoebiusMap(a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s)

    def __call__(self, z: ExtComplex) -> ExtComplex:
        return apply_point(self, z)


IDENTITY = MoebiusMap(1, 0, 0, 1)
INVERSION = MoebiusMap(0, 1, 1, 0)


def compose(outer: MoebiusMap, inner: MoebiusMap) -> MoebiusMap:
    return outer @ inner


def apply_point(m: MoebiusMap, z: ExtComplex) -> ExtComplex:
    if z is INF:
        return m.image_of_infinity
    z = complex(z)
    if m.c != 0 and z == m.pole:
        return INF
    den = m.c * z + m.d
    if den == 0:
        return INF
    w = (m.a * z + m.b) / den
    return w if cmath.isfinite(w) else INF


@dataclass(frozen=True)
class AffineMap:
    """z -> scale*z + shift."""

    scale: complex
    shift: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "scale", complex(self.scale))
        object.__setattr__(self, "shift", complex(self.shift))
        if self.scale == 0 or not cmath.isfinite(self.scale) or not cmath.isfinite(self.shift):
            raise InvalidArgument("affine scale must be finite and nonzero")

    @property
    def root(self) -> complex:
        return -(self.shift / self.scale)

    def __call__(self, z: ExtComplex) -> ExtComplex:
        if z is INF:
            return INF
        z = complex(z)
        # keep the root exact so that a Moebius pole survives the pipeline
        if z == self.root:
            return 0j
        return self.scale * z + self.shift


@dataclass(frozen=True)
class Affine:
    map: AffineMap


@dataclass(frozen=True)
class Composite:
    pre: AffineMap
    post: AffineMap


Factorization = Union[Affine, Composite]


def decompose(m: MoebiusMap) -> Factorization:
    if not isinstance(m, MoebiusMap):
        raise DegenerateMapError("MoebiusMap expected")
    if m.c == 0:
        return Affine(AffineMap(m.a / m.d, m.b / m.d))
    return Composite(pre=AffineMap(m.c, m.d), post=AffineMap(m.det / m.c, m.a / m.c))


def apply_factored(f: Factorization, z: ExtComplex) -> ExtComplex:
    """Evaluate a factorization pointwise (used to cross-check apply_point)."""
    if isinstance(f, Affine):
        return f.map(z)
    return f.post(invert_point(f.pre(z)))


def affine_shape(A: AffineMap, g: GeneralizedCircle) -> GeneralizedCircle:
    if isinstance(g, Circle):
        return Circle(A.scale * g.center + A.shift, abs(A.scale) * g.radius)
    k = abs(A.scale)
    u = g.n * A.scale / k
    return ExtLine((u.real, u.imag), k * g.offset + u.real * A.shift.real + u.imag * A.shift.imag)


def affine_region(A: AffineMap, r: Region) -> Region:
    """Sides are preserved: the line normal is carried along with the plane."""
    return Region(
        affine_shape(A, r.boundary),
        r.side,
        r.closed,
        r.contains_infinity,
        tuple(A(p) for p in r.punctures),
    )


def map_gcircle_case(m: MoebiusMap, g: GeneralizedCircle, tol: Tolerance = DEFAULT_TOL):
    """(case name of the inversion stage, image of g under m)."""
    f = decompose(m)
    if isinstance(f, Affine):
        case, image = AFFINE, affine_shape(f.map, g)
    else:
        case, image = invert_gcircle_case(affine_shape(f.pre, g), tol)
        image = affine_shape(f.post, image)
    if isinstance(image, ExtLine):
        image = image.canonical()
    return case, image


def map_gcircle(m: MoebiusMap, g: GeneralizedCircle, tol: Tolerance = DEFAULT_TOL) -> GeneralizedCircle:
    return map_gcircle_case(m, g, tol)[1]


def map_region_case(m: MoebiusMap, r: Region, tol: Tolerance = DEFAULT_TOL):
    f = decompose(m)
    if isinstance(f, Affine):
        return AFFINE, affine_region(f.map, r).canonical()
    case, image = invert_region_case(affine_region(f.pre, r), tol)
    return case, affine_region(f.post, image).canonical()


def map_region(m: MoebiusMap, r: Region, tol: Tolerance = DEFAULT_TOL) -> Region:
    return map_region_case(m, r, tol)[1]

