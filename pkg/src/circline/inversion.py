"""Images of generalized circles and regions under z -> 1/z.

Every branch is tagged with a case name. The names are part of the CLI output
contract; "disk" in a region case means any circle-bounded region (a disk or
the exterior of one), and "origin_exterior/interior" is relative to the region.
"""

from __future__ import annotations

from .extplane import DEFAULT_TOL, Tolerance, invert_point
from .shapes import (
    Circle,
    ExtLine,
    GeneralizedCircle,
    Region,
    Side,
    classify_origin,
    contains,
    in_base,
)

CIRCLE_OFF_ORIGIN = "circle_off_origin_to_circle"
CIRCLE_THROUGH_ORIGIN = "circle_through_origin_to_line"
LINE_OFF_ORIGIN = "line_off_origin_to_circle"
LINE_THROUGH_ORIGIN = "line_through_origin_to_line"
DISK_ORIGIN_EXTERIOR = "disk_origin_exterior_to_disk"
DISK_ORIGIN_INTERIOR = "disk_origin_interior_to_disk_complement"
DISK_ORIGIN_ON_BOUNDARY = "disk_origin_on_boundary_to_halfplane"
HALFPLANE_ORIGIN_EXTERIOR = "halfplane_origin_exterior_to_disk"
HALFPLANE_ORIGIN_INTERIOR = "halfplane_origin_interior_to_disk_complement"
HALFPLANE_ORIGIN_ON_BOUNDARY = "halfplane_origin_on_boundary_to_halfplane"
# Moebius maps with c = 0 never reach the inversion stage
AFFINE = "affine"

GCIRCLE_CASES = (CIRCLE_OFF_ORIGIN, CIRCLE_THROUGH_ORIGIN, LINE_OFF_ORIGIN, LINE_THROUGH_ORIGIN)
REGION_CASES = (
    DISK_ORIGIN_EXTERIOR,
    DISK_ORIGIN_INTERIOR,
    DISK_ORIGIN_ON_BOUNDARY,
    HALFPLANE_ORIGIN_EXTERIOR,
    HALFPLANE_ORIGIN_INTERIOR,
    HALFPLANE_ORIGIN_ON_BOUNDARY,
)
ALL_CASES = GCIRCLE_CASES + REGION_CASES + (AFFINE,)


def _image_boundary(g: GeneralizedCircle, tol: Tolerance):
    """(image boundary, origin incidence) with the line orientation left as derived."""
    inc = classify_origin(g, tol)
    if isinstance(g, Circle):
        x, y = g.center.real, g.center.imag
        if inc.tag is Side.ON:
            # x*.x - y*.y = 1/2
            return ExtLine((x, -y), 0.5), inc
        s = inc.signed
        return Circle(complex(-x / s, y / s), g.radius / abs(s)), inc
    nx, ny = g.normal
    if inc.tag is Side.ON:
        return ExtLine((nx, -ny), 0.0), inc
    d = g.offset
    return Circle(complex(nx / (2 * d), -ny / (2 * d)), 1 / (2 * abs(d))), inc


def invert_gcircle_case(g: GeneralizedCircle, tol: Tolerance = DEFAULT_TOL):
    """Return (case name, image of g under 1/z)."""
    image, inc = _image_boundary(g, tol)
    if isinstance(image, ExtLine):
        image = image.canonical()
    if isinstance(g, Circle):
        case = CIRCLE_THROUGH_ORIGIN if inc.tag is Side.ON else CIRCLE_OFF_ORIGIN
    else:
        case = LINE_THROUGH_ORIGIN if inc.tag is Side.ON else LINE_OFF_ORIGIN
    return case, image


def invert_gcircle(g: GeneralizedCircle, tol: Tolerance = DEFAULT_TOL) -> GeneralizedCircle:
    return invert_gcircle_case(g, tol)[1]


def invert_region_case(r: Region, tol: Tolerance = DEFAULT_TOL):
    """Return (case name, exact image of r under the sphere bijection 1/z)."""
    g = r.boundary
    image, inc = _image_boundary(g, tol)
    if isinstance(g, Circle):
        if inc.tag is Side.ON:
            # the disk side lands on the side x*.x - y*.y > 1/2
            side = Side.POSITIVE if r.side is Side.INSIDE else Side.NEGATIVE
            case = DISK_ORIGIN_ON_BOUNDARY
        else:
            side = r.side.flipped() if inc.tag is Side.INSIDE else r.side
            case = DISK_ORIGIN_EXTERIOR if side is Side.INSIDE else DISK_ORIGIN_INTERIOR
    else:
        if inc.tag is Side.ON:
            # n.p > 0  <=>  (nx, -ny).(1/p) > 0
            side = r.side
            case = HALFPLANE_ORIGIN_ON_BOUNDARY
        else:
            side = Side.OUTSIDE if r.side is inc.tag else Side.INSIDE
            case = HALFPLANE_ORIGIN_EXTERIOR if side is Side.INSIDE else HALFPLANE_ORIGIN_INTERIOR

    if isinstance(image, ExtLine) and not image.is_canonical():
        image, side = image.flipped(), side.flipped()

    # 1/z swaps 0 and infinity; every other point keeps its membership
    base = Region(image, side, r.closed, contains(r, 0j, tol))
    candidates = [invert_point(p) for p in r.punctures if not _near_zero(p, tol)]
    if not r.contains_infinity:
        candidates.append(0j)
    punctures = tuple(q for q in candidates if in_base(base, q, tol))
    return case, base.replace(punctures=punctures) if punctures else base


def invert_region(r: Region, tol: Tolerance = DEFAULT_TOL) -> Region:
    return invert_region_case(r, tol)[1]


def _near_zero(p: complex, tol: Tolerance) -> bool:
    return abs(p) <= tol.residual_tol
