"""Exact images of circles, lines, disks and half-planes under Moebius maps."""

from .errors import (
    CirclineError,
    DegenerateMapError,
    DegenerateRegionError,
    InvalidArgument,
    ParseError,
)
from .extplane import DEFAULT_TOL, INF, ExtComplex, Infinity, Tolerance, approx_eq, invert_point, is_inf, point
from .inversion import invert_gcircle, invert_gcircle_case, invert_region, invert_region_case
from .moebius import (
    IDENTITY,
    INVERSION,
    Affine,
    AffineMap,
    Composite,
    MoebiusMap,
    affine_region,
    affine_shape,
    apply_factored,
    apply_point,
    compose,
    decompose,
    map_gcircle,
    map_gcircle_case,
    map_region,
    map_region_case,
)
from .oracle import VerificationReport, verify_gcircle_image, verify_region_image
from .shapes import (
    Circle,
    ExtLine,
    GeneralizedCircle,
    Incidence,
    Region,
    Side,
    classify_origin,
    classify_point,
    contains,
    disk,
    disk_complement,
    gcircle_approx_eq,
    half_plane,
    region_approx_eq,
    sample_boundary,
    sample_region,
)

__version__ = "0.1.0"
