"""Points of the extended complex plane.

Finite points are plain Python ``complex`` values. The point at infinity is
the singleton :data:`INF`, a distinct tag and never a float overflow value.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

from .errors import InvalidArgument


class Infinity:
    """The point at infinity. Use the module level :data:`INF` instance."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()

ExtComplex = Union[complex, Infinity]


def is_inf(z) -> bool:
    return z is INF


def point(x: float, y: float = 0.0) -> complex:
    """Finite point x + iy; rejects NaN and float infinities."""
    x = float(x)
    y = float(y)
    if not (math.isfinite(x) and math.isfinite(y)):
        raise InvalidArgument(f"point coordinates must be finite, got ({x}, {y})")
    return complex(x, y)


def as_ext(z) -> ExtComplex:
    """Coerce numbers to ``complex``; pass :data:`INF` through."""
    if z is INF:
        return INF
    z = complex(z)
    if not cmath.isfinite(z):
        raise InvalidArgument(f"finite point expected, got {z!r}; use INF for infinity")
    return z


@dataclass(frozen=True)
class Tolerance:
    """Numerical thresholds.

    classify_tol -- relative width of the "on the boundary" band used when
        dispatching on incidence.
    residual_tol -- relative residual accepted by equality and oracle checks.
    margin -- absolute distance kept between oracle samples and boundaries.
    """

    classify_tol: float = 1e-9
    residual_tol: float = 1e-9
    margin: float = 1e-6

    def __post_init__(self):
        for name in ("classify_tol", "residual_tol", "margin"):
            v = getattr(self, name)
            if not (v > 0 and math.isfinite(v)):
                raise InvalidArgument(f"{name} must be positive, got {v!r}")
        if self.margin < self.residual_tol:
            raise InvalidArgument("margin must be >= residual_tol")


DEFAULT_TOL = Tolerance()


def invert_point(z: ExtComplex) -> ExtComplex:
    """1/z on the Riemann sphere, with 0 -> INF and INF -> 0.

    A finite z whose reciprocal overflows is treated as 0.
    """
    if z is INF:
        return 0j
    z = complex(z)
    if z == 0:
        return INF
    w = 1 / z
    if not cmath.isfinite(w):
        return INF
    return w


def approx_eq(p: ExtComplex, q: ExtComplex, tol: Tolerance = DEFAULT_TOL) -> bool:
    if p is INF or q is INF:
        return p is q
    p = complex(p)
    q = complex(q)
    return abs(p - q) <= tol.residual_tol * max(1.0, abs(p), abs(q))
