"""Brute-force checks that a predicted image really is the pointwise image.

Nothing here uses the inversion case table: points are pushed through the map
one at a time and tested against the prediction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidArgument
from .extplane import DEFAULT_TOL, INF, ExtComplex, Tolerance
from .moebius import MoebiusMap, apply_point
from .shapes import (
    ExtLine,
    GeneralizedCircle,
    Region,
    Side,
    boundary_residual,
    classify_point,
    contains,
    on_gcircle,
    sample_boundary,
    sample_region,
)

MAX_STORED_FAILURES = 50


class Direction(enum.Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True)
class Failure:
    point: ExtComplex
    direction: Direction
    detail: str


@dataclass
class VerificationReport:
    samples_forward: int = 0
    samples_backward: int = 0
    max_boundary_residual: float = 0.0
    failures: list = field(default_factory=list)
    failure_count: int = 0
    residual_tol: float = DEFAULT_TOL.residual_tol

    @property
    def passed(self) -> bool:
        return self.failure_count == 0 and self.max_boundary_residual <= self.residual_tol

    def fail(self, pt, direction: Direction, detail: str):
        self.failure_count += 1
        if len(self.failures) < MAX_STORED_FAILURES:
            self.failures.append(Failure(pt, direction, detail))

    def residual(self, pt, direction: Direction, res: float, what: str):
        self.max_boundary_residual = max(self.max_boundary_residual, res)
        if res > self.residual_tol:
            self.fail(pt, direction, f"residual {res:.3e} against {what}")

    def merge_boundary(self, other: "VerificationReport"):
        self.max_boundary_residual = max(self.max_boundary_residual, other.max_boundary_residual)
        self.failure_count += other.failure_count
        room = MAX_STORED_FAILURES - len(self.failures)
        self.failures.extend(other.failures[: max(room, 0)])


def _subseed(seed: int, k: int) -> int:
    return int(np.random.SeedSequence([seed, k]).generate_state(1)[0])


def _check_n(n):
    if n < 1:
        raise InvalidArgument("n must be at least 1")


def _landing(report, target: GeneralizedCircle, pt, image, direction, what):
    if image is INF:
        if not isinstance(target, ExtLine):
            report.fail(pt, direction, f"maps to infinity but the {what} is a circle")
        return
    report.residual(pt, direction, boundary_residual(target, image), what)


def verify_gcircle_image(
    m: MoebiusMap,
    g: GeneralizedCircle,
    predicted: GeneralizedCircle,
    n: int = 1000,
    seed: int = 0,
    tol: Tolerance = DEFAULT_TOL,
) -> VerificationReport:
    """Check that m maps g onto ``predicted``.

    Forward: boundary samples of g land on ``predicted``. Backward: samples of
    ``predicted`` pulled back by the adjugate map land on g. Infinity and the
    pole are checked explicitly.
    """
    _check_n(n)
    inv = m.inverse()
    rep = VerificationReport(samples_forward=n, samples_backward=n, residual_tol=tol.residual_tol)
    fwd, bwd = Direction.FORWARD, Direction.BACKWARD

    for p in sample_boundary(g, n, _subseed(seed, 0)):
        _landing(rep, predicted, p, apply_point(m, p), fwd, "predicted image")
    if isinstance(g, ExtLine):
        _landing(rep, predicted, INF, apply_point(m, INF), fwd, "predicted image")
    pole = m.pole
    if pole is not INF and on_gcircle(g, pole, tol) and not isinstance(predicted, ExtLine):
        rep.fail(pole, fwd, "pole lies on the source but the predicted image is a circle")

    for q in sample_boundary(predicted, n, _subseed(seed, 1)):
        _landing(rep, g, q, apply_point(inv, q), bwd, "source")
    if isinstance(predicted, ExtLine):
        _landing(rep, g, INF, apply_point(inv, INF), bwd, "source")
    return rep


def _loosely_contains(r: Region, p: ExtComplex, tol: Tolerance) -> bool:
    """Membership that gives the benefit of the doubt inside the boundary band."""
    if p is INF:
        return r.contains_infinity
    tag = classify_point(r.boundary, p, tol).tag
    return tag is Side.ON or tag is r.side


def verify_region_image(
    m: MoebiusMap,
    r: Region,
    predicted: Region,
    n: int = 1000,
    seed: int = 0,
    tol: Tolerance = DEFAULT_TOL,
    boundary_samples: int | None = None,
) -> VerificationReport:
    """Check that m maps r onto ``predicted`` as point sets.

    Margin-interior samples of r must land in ``predicted`` and margin-interior
    samples of ``predicted`` must pull back into r. Infinity, the pole and all
    punctures are checked for exact membership agreement, and the boundaries
    are compared as in :func:`verify_gcircle_image`.
    """
    _check_n(n)
    inv = m.inverse()
    nb = boundary_samples if boundary_samples is not None else min(n, 64)
    rep = VerificationReport(samples_forward=n, samples_backward=n, residual_tol=tol.residual_tol)
    rep.merge_boundary(verify_gcircle_image(m, r.boundary, predicted.boundary, nb, _subseed(seed, 2), tol))
    fwd, bwd = Direction.FORWARD, Direction.BACKWARD

    for p in sample_region(r, n, _subseed(seed, 0), tol):
        q = apply_point(m, p)
        if not _loosely_contains(predicted, q, tol):
            rep.fail(p, fwd, f"image {q} is outside the predicted region")
    for q in sample_region(predicted, n, _subseed(seed, 1), tol):
        p = apply_point(inv, q)
        if not _loosely_contains(r, p, tol):
            rep.fail(q, bwd, f"preimage {p} is outside the source region")

    specials = [INF, m.pole, *r.punctures, *(apply_point(inv, q) for q in predicted.punctures)]
    seen = []
    for x in specials:
        if any(x is y or (x is not INF and y is not INF and x == y) for y in seen):
            continue
        seen.append(x)
        a = contains(r, x, tol)
        b = contains(predicted, apply_point(m, x), tol)
        if a != b:
            where = "in" if a else "not in"
            rep.fail(x, fwd, f"special point {where} source but image membership is {b}")
    return rep
