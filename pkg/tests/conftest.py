import cmath
import math
import sys

import numpy as np
import pytest

from circline import Circle, ExtLine, MoebiusMap, Region, Side

CASES = "abcdef"


def circumcircle(p, q, r):
    """Center and radius of the circle through three points (brute-force oracle)."""
    ax, ay, bx, by, cx, cy = p.real, p.imag, q.real, q.imag, r.real, r.imag
    den = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    ux = ((ax**2 + ay**2) * (by - cy) + (bx**2 + by**2) * (cy - ay) + (cx**2 + cy**2) * (ay - by)) / den
    uy = ((ax**2 + ay**2) * (cx - bx) + (bx**2 + by**2) * (ax - cx) + (cx**2 + cy**2) * (bx - ax)) / den
    c = complex(ux, uy)
    return c, abs(p - c)


def collinear(p, q, r, tol=1e-12):
    return abs(((q - p).conjugate() * (r - p)).imag) <= tol * max(1, abs(q - p) * abs(r - p))


def random_circle(rng, lo=-10, hi=10, min_abs_s=1e-2):
    while True:
        c = complex(*rng.uniform(lo, hi, 2))
        R = rng.uniform(0.05, hi)
        if abs(R * R - abs(c) ** 2) >= min_abs_s:
            return Circle(c, R)


def random_line(rng, lo=-10, hi=10, min_abs_d=1e-2):
    while True:
        n = rng.uniform(lo, hi, 2)
        d = rng.uniform(lo, hi)
        if math.hypot(*n) > 1e-3 and abs(d) / math.hypot(*n) >= min_abs_d:
            return ExtLine(tuple(n), d)


def circle_through_origin(rng, lo=-10, hi=10):
    c = complex(*rng.uniform(lo, hi, 2))
    return Circle(c, abs(c))


def line_through_origin(rng):
    phi = rng.uniform(0, 2 * np.pi)
    return ExtLine((math.cos(phi), math.sin(phi)), 0.0)


def random_region(rng, case, punctures=True):
    """Random region whose inversion falls in dispatch case a..f."""
    closed = bool(rng.integers(2))
    if case in "abc":
        if case == "c":
            g = circle_through_origin(rng)
            side = Side.INSIDE if rng.integers(2) else Side.OUTSIDE
        else:
            g = random_circle(rng)
            origin_inside_circle = g.radius > abs(g.center)
            # case a: origin exterior to the region, case b: interior
            want_inside_region = case == "b"
            side = Side.INSIDE if origin_inside_circle == want_inside_region else Side.OUTSIDE
        inf = side is Side.OUTSIDE and bool(rng.integers(4))
    else:
        g = line_through_origin(rng) if case == "f" else random_line(rng)
        if case == "f":
            side = Side.POSITIVE if rng.integers(2) else Side.NEGATIVE
        else:
            origin_side = Side.NEGATIVE if g.offset > 0 else Side.POSITIVE
            side = origin_side.flipped() if case == "d" else origin_side
        inf = closed and bool(rng.integers(2))
    r = Region(g, side, closed, inf)
    if punctures and rng.random() < 0.3:
        from circline import sample_region

        p = sample_region(r, 1, int(rng.integers(2**31)))[0]
        r = r.replace(punctures=(p,))
    return r


def random_map(rng, scale=3.0, affine_fraction=0.1):
    while True:
        a, b, c, d = (complex(*rng.normal(0, scale, 2)) for _ in range(4))
        if rng.random() < affine_fraction:
            c = 0j
        try:
            m = MoebiusMap(a, b, c, d)
        except ValueError:
            continue
        if abs(m.det) > 1e-3 * max(1, abs(a) * abs(d), abs(b) * abs(c)):
            return m


def rel_close(z, w, rtol):
    return abs(z - w) <= rtol * max(1.0, abs(z), abs(w))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def cis(phi):
    return cmath.exp(1j * phi)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
