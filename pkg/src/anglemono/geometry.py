"""Planar primitives and predicates shared by every construction.

Points are plain ``(x, y)`` float tuples. Directions are degrees in
``[0, 360)``. Wedges are closed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from . import kernels

Point = tuple[float, float]

EPS_ORIENT = 1e-9
# angular slack used by closed wedge membership, degrees
EPS_ANGLE = 1e-9

LEFT, RIGHT, COLLINEAR = "left", "right", "collinear"


class GeometryError(ValueError):
    pass


def normalize_angle(a: float) -> float:
    a = math.fmod(a, 360.0)
    if a < 0.0:
        a += 360.0
    if a >= 360.0:
        a -= 360.0
    return a


def direction(p: Point, q: Point) -> float:
    """Angle in degrees of the vector ``q - p``."""
    dx = q[0] - p[0]
    dy = q[1] - p[1]
    if dx == 0.0 and dy == 0.0:
        raise GeometryError(f"direction undefined for coincident points {p}")
    return normalize_angle(math.degrees(math.atan2(dy, dx)))


def ccw_offset(start: float, a: float) -> float:
    """Counterclockwise angle from ``start`` to ``a``, in ``[0, 360)``."""
    d = a - start
    if d < 0.0:
        d += 360.0
    return d


def unit(angle: float) -> Point:
    r = math.radians(angle)
    return (math.cos(r), math.sin(r))


def dist(p: Point, q: Point) -> float:
    return math.hypot(q[0] - p[0], q[1] - p[1])


def cross(o: Point, a: Point, b: Point) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _scale(*pts: Point) -> float:
    m = 1.0
    for p in pts:
        m = max(m, abs(p[0]), abs(p[1]))
    return m


def orientation(p: Point, q: Point, r: Point) -> str:
    c = cross(p, q, r)
    s = _scale(p, q, r)
    if abs(c) <= EPS_ORIENT * s * s:
        return COLLINEAR
    return LEFT if c > 0 else RIGHT


def orient_sign(p: Point, q: Point, r: Point) -> int:
    o = orientation(p, q, r)
    return 1 if o == LEFT else (-1 if o == RIGHT else 0)


def rotate(p: Point, angle: float, about: Point = (0.0, 0.0)) -> Point:
    """Rotate counterclockwise by ``angle`` degrees."""
    c, s = math.cos(math.radians(angle)), math.sin(math.radians(angle))
    x, y = p[0] - about[0], p[1] - about[1]
    return (about[0] + c * x - s * y, about[1] + s * x + c * y)


@dataclass(frozen=True)
class Wedge:
    apex: Point
    start: float
    extent: float

    def __post_init__(self):
        if not 0.0 < self.extent <= 180.0:
            raise GeometryError(f"wedge extent {self.extent} outside (0, 180]")
        object.__setattr__(self, "start", normalize_angle(self.start))

    def contains(self, p: Point) -> bool:
        return wedge_contains(self, p)


def angle_in_range(a: float, start: float, extent: float, tol: float = EPS_ANGLE) -> bool:
    off = ccw_offset(start, a)
    return off <= extent + tol or off >= 360.0 - tol


def wedge_contains(w: Wedge, p: Point) -> bool:
    if p == w.apex:
        raise GeometryError("wedge membership undefined at the apex")
    return angle_in_range(direction(w.apex, p), w.start, w.extent)


@dataclass(frozen=True)
class Line:
    anchor: Point
    direction: float

    def signed_distance(self, p: Point) -> float:
        """Positive when ``p`` is left of the directed line."""
        ux, uy = unit(self.direction)
        return ux * (p[1] - self.anchor[1]) - uy * (p[0] - self.anchor[0])


def minimal_cover_width(dirs: Iterable[float]) -> float:
    """Smallest extent of a closed wedge containing all ``dirs``."""
    ds = sorted(set(normalize_angle(d) for d in dirs))
    if not ds:
        raise GeometryError("minimal_cover_width of an empty set")
    if len(ds) == 1:
        return 0.0
    # a minimal cover starts right after the largest gap
    best = 360.0
    m = len(ds)
    for i in range(m):
        w = ccw_offset(ds[(i + 1) % m], ds[i])
        if w < best:
            best = w
    return best


def convex_hull(points: Sequence[Point]) -> list[Point]:
    """Strict convex hull in clockwise order (monotone chain)."""
    pts = sorted(set(map(tuple, points)))
    if len(pts) <= 2:
        return list(pts) if len(pts) < 2 or pts[0] != pts[1] else [pts[0]]

    def half(seq):
        out: list[Point] = []
        for p in seq:
            keep = True
            while len(out) >= 2:
                a, b = out[-2], out[-1]
                s = orient_sign(a, b, p)
                if s < 0:
                    break
                if s > 0:
                    out.pop()
                    continue
                # collinear within tolerance: keep the two extremes
                dx, dy = b[0] - a[0], b[1] - a[1]
                tp = (p[0] - a[0]) * dx + (p[1] - a[1]) * dy
                if tp >= dx * dx + dy * dy:
                    out.pop()
                elif tp <= 0.0:
                    del out[-2]
                else:
                    keep = False
                    break
            if keep:
                out.append(p)
        return out

    upper = half(pts)
    lower = half(reversed(pts))
    hull = upper[:-1] + lower[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def hull_indices(points: Sequence[Point], idx: Sequence[int]) -> list[int]:
    """Clockwise strict-hull ordering of the index subset ``idx``."""
    lookup = {tuple(points[i]): i for i in idx}
    return [lookup[p] for p in convex_hull([points[i] for i in idx])]


def in_strict_convex_position(points: Sequence[Point]) -> bool:
    if len(set(map(tuple, points))) != len(points):
        return False
    if len(points) <= 2:
        return True
    hull = convex_hull(points)
    if len(hull) != len(points):
        return False
    m = len(hull)
    return all(orient_sign(hull[i - 1], hull[i], hull[(i + 1) % m]) < 0 for i in range(m))


def largest_convex_subset(points: Sequence[Point]) -> list[int]:
    """Indices of a maximum subset in strictly convex position.

    Dynamic programming over ordered point pairs for each choice of the
    lowest polygon vertex; the inner loop runs in the compiled kernel when
    available.
    """
    n = len(points)
    if n <= 2:
        return list(range(n))
    return kernels.largest_convex_subset(points)


def largest_convex_subset_bruteforce(points: Sequence[Point]) -> list[int]:
    n = len(points)
    for size in range(n, 0, -1):
        for combo in itertools.combinations(range(n), size):
            if in_strict_convex_position([points[i] for i in combo]):
                return list(combo)
    return []


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True for a proper crossing or collinear overlap of segments ab, cd.

    Segments sharing an endpoint only at that endpoint do not cross.
    """
    shared = {a, b} & {c, d}
    o1, o2 = orient_sign(a, b, c), orient_sign(a, b, d)
    o3, o4 = orient_sign(c, d, a), orient_sign(c, d, b)
    if o1 == o2 == o3 == o4 == 0:
        return _collinear_overlap(a, b, c, d, shared)
    if shared:
        # touching at the shared endpoint is fine; anything else would
        # need collinearity, handled above
        return False
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    # an endpoint lying in the interior of the other segment
    for p, (s, t), o in ((c, (a, b), o1), (d, (a, b), o2), (a, (c, d), o3), (b, (c, d), o4)):
        if o == 0 and _strictly_between(p, s, t):
            return True
    return False


def _strictly_between(p: Point, s: Point, t: Point) -> bool:
    if p == s or p == t:
        return False
    return min(s[0], t[0]) <= p[0] <= max(s[0], t[0]) and min(s[1], t[1]) <= p[1] <= max(s[1], t[1])


def _collinear_overlap(a, b, c, d, shared) -> bool:
    ax = 0 if abs(b[0] - a[0]) >= abs(b[1] - a[1]) else 1
    s1 = sorted((a[ax], b[ax]))
    s2 = sorted((c[ax], d[ax]))
    lo, hi = max(s1[0], s2[0]), min(s1[1], s2[1])
    if hi < lo:
        return False
    if hi == lo:
        return not shared
    return True


def general_position_rotation(points: Sequence[Point], min_sep: float = 1e-7) -> float:
    """Rotation (degrees) after which no two points share an x or y value.

    Returns 0 when the input already qualifies.
    """
    if len(points) < 2:
        return 0.0
    scale = _scale(*points)
    for k in range(64):
        ang = 0.0 if k == 0 else math.fmod(k * 137.50776405003785 / 7.0, 90.0) + 0.1
        pts = [rotate(p, ang) for p in points]
        ok = True
        for axis in (0, 1):
            vals = sorted(p[axis] for p in pts)
            if any(v2 - v1 <= min_sep * scale for v1, v2 in zip(vals, vals[1:])):
                ok = False
                break
        if ok:
            return ang
    raise GeometryError("could not find a rotation putting points in general position")


def check_distinct(points: Sequence[Point]) -> None:
    seen = set()
    for i, p in enumerate(points):
        if not (math.isfinite(p[0]) and math.isfinite(p[1])):
            raise GeometryError(f"point {i} has non-finite coordinates")
        t = (float(p[0]), float(p[1]))
        if t in seen:
            raise GeometryError(f"duplicate point {t} at index {i}")
        seen.add(t)
