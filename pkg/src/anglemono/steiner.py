"""Angle-monotone graphs of small width with auxiliary points.

Two sweep frames share the same a-wedge of extent gamma/2. The first has
its other narrow angle at C, the second at B'. Their union handles targets
on either side of the respective a-paths; a chain of added points along
the right boundary of every a-wedge handles the rest.

Chain geometry for a point q with first-frame a-nearest q':
``C`` is where the right boundary ray of ``W_{q,a}`` meets the line through
q' parallel to the first frame's sweep line. Each step places B_i on that
line with A_{i-1}B_i parallel to the left boundary, then A_i on the right
boundary so that triangle A_{i-1}B_iA_i is isosceles with apex A_i. That
moves the point a fraction ``1/(4 cos^2(gamma/2))`` of the remaining
distance to C.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .geograph import GeometricGraph
from .geometry import Point, dist, unit
from .sweep import SweepFrame, build_3sweep, in_wedge, nearest_in_wedge

MAX_CHAIN = 400


class SteinerError(ValueError):
    pass


@dataclass(frozen=True)
class SteinerConfig:
    gamma: float

    def __post_init__(self):
        if not 0.0 < self.gamma <= 90.0:
            raise SteinerError(f"gamma={self.gamma} must lie in (0, 90]")
        t = round(360.0 / self.gamma)
        if abs(t * self.gamma - 360.0) > 1e-9:
            raise SteinerError(f"360/gamma must be an integer, got gamma={self.gamma}")

    @property
    def t(self) -> int:
        return round(360.0 / self.gamma)

    def frames(self, rotation: float = 0.0) -> tuple[SweepFrame, SweepFrame]:
        h = self.gamma / 2.0
        return (
            SweepFrame(h, 180.0 - self.gamma, h, rotation),
            SweepFrame(h, h, 180.0 - self.gamma, rotation),
        )

    def rotations(self) -> list[float]:
        # a-wedges span gamma/2, so half-gamma steps are needed to cover
        # every direction
        h = self.gamma / 2.0
        return [i * h for i in range(2 * self.t)]


@dataclass(frozen=True)
class DistanceParams:
    lam: float
    mu: float


def pair_separation(u: Point, v: Point, gamma: float) -> float:
    """Smallest gap between distinct parallel lines through u and v whose
    inclination is ``90 + gamma*j/2`` for some j in 1..360/gamma."""
    if tuple(u) == tuple(v):
        raise SteinerError("pair_separation needs distinct points")
    t = SteinerConfig(gamma).t
    dx, dy = v[0] - u[0], v[1] - u[1]
    scale = math.hypot(dx, dy)
    best = math.inf
    for j in range(1, t + 1):
        ex, ey = unit(90.0 + gamma * j / 2.0)
        d = abs(ex * dy - ey * dx)
        if d > 1e-12 * scale:
            best = min(best, d)
    if math.isinf(best):
        raise SteinerError(f"every inclination is degenerate for {u}, {v}")
    return best


def distance_params(points: Sequence[Point], gamma: float) -> DistanceParams:
    if len(points) < 2:
        raise SteinerError("distance parameters need at least two points")
    lam = min(pair_separation(a, b, gamma) for a, b in combinations(points, 2))
    mu = max(dist(a, b) for a, b in combinations(points, 2))
    return DistanceParams(lam, mu)


def build_pair_graph(points: Sequence[Point], cfg: SteinerConfig, rotation: float = 0.0) -> GeometricGraph:
    f1, f2 = cfg.frames(rotation)
    g1, g2 = build_3sweep(points, f1), build_3sweep(points, f2)
    return GeometricGraph.from_edges(points, g1.edges | g2.edges)


@dataclass
class SteinerChain:
    owner: int
    anchor: int
    corner: Point
    points: list[Point] = field(default_factory=list)

    def gaps(self, start: Point) -> list[float]:
        """Distances to the corner, from ``start`` through every chain point."""
        return [dist(p, self.corner) for p in [start, *self.points]]


@dataclass
class SteinerBuild:
    graph: GeometricGraph
    chains: list[tuple[float, SteinerChain]]
    params: DistanceParams
    cfg: SteinerConfig

    @property
    def steiner_count(self) -> int:
        return self.graph.n - self.graph.steiner_from

    def count_bound(self, const: float = 1.0) -> float:
        """``const * n * t * log2(mu / lambda)``."""
        n = self.graph.steiner_from
        return const * n * self.cfg.t * math.log2(max(self.params.mu / self.params.lam, 2.0))


def _line_hit(origin: Point, d: float, p: Point, normal: float) -> Point:
    """Where the ray from ``origin`` along ``d`` meets the line through ``p``
    with unit normal ``normal``."""
    ux, uy = unit(d)
    nx, ny = unit(normal)
    den = ux * nx + uy * ny
    s = ((p[0] - origin[0]) * nx + (p[1] - origin[1]) * ny) / den
    return (origin[0] + s * ux, origin[1] + s * uy)


def _chain(points: Sequence[Point], q: int, q1: int, f1: SweepFrame, f2: SweepFrame, gamma: float) -> SteinerChain:
    right = f1.start("a")
    C = _line_hit(points[q], right, points[q1], f1.sweep_direction("a"))
    ch = SteinerChain(q, q1, C)
    shrink = 1.0 / (4.0 * math.cos(math.radians(gamma / 2.0)) ** 2)
    ux, uy = unit(right)
    cur = points[q]
    pool = list(points)
    while True:
        if ch.points:
            s = len(pool) - 1
            if not in_wedge(cur, points[q1], f1, "a"):
                break
            if nearest_in_wedge(pool, s, f2, "a", range(len(points))) == q1:
                break
        elif nearest_in_wedge(points, q, f2, "a") == q1:
            break
        if len(ch.points) >= MAX_CHAIN:
            raise SteinerError(f"chain for point {q} did not terminate; perturb the input")
        step = dist(cur, C) * shrink
        cur = (cur[0] + step * ux, cur[1] + step * uy)
        ch.points.append(cur)
        pool = list(points) + [cur]
    return ch


def _orientation(points: Sequence[Point], cfg: SteinerConfig, rotation: float):
    """Edges and chains for one rotation; chain vertices are numbered from
    ``len(points)`` in creation order."""
    n = len(points)
    f1, f2 = cfg.frames(rotation)
    edges = set(build_pair_graph(points, cfg, rotation).edges)
    chains = []
    extra: list[Point] = []
    for q in range(n):
        q1 = nearest_in_wedge(points, q, f1, "a")
        if q1 is None:
            continue
        ch = _chain(points, q, q1, f1, f2, cfg.gamma)
        prev, first = q, n + len(extra)
        for p in ch.points:
            v = n + len(extra)
            extra.append(p)
            edges.add((prev, v))
            prev = v
        edges.add((q1, prev) if q1 < prev else (prev, q1))
        chains.append(ch)
        if ch.points:
            # each chain competes only with the input points
            pool = list(points) + ch.points
            for z in range(n):
                w = nearest_in_wedge(pool, z, f2, "b")
                if w is not None and w >= n:
                    edges.add((z, first + w - n))
    return edges, chains, extra


def construct_steiner(points: Sequence[Point], gamma: float) -> SteinerBuild:
    """Union over all rotations of the pair graph plus chains."""
    cfg = SteinerConfig(gamma)
    pts = [tuple(map(float, p)) for p in points]
    n = len(pts)
    if n < 2:
        raise SteinerError("need at least two points")
    params = distance_params(pts, gamma)
    if params.lam <= 1e-9 * params.mu:
        raise SteinerError(f"lambda={params.lam:.3g} is degenerate; perturb the input")
    all_pts = list(pts)
    edges: set[tuple[int, int]] = set()
    chains = []
    for rot in cfg.rotations():
        es, chs, extra = _orientation(pts, cfg, rot)
        off = len(all_pts) - n
        shift = lambda v: v if v < n else v + off
        edges |= {(shift(a), shift(b)) for a, b in es}
        all_pts += extra
        chains += [(rot, c) for c in chs]
    g = GeometricGraph.from_edges(all_pts, edges, n)
    return SteinerBuild(g, chains, params, cfg)


def build_steiner(points: Sequence[Point], gamma: float) -> GeometricGraph:
    return construct_steiner(points, gamma).graph
