"""3-sweep graphs, their layered unions, and a direct six-cone builder.

Frames are described in a canonical position: apex A at the bottom, the
a-wedge bisected by the upward vertical, B on the upper left and C on the
upper right. ``rotation`` turns the whole picture clockwise.

The wedge of kind ``x`` at a point q is the translate of the triangle's
angle at vertex X. Points in it are ordered by their projection on the
normal of the opposite side, so the first point met by a sweeping line
parallel to that side is the nearest one. Near-equal sweep distances are
resolved toward the wedge's clockwise boundary, then by index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .geograph import GeometricGraph, union_graphs
from .geometry import EPS_ANGLE, Point, Wedge, normalize_angle

KINDS = ("a", "b", "c")
SWEEP_TIE = 1e-9


class SweepError(ValueError):
    pass


@dataclass(frozen=True)
class SweepFrame:
    theta_a: float
    theta_b: float
    theta_c: float
    rotation: float = 0.0

    def __post_init__(self):
        for name in ("theta_a", "theta_b", "theta_c"):
            v = getattr(self, name)
            if not 0.0 < v < 180.0:
                raise SweepError(f"{name}={v} must lie in (0, 180)")
        if abs(self.theta_a + self.theta_b + self.theta_c - 180.0) > 1e-9:
            raise SweepError("frame angles must sum to 180")

    @property
    def acute(self) -> bool:
        return max(self.theta_a, self.theta_b, self.theta_c) < 90.0

    def extent(self, kind: str) -> float:
        return {"a": self.theta_a, "b": self.theta_b, "c": self.theta_c}[kind]

    def start(self, kind: str) -> float:
        """Clockwise boundary direction of the wedge."""
        ha = self.theta_a / 2.0
        base = {"a": 90.0 - ha, "b": 270.0 + ha, "c": 90.0 + ha + self.theta_b}[kind]
        return normalize_angle(base - self.rotation)

    def sweep_direction(self, kind: str) -> float:
        """Direction along which the sweeping line advances."""
        ha = self.theta_a / 2.0
        base = {"a": ha + self.theta_b, "b": -ha, "c": 180.0 + ha}[kind]
        return normalize_angle(base - self.rotation)

    def wedge(self, kind: str, apex: Point) -> Wedge:
        return Wedge(apex, self.start(kind), self.extent(kind))

    def to_canonical(self, p: Point) -> Point:
        """Undo the frame rotation (rotate counterclockwise)."""
        c, s = math.cos(math.radians(self.rotation)), math.sin(math.radians(self.rotation))
        return (c * p[0] - s * p[1], s * p[0] + c * p[1])


def _angles(q: Point, P: np.ndarray) -> np.ndarray:
    a = np.degrees(np.arctan2(P[:, 1] - q[1], P[:, 0] - q[0]))
    a = np.where(a < 0.0, a + 360.0, a)
    return np.where(a >= 360.0, a - 360.0, a)


def _signed_offsets(ang: np.ndarray, start: float) -> np.ndarray:
    off = ang - start
    off = np.where(off < 0.0, off + 360.0, off)
    # just clockwise of the start, admitted by tolerance
    return np.where(off >= 360.0 - EPS_ANGLE, off - 360.0, off)


def _pick(q: Point, P: np.ndarray, idx: np.ndarray, start: float, extent: float, sweep: float):
    """Index into ``idx`` of the wedge-nearest point, or None."""
    if len(idx) == 0:
        return None
    off = _signed_offsets(_angles(q, P), start)
    inside = off <= extent + EPS_ANGLE
    if not inside.any():
        return None
    r = math.radians(sweep)
    proj = (P[:, 0] - q[0]) * math.cos(r) + (P[:, 1] - q[1]) * math.sin(r)
    cand = np.flatnonzero(inside)
    m = proj[cand].min()
    tied = cand[proj[cand] <= m + SWEEP_TIE]
    best = min(tied, key=lambda k: (off[k], idx[k]))
    return int(idx[best])


def nearest_in_wedge(
    points: Sequence[Point], q: int, frame: SweepFrame, kind: str, candidates: Sequence[int] | None = None
) -> int | None:
    """Sweep-nearest point of ``W_{q,kind}``; ``candidates`` restricts the search."""
    if candidates is None:
        candidates = range(len(points))
    idx = np.asarray([c for c in candidates if c != q], dtype=np.int64)
    if len(idx) == 0:
        return None
    P = np.asarray([points[c] for c in idx], dtype=float)
    return _pick(points[q], P, idx, frame.start(kind), frame.extent(kind), frame.sweep_direction(kind))


def in_wedge(q: Point, p: Point, frame: SweepFrame, kind: str) -> bool:
    # scalar twin of _angles/_signed_offsets
    a = math.degrees(math.atan2(p[1] - q[1], p[0] - q[0]))
    if a < 0.0:
        a += 360.0
    if a >= 360.0:
        a -= 360.0
    off = a - frame.start(kind)
    if off < 0.0:
        off += 360.0
    if off >= 360.0 - EPS_ANGLE:
        off -= 360.0
    return off <= frame.extent(kind) + EPS_ANGLE


def sweep_distance(q: Point, p: Point, frame: SweepFrame, kind: str) -> float:
    r = math.radians(frame.sweep_direction(kind))
    return (p[0] - q[0]) * math.cos(r) + (p[1] - q[1]) * math.sin(r)


def sweep_neighbors(points: Sequence[Point], frame: SweepFrame) -> dict[str, list[int | None]]:
    """Per kind, the nearest neighbor of every point (``None`` when empty)."""
    P = np.asarray(points, dtype=float).reshape(-1, 2)
    n = len(P)
    out: dict[str, list[int | None]] = {k: [None] * n for k in KINDS}
    allidx = np.arange(n)
    for q in range(n):
        mask = allidx != q
        idx, Pq = allidx[mask], P[mask]
        for k in KINDS:
            out[k][q] = _pick(tuple(P[q]), Pq, idx, frame.start(k), frame.extent(k), frame.sweep_direction(k))
    return out


def build_3sweep(points: Sequence[Point], frame: SweepFrame) -> GeometricGraph:
    nb = sweep_neighbors(points, frame)
    edges = {(q, v) for k in KINDS for q, v in enumerate(nb[k]) if v is not None}
    return GeometricGraph.from_edges(points, edges)


@dataclass(frozen=True)
class SweepPath:
    vertices: tuple[int, ...]
    kind: str
    extended: bool = True


def sweep_path(g: GeometricGraph, frame: SweepFrame, q: int, kind: str) -> SweepPath:
    """Follow kind-edges from ``q`` until the wedge ahead is empty."""
    verts = [q]
    seen = {q}
    u = q
    while True:
        v = nearest_in_wedge(g.points, u, frame, kind, g.adjacency[u])
        if v is None:
            return SweepPath(tuple(verts), kind, True)
        if v in seen:
            raise SweepError(f"sweep path from {q} revisits {v}")
        verts.append(v)
        seen.add(v)
        u = v


@dataclass(frozen=True)
class LayeredConfig:
    k: int
    even_only: bool = False

    def __post_init__(self):
        if self.k < 5:
            raise SweepError("k must be at least 5 so that alpha < 45")
        if self.even_only and self.k % 4 != 2:
            raise SweepError(f"even-layer union requires k = 2 mod 4, got k={self.k}")

    @classmethod
    def from_alpha(cls, alpha: float, even_only: bool = False) -> "LayeredConfig":
        k = round(180.0 / alpha)
        if abs(k * alpha - 180.0) > 1e-9:
            raise SweepError(f"180/alpha must be an integer, got alpha={alpha}")
        return cls(k, even_only)

    @property
    def alpha(self) -> float:
        return 180.0 / self.k

    @property
    def width(self) -> float:
        return 90.0 + self.alpha

    def layers(self) -> list[int]:
        return list(range(2, self.k + 1, 2)) if self.even_only else list(range(1, self.k + 1))

    def frame(self, i: int) -> SweepFrame:
        if not 1 <= i <= self.k:
            raise SweepError(f"layer {i} out of range 1..{self.k}")
        a = self.alpha
        return SweepFrame(2 * a, 90.0 - a, 90.0 - a, (i - 1) * 360.0 / self.k)


@dataclass(frozen=True)
class LayeredGraph:
    graph: GeometricGraph
    layers: dict[int, GeometricGraph] = field(repr=False)
    cfg: LayeredConfig

    def frame(self, i: int) -> SweepFrame:
        return self.cfg.frame(i)


def build_layered(points: Sequence[Point], cfg: LayeredConfig) -> LayeredGraph:
    layers = {i: build_3sweep(points, cfg.frame(i)) for i in cfg.layers()}
    return LayeredGraph(union_graphs(list(layers.values())), layers, cfg)


def build_theta6_direct(points: Sequence[Point]) -> GeometricGraph:
    """Six closed 60-degree cones per point; nearest by projection on the
    cone bisector; ties toward the cone's clockwise side, then index."""
    P = np.asarray(points, dtype=float).reshape(-1, 2)
    n = len(P)
    allidx = np.arange(n)
    edges = set()
    for q in range(n):
        mask = allidx != q
        for j in range(6):
            v = _pick(tuple(P[q]), P[mask], allidx[mask], 60.0 * j, 60.0, 60.0 * j + 30.0)
            if v is not None:
                edges.add((q, v))
    return GeometricGraph.from_edges(points, edges)


def side_of_a_path(points: Sequence[Point], path: Sequence[int], frame: SweepFrame, t: Point) -> str:
    """``'on'``, ``'left'`` or ``'right'`` of the extended a-path for a
    point ``t`` in the a-wedge of the path's first vertex."""
    if not in_wedge(points[path[0]], t, frame, "a"):
        raise SweepError("target is not in the a-wedge of the path start")
    for v in path:
        if tuple(points[v]) == tuple(t):
            return "on"
    m = max(i for i, v in enumerate(path) if in_wedge(points[v], t, frame, "a"))
    if m == len(path) - 1:
        raise SweepError("target lies in the empty terminal wedge")
    p = points[path[m + 1]]
    mid = math.radians(frame.start("a") + frame.extent("a") / 2.0)
    c = math.cos(mid) * (t[1] - p[1]) - math.sin(mid) * (t[0] - p[0])
    return "left" if c > 0 else "right"


def meeting_path(g: GeometricGraph, frame: SweepFrame, q: int, t: int):
    """Follow the a-path of q and the b- or c-path of t to a shared vertex.

    Returns ``(side, x, vertices)`` with ``vertices`` running q..x..t, or
    ``(side, None, [])`` when the two paths never meet.
    """
    pa = sweep_path(g, frame, q, "a").vertices
    side = side_of_a_path(g.points, pa, frame, g.points[t])
    if side == "on":
        return side, t, list(pa[: pa.index(t) + 1])
    pt = sweep_path(g, frame, t, "b" if side == "left" else "c").vertices
    on_a = set(pa)
    for k, x in enumerate(pt):
        if x in on_a:
            return side, x, list(pa[: pa.index(x) + 1]) + list(reversed(pt[:k]))
    return side, None, []
