"""Width-90 constructions.

Building blocks work on index paths over a coordinate map ``C`` (index ->
point). Reductions between path classes only transform the coordinates;
edges are index pairs, so they carry over to the original points without
any mapping back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Mapping, Sequence

from .geograph import GeometricGraph
from .geometry import (
    Point,
    check_distinct,
    convex_hull,
    general_position_rotation,
    hull_indices,
    in_strict_convex_position,
    largest_convex_subset,
    normalize_angle,
    orient_sign,
    rotate,
)

Coords = Mapping[int, Point]
Edges = set[tuple[int, int]]


class Width90Error(ValueError):
    pass


class PathClass(str, Enum):
    XY_MONOTONE = "XY-monotone"
    XNY_MONOTONE = "X(-Y)-monotone"
    XY_CONVEX = "XY-convex"
    XNY_CONVEX = "X(-Y)-convex"
    XY_CONCAVE = "XY-concave"
    XNY_CONCAVE = "X(-Y)-concave"
    NONE = "none"

    @property
    def rising(self) -> bool:
        return self in (PathClass.XY_MONOTONE, PathClass.XY_CONVEX, PathClass.XY_CONCAVE)

    @property
    def falling(self) -> bool:
        return self in (PathClass.XNY_MONOTONE, PathClass.XNY_CONVEX, PathClass.XNY_CONCAVE)


@dataclass(frozen=True)
class ClassifiedPath:
    polyline: tuple[Point, ...]
    cls: PathClass


def _e(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def _chain(path: Sequence[int]) -> Edges:
    return {_e(a, b) for a, b in zip(path, path[1:]) if a != b}


def _classify(pts: Sequence[Point]) -> PathClass:
    if len(pts) < 2:
        return PathClass.NONE
    if pts[-1][0] < pts[0][0]:
        pts = list(reversed(pts))
    dx = [b[0] - a[0] for a, b in zip(pts, pts[1:])]
    dy = [b[1] - a[1] for a, b in zip(pts, pts[1:])]
    if not all(d > 0 for d in dx):
        return PathClass.NONE
    if all(d > 0 for d in dy):
        rising = True
    elif all(d < 0 for d in dy):
        rising = False
    else:
        return PathClass.NONE
    turns = {orient_sign(a, b, c) for a, b, c in zip(pts, pts[1:], pts[2:])}
    if turns == {-1}:
        return PathClass.XY_CONVEX if rising else PathClass.XNY_CONVEX
    if turns == {1}:
        return PathClass.XY_CONCAVE if rising else PathClass.XNY_CONCAVE
    return PathClass.XY_MONOTONE if rising else PathClass.XNY_MONOTONE


def classify_path(polyline: Sequence[Point]) -> PathClass:
    """Most specific class of the polyline, read in increasing x."""
    return _classify([tuple(p) for p in polyline])


def _is_convex_chain(pts: Sequence[Point]) -> bool:
    return all(orient_sign(a, b, c) < 0 for a, b, c in zip(pts, pts[1:], pts[2:]))


def _is_concave_chain(pts: Sequence[Point]) -> bool:
    return all(orient_sign(a, b, c) > 0 for a, b, c in zip(pts, pts[1:], pts[2:]))


def _falling(pts: Sequence[Point]) -> bool:
    return all(b[0] > a[0] and b[1] < a[1] for a, b in zip(pts, pts[1:]))


def _rising(pts: Sequence[Point]) -> bool:
    return all(b[0] > a[0] and b[1] > a[1] for a, b in zip(pts, pts[1:]))


# coordinate transforms used by the reductions
def _reflect_y(C: Coords) -> dict[int, Point]:
    return {k: (p[0], -p[1]) for k, p in C.items()}


def _rot180(C: Coords) -> dict[int, Point]:
    return {k: (-p[0], -p[1]) for k, p in C.items()}


def _swap(C: Coords) -> dict[int, Point]:
    return {k: (p[1], p[0]) for k, p in C.items()}


# ---------------------------------------------------------------- falling path against rising path


def _ext_y(C: Coords, path: Sequence[int], x: float, slope: float) -> float:
    """Height at ``x`` of an x-monotone path extended by diagonal rays
    of the given outer slope magnitude sign (-1 for falling, +1 rising)."""
    first, last = C[path[0]], C[path[-1]]
    if x <= first[0]:
        return first[1] + slope * (x - first[0])
    if x >= last[0]:
        return last[1] + slope * (x - last[0])
    for a, b in zip(path, path[1:]):
        pa, pb = C[a], C[b]
        if pa[0] <= x <= pb[0]:
            return pa[1] + (pb[1] - pa[1]) * (x - pa[0]) / (pb[0] - pa[0])
    raise AssertionError("unreachable")


def _crossing_x(C: Coords, P: Sequence[int], Q: Sequence[int]) -> float:
    """x of the unique crossing of falling P and rising Q (both extended)."""

    def f(x):
        return _ext_y(C, P, x, -1.0) - _ext_y(C, Q, x, 1.0)

    xs = sorted({C[v][0] for v in P} | {C[v][0] for v in Q})
    vals = [f(x) for x in xs]
    if vals[0] <= 0:
        return xs[0] + vals[0] / 2.0
    if vals[-1] >= 0:
        return xs[-1] + vals[-1] / 2.0
    for (x0, f0), (x1, f1) in zip(zip(xs, vals), zip(xs[1:], vals[1:])):
        if f0 >= 0 >= f1:
            return x0 if f0 == f1 else x0 + (x1 - x0) * f0 / (f0 - f1)
    raise AssertionError("unreachable")


def _sweep_pairs(A: list[tuple[float, int]], B: list[tuple[float, int]]) -> Edges:
    """Each vertex links to the latest vertex of the other list met so far,
    sweeping in increasing key order."""
    out: Edges = set()
    events = sorted([(k, 0, v) for k, v in A] + [(k, 1, v) for k, v in B])
    last = [None, None]
    for _, side, v in events:
        other = last[1 - side]
        if other is not None and other != v:
            out.add(_e(v, other))
        last[side] = v
    return out


def _mixed_pair(C: Coords, P: Sequence[int], Q: Sequence[int]) -> Edges:
    """P falling, Q rising (x-increasing index lists)."""
    edges = _chain(P) | _chain(Q)
    ox = _crossing_x(C, P, Q)
    oy = _ext_y(C, P, ox, -1.0)
    x = lambda v: C[v][0]
    y = lambda v: C[v][1]
    # left of o: sweep rightwards; right of o: sweep leftwards
    edges |= _sweep_pairs([(x(v), v) for v in P if x(v) <= ox], [(x(v), v) for v in Q if x(v) <= ox])
    edges |= _sweep_pairs([(-x(v), v) for v in P if x(v) >= ox], [(-x(v), v) for v in Q if x(v) >= ox])
    # above o: sweep downwards; below o: sweep upwards
    edges |= _sweep_pairs([(-y(v), v) for v in P if y(v) >= oy], [(-y(v), v) for v in Q if y(v) >= oy])
    edges |= _sweep_pairs([(y(v), v) for v in P if y(v) <= oy], [(y(v), v) for v in Q if y(v) <= oy])
    return edges


# ---------------------------------------------------------------- convex path and the points beyond it


def _in_region(C: Coords, P: Sequence[int], w: Point) -> bool:
    """Closed region above a falling convex path, bounded by the leftward
    ray at its first vertex and the downward ray at its last."""
    first, last = C[P[0]], C[P[-1]]
    if w[0] < first[0]:
        return w[1] >= first[1]
    if w[0] > last[0]:
        return True
    for a, b in zip(P, P[1:]):
        pa, pb = C[a], C[b]
        if pa[0] <= w[0] <= pb[0]:
            return orient_sign(pa, pb, w) >= 0
    return w[1] >= first[1]


def _forward_regions(C: Coords, P: Sequence[int], W: Sequence[int]) -> Edges:
    """Each w joins the apex of the last perpendicular ray it lies right of."""
    out: Edges = set()
    rays = []
    for q, v in enumerate(P):
        p = C[v]
        if q == 0:
            d = (0.0, 1.0)
        else:
            pr = C[P[q - 1]]
            ex, ey = p[0] - pr[0], p[1] - pr[1]
            d = (-ey, ex)
        rays.append((p, d))
    for w in W:
        pw = C[w]
        best = None
        for q, (p, d) in enumerate(rays):
            # right of (or on) the directed ray line
            if d[0] * (pw[1] - p[1]) - d[1] * (pw[0] - p[0]) <= 0:
                best = q
        if best is not None and P[best] != w:
            out.add(_e(w, P[best]))
    return out


def _region_sweep(C: Coords, P: Sequence[int], W: Sequence[int]) -> Edges:
    for w in W:
        if not _in_region(C, P, C[w]):
            raise Width90Error(f"point {w} at {C[w]} lies outside the region above the path")
    edges = _chain(P) | _forward_regions(C, P, W)
    S = _swap(C)
    edges |= _forward_regions(S, list(reversed(P)), W)
    return edges


# ---------------------------------------------------------------- two falling paths


def _sh(p: Point) -> tuple[float, float]:
    return (p[0] - p[1], p[0] + p[1])


def _ext_h(C: Coords, path: Sequence[int], s: float, convex: bool) -> float:
    """Height (x+y) at diagonal coordinate s (x-y) of the extended curve.

    Convex falling paths get a leftward ray at the start and a downward ray
    at the end; concave falling paths an upward ray at the start and a
    rightward ray at the end.
    """
    first, last = _sh(C[path[0]]), _sh(C[path[-1]])
    lo_slope, hi_slope = (1.0, -1.0) if convex else (-1.0, 1.0)
    if s <= first[0]:
        return first[1] + lo_slope * (s - first[0])
    if s >= last[0]:
        return last[1] + hi_slope * (s - last[0])
    for a, b in zip(path, path[1:]):
        pa, pb = _sh(C[a]), _sh(C[b])
        if pa[0] <= s <= pb[0]:
            return pa[1] + (pb[1] - pa[1]) * (s - pa[0]) / (pb[0] - pa[0])
    raise AssertionError("unreachable")


def _crossings(C: Coords, P, pc: bool, Q, qc: bool) -> list[float]:
    """Sorted s-values where extended Q crosses extended P.

    A shared vertex counts when the sign of the gap changes across it.
    """

    def D(s):
        return _ext_h(C, Q, s, qc) - _ext_h(C, P, s, pc)

    ss = sorted({_sh(C[v])[0] for v in P} | {_sh(C[v])[0] for v in Q})
    span = ss[-1] - ss[0]
    big = 4.0 * (span + max(abs(D(s)) for s in ss) + 1.0)
    # the curves are linear beyond the breakpoints, so far probes fix
    # the tail signs
    ss = [ss[0] - big] + ss + [ss[-1] + big]
    vals = [D(s) for s in ss]
    tol = 1e-12 * (1.0 + big)
    sg = [0 if abs(v) <= tol else (1 if v > 0 else -1) for v in vals]
    out = []
    prev = None
    for k, (s, v, g) in enumerate(zip(ss, vals, sg)):
        if g == 0:
            nxt = next((h for h in sg[k + 1 :] if h != 0), None)
            if prev is not None and nxt is not None and prev != nxt:
                out.append(s)
            continue
        if prev is not None and g != prev and sg[k - 1] != 0:
            s0, v0 = ss[k - 1], vals[k - 1]
            out.append(s0 + (s - s0) * v0 / (v0 - v))
        prev = g
    return sorted(out)


def _vertical_sweeps(C: Coords, P: Sequence[int], Q: Sequence[int]) -> Edges:
    """Each vertex to the other path's nearest vertex on either side in x."""
    a = _sweep_pairs([(C[v][0], v) for v in P], [(C[v][0], v) for v in Q])
    b = _sweep_pairs([(-C[v][0], v) for v in P], [(-C[v][0], v) for v in Q])
    return a | b


def _same_class(C: Coords, P: Sequence[int], Q: Sequence[int]) -> Edges:
    """Two falling convex paths."""
    edges = _chain(P) | _chain(Q)
    xs = _crossings(C, P, True, Q, True)
    bounds = [-math.inf] + xs + [math.inf]
    for lo, hi in zip(bounds, bounds[1:]):
        gp = [v for v in P if lo < _sh(C[v])[0] < hi]
        gq = [v for v in Q if lo < _sh(C[v])[0] < hi]
        if not gp or not gq:
            continue
        mid = _group_probe(C, gp + gq, lo, hi)
        q_above = _ext_h(C, Q, mid, True) >= _ext_h(C, P, mid, True)
        base, top = (gp, gq) if q_above else (gq, gp)
        edges |= _region_sweep(C, base, top)
    if len(xs) > 0:
        edges |= _vertical_sweeps(C, P, Q)
    return edges


def _group_probe(C, verts, lo, hi):
    ss = [_sh(C[v])[0] for v in verts]
    return sum(ss) / len(ss)


def _opposite_curvature(C: Coords, P: Sequence[int], Q: Sequence[int]) -> Edges:
    """P falling convex, Q falling concave."""
    edges = _chain(P) | _chain(Q)
    xs = _crossings(C, P, True, Q, False)
    if not xs:
        return edges | _region_sweep(C, P, Q)
    if len(xs) != 2:
        raise Width90Error(f"convex and concave paths cross {len(xs)} times")
    o1, o2 = xs
    s = lambda v: _sh(C[v])[0]
    outer = [v for v in Q if not o1 < s(v) < o2]
    inner_q = [v for v in Q if o1 < s(v) < o2]
    inner_p = [v for v in P if o1 < s(v) < o2]
    if outer:
        edges |= _region_sweep(C, P, outer)
    mid = sorted(set(inner_p) | set(inner_q))
    if len(mid) >= 2:
        edges |= _convex_recursive(C, mid)
    edges |= _vertical_sweeps(C, P, Q)
    return edges


# ---------------------------------------------------------------- one-sided & recursive


def _one_sided(C: Coords, idx: Sequence[int], angle: float = 0.0) -> Edges:
    """Points whose hull order matches their order along direction ``angle``."""
    R = {v: rotate(C[v], -angle) for v in idx}
    order = sorted(idx, key=lambda v: R[v][0])
    pts = [R[v] for v in order]
    if any(b[0] - a[0] <= 0 for a, b in zip(pts, pts[1:])):
        raise Width90Error("direction is orthogonal to a line through two points")
    cap = _is_convex_chain(pts)
    if not cap and not _is_concave_chain(pts):
        raise Width90Error("point set is not one-sided for the given direction")
    edges = _chain(order)
    if len(order) <= 2:
        return edges
    key = (lambda v: R[v][1]) if cap else (lambda v: -R[v][1])
    apex = max(range(len(order)), key=lambda k: key(order[k]))
    pre, suf = order[: apex + 1], order[apex:]
    if len(pre) == 1 or len(suf) == 1:
        return edges
    if cap:
        return edges | _mixed_pair(R, suf, pre)
    return edges | _mixed_pair(R, pre, suf)


def _hull_order(C: Coords, idx: Sequence[int]) -> list[int]:
    """Counterclockwise hull order of a convex-position index set."""
    return list(reversed(hull_indices(C, idx)))


def _extreme(C: Coords, cyc: Sequence[int], ang: float) -> int:
    ux, uy = math.cos(math.radians(ang)), math.sin(math.radians(ang))
    return max(range(len(cyc)), key=lambda k: (C[cyc[k]][0] * ux + C[cyc[k]][1] * uy, -k))


def _arcs(C: Coords, cyc: Sequence[int], phi: float) -> list[list[int]]:
    n = len(cyc)
    E = [_extreme(C, cyc, phi + 90.0 * j) for j in range(4)]
    arcs = []
    for j in range(4):
        a, b = E[j], E[(j + 1) % 4]
        arcs.append([cyc[(a + t) % n] for t in range((b - a) % n)])
    return arcs


def _rotation_candidates(C: Coords, cyc: Sequence[int]) -> list[float]:
    n = len(cyc)
    ev = set()
    for k in range(n):
        p, q = C[cyc[k]], C[cyc[(k + 1) % n]]
        # outward normal of a ccw edge points right of its direction
        nrm = math.degrees(math.atan2(-(q[0] - p[0]), q[1] - p[1]))
        ev.add(math.fmod(normalize_angle(nrm), 90.0))
    ev = sorted(ev)
    # parallel edges give the same event up to rounding
    ev = [a for k, a in enumerate(ev) if k == 0 or a - ev[k - 1] > 1e-9]
    if ev[-1] - ev[0] > 90.0 - 1e-9 and len(ev) > 1:
        ev.pop()
    mids = [(a + b) / 2.0 for a, b in zip(ev, ev[1:])] + [(ev[-1] + ev[0] + 90.0) / 2.0]
    return sorted(math.fmod(m, 90.0) for m in mids)


def balanced_partition(C: Coords, idx: Sequence[int]) -> tuple[float, list[list[int]]]:
    """Rotation and four consecutive hull arcs, balanced when possible."""
    cyc = _hull_order(C, idx)
    n = len(cyc)
    best = None
    for phi in _rotation_candidates(C, cyc):
        arcs = _arcs(C, cyc, phi)
        m = max(len(arcs[0]) + len(arcs[2]), len(arcs[1]) + len(arcs[3]))
        if m <= n / 2 + 1:
            return phi, arcs
        if m < n and (best is None or m < best[0]):
            best = (m, phi, arcs)
    if best is None:
        raise Width90Error("no rotation splits the convex set")
    return best[1], best[2]


def _convex_recursive(C: Coords, idx: Sequence[int]) -> Edges:
    idx = list(idx)
    if len(idx) <= 3:
        return {_e(a, b) for a, b in combinations(idx, 2)}
    phi, arcs = balanced_partition(C, idx)
    edges: Edges = set()
    for j in range(4):
        part = arcs[j] + arcs[(j + 1) % 4]
        if len(part) >= 2:
            edges |= _one_sided(C, part, phi + 90.0 * j)
    for sub in (arcs[0] + arcs[2], arcs[1] + arcs[3]):
        if len(sub) >= 2:
            edges |= _convex_recursive(C, sub)
    return edges


# ---------------------------------------------------------------- assembly helpers


def partition_convex_subsets(points: Sequence[Point]) -> list[list[int]]:
    """Peel maximum convex subsets until nothing is left."""
    rest = list(range(len(points)))
    out = []
    while rest:
        sub = largest_convex_subset([points[i] for i in rest])
        chosen = sorted(rest[k] for k in sub)
        out.append(chosen)
        taken = set(chosen)
        rest = [i for i in rest if i not in taken]
    return out


def _four_chains(C: Coords, idx: Sequence[int]) -> list[tuple[list[int], PathClass]]:
    """Split a convex polygon at its x/y extremes into x-increasing chains."""
    if len(idx) == 1:
        return [([idx[0]], PathClass.NONE)]
    if len(idx) == 2:
        a, b = sorted(idx, key=lambda v: C[v][0])
        return [([a, b], PathClass.XY_MONOTONE if C[b][1] > C[a][1] else PathClass.XNY_MONOTONE)]
    cw = hull_indices(C, idx)
    n = len(cw)
    pos = {v: k for k, v in enumerate(cw)}
    L = min(cw, key=lambda v: C[v][0])
    T = max(cw, key=lambda v: C[v][1])
    Rt = max(cw, key=lambda v: C[v][0])
    B = min(cw, key=lambda v: C[v][1])

    def cw_walk(a, b):
        out = [a]
        k = pos[a]
        while cw[k] != b:
            k = (k + 1) % n
            out.append(cw[k])
        return out

    upper_left = cw_walk(L, T)
    upper_right = cw_walk(T, Rt)
    lower_right = list(reversed(cw_walk(Rt, B)))
    lower_left = list(reversed(cw_walk(B, L)))
    return [
        (upper_left, PathClass.XY_CONVEX),
        (upper_right, PathClass.XNY_CONVEX),
        (lower_right, PathClass.XY_CONCAVE),
        (lower_left, PathClass.XNY_CONCAVE),
    ]


def decompose_four_paths(points: Sequence[Point]) -> list[ClassifiedPath]:
    C = dict(enumerate(points))
    if not in_strict_convex_position(list(points)):
        raise Width90Error("points are not in strictly convex position")
    return [ClassifiedPath(tuple(C[v] for v in ch), cls) for ch, cls in _four_chains(C, list(range(len(points))))]


def _pair_edges(C: Coords, A: list[int], B: list[int]) -> Edges:
    """Width-90 edges for two x-increasing monotone chains."""
    if len(A) == 1 and len(B) == 1:
        return {_e(A[0], B[0])} if A[0] != B[0] else set()
    pa = [C[v] for v in A]
    pb = [C[v] for v in B]
    ra = _rising(pa) if len(A) > 1 else not (len(B) > 1 and _rising(pb))
    rb = _rising(pb) if len(B) > 1 else not ra
    if ra != rb:
        P, Q = (B, A) if ra else (A, B)
        return _mixed_pair(C, P, Q)
    D = _reflect_y(C) if ra else C
    ca, cb = _is_convex_chain([D[v] for v in A]), _is_convex_chain([D[v] for v in B])
    if ca and cb:
        return _same_class(D, A, B)
    if not ca and not cb:
        R = _rot180(D)
        return _same_class(R, list(reversed(A)), list(reversed(B)))
    return _opposite_curvature(D, A, B) if ca else _opposite_curvature(D, B, A)


# ---------------------------------------------------------------- public builders


def _graph(points: Sequence[Point], edges: Edges) -> GeometricGraph:
    return GeometricGraph.from_edges(points, edges)


def _concat(*paths: Sequence[Point]) -> tuple[list[Point], list[list[int]]]:
    pts: list[Point] = []
    where: dict[Point, int] = {}
    out = []
    for path in paths:
        ids = []
        for p in path:
            p = (float(p[0]), float(p[1]))
            if p not in where:
                where[p] = len(pts)
                pts.append(p)
            ids.append(where[p])
        out.append(ids)
    return pts, out


def _require(pts, cond, what):
    if not cond:
        raise Width90Error(f"expected {what}")


def build_lemma1(P: Sequence[Point], Q: Sequence[Point]) -> GeometricGraph:
    """P falling (x up, y down), Q rising."""
    pts, (ip, iq) = _concat(P, Q)
    C = dict(enumerate(pts))
    _require(pts, len(P) == 1 or _falling([C[v] for v in ip]), "an X(-Y)-monotone first path")
    _require(pts, len(Q) == 1 or _rising([C[v] for v in iq]), "an XY-monotone second path")
    return _graph(pts, _mixed_pair(C, ip, iq))


def build_lemma2(P: Sequence[Point], W: Sequence[Point]) -> GeometricGraph:
    pts, (ip, iw) = _concat(P, W)
    C = dict(enumerate(pts))
    _require(pts, _falling([C[v] for v in ip]) and _is_convex_chain([C[v] for v in ip]), "an X(-Y)-convex path")
    return _graph(pts, _region_sweep(C, ip, iw))


def build_lemma3(P: Sequence[Point], Q: Sequence[Point]) -> GeometricGraph:
    pts, (ip, iq) = _concat(P, Q)
    C = dict(enumerate(pts))
    for ids in (ip, iq):
        _require(pts, _falling([C[v] for v in ids]), "X(-Y)-monotone paths")
    cp = [_is_convex_chain([C[v] for v in ids]) for ids in (ip, iq)]
    cc = [_is_concave_chain([C[v] for v in ids]) for ids in (ip, iq)]
    if all(cp):
        return _graph(pts, _same_class(C, ip, iq))
    if all(cc):
        return _graph(pts, _same_class(_rot180(C), list(reversed(ip)), list(reversed(iq))))
    raise Width90Error("expected two X(-Y)-convex or two X(-Y)-concave paths")


def build_lemma4(P: Sequence[Point], Q: Sequence[Point]) -> GeometricGraph:
    pts, (ip, iq) = _concat(P, Q)
    C = dict(enumerate(pts))
    _require(pts, _falling([C[v] for v in ip]) and _is_convex_chain([C[v] for v in ip]), "an X(-Y)-convex path")
    _require(pts, _falling([C[v] for v in iq]) and _is_concave_chain([C[v] for v in iq]), "an X(-Y)-concave path")
    return _graph(pts, _opposite_curvature(C, ip, iq))


def build_one_sided(points: Sequence[Point], angle: float = 0.0) -> GeometricGraph:
    C = dict(enumerate((float(p[0]), float(p[1])) for p in points))
    return _graph(list(C.values()), _one_sided(C, list(C), angle))


def build_convex_recursive(points: Sequence[Point]) -> GeometricGraph:
    pts = [(float(p[0]), float(p[1])) for p in points]
    if not in_strict_convex_position(pts):
        raise Width90Error("points are not in strictly convex position")
    return _graph(pts, _convex_recursive(dict(enumerate(pts)), list(range(len(pts)))))


def build_width90(points: Sequence[Point]) -> GeometricGraph:
    """Every pair of input points gets a path of width at most 90 degrees."""
    pts = [(float(p[0]), float(p[1])) for p in points]
    check_distinct(pts)
    n = len(pts)
    if n <= 1:
        return _graph(pts, set())
    rot = general_position_rotation(pts)
    C = {i: rotate(p, rot) for i, p in enumerate(pts)}
    subsets = partition_convex_subsets([C[i] for i in range(n)])
    chains = [ch for sub in subsets for ch, _ in _four_chains(C, sub)]
    edges: Edges = set()
    for ch in chains:
        edges |= _chain(ch)
    for A, B in combinations(chains, 2):
        edges |= _pair_edges(C, A, B)
    return _graph(pts, edges)


# ---------------------------------------------------------------- sqrt-marking


def build_sqrt_alpha(points: Sequence[Point], alpha: float) -> GeometricGraph:
    """Rounds of marking about sqrt(m) of the m unmarked points."""
    t = 360.0 / (2.0 * alpha)
    if not 0 < alpha <= 90 or abs(t - round(t)) > 1e-9:
        raise Width90Error(f"360/(2*alpha) must be an integer, got alpha={alpha}")
    t = round(t)
    pts = [(float(p[0]), float(p[1])) for p in points]
    check_distinct(pts)
    unmarked = list(range(len(pts)))
    edges: Edges = set()
    while unmarked:
        m = len(unmarked)
        r = math.isqrt(m - 1) + 1 if m > 1 else 1
        R, unmarked = unmarked[:r], unmarked[r:]
        edges |= {_e(a, b) for a, b in combinations(R, 2)}
        for q in unmarked:
            edges |= {_e(q, w) for w in _bisector_nearest(pts, q, R, alpha, t)}
    return _graph(pts, edges)


def _bisector_nearest(pts, q, R, alpha, t):
    from .geometry import angle_in_range, direction

    out = []
    for j in range(t):
        start = 2.0 * alpha * j
        bis = math.radians(start + alpha)
        ux, uy = math.cos(bis), math.sin(bis)
        best = None
        for w in R:
            if not angle_in_range(direction(pts[q], pts[w]), start, 2.0 * alpha):
                continue
            key = ((pts[w][0] - pts[q][0]) * ux + (pts[w][1] - pts[q][1]) * uy, w)
            if best is None or key < best:
                best = key
        if best is not None:
            out.append(best[1])
    return out
