"""Local routing on layered 3-sweep graphs.

The router never touches the host graph directly. Each step receives a
``LocalView`` around the current vertex plus the target's coordinates and
decides the next hop from that alone. The Θ6 variant gets by with a 1-hop
view.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable

from .geograph import GeometricGraph, LocalView, local_view, path_length
from .geometry import EPS_ANGLE, Line, Point, ccw_offset, direction, dist
from .oracle import trace_width
from .sweep import KINDS, LayeredConfig, LayeredGraph, SweepFrame, in_wedge, nearest_in_wedge, sweep_distance


class RoutingError(RuntimeError):
    pass


def routing_ratio_bound(alpha: float) -> float:
    return 1.0 / math.cos(math.radians(45.0 + alpha / 2.0))


def select_layer(q: Point, t: Point, k: int) -> int:
    """Lowest layer whose a-wedge at ``q`` contains ``t``."""
    if tuple(q) == tuple(t):
        raise RoutingError("select_layer needs distinct points")
    cfg = LayeredConfig(k)
    for i in range(1, k + 1):
        if in_wedge(q, t, cfg.frame(i), "a"):
            return i
    raise RoutingError(f"no layer contains direction {q} -> {t}")


def strictly_inside(q: Point, p: Point, frame: SweepFrame, kind: str) -> bool:
    off = ccw_offset(frame.start(kind), direction(q, p))
    return EPS_ANGLE < off < frame.extent(kind) - EPS_ANGLE


def _nearest(view: LocalView, u: int, frame: SweepFrame, kind: str, exclude: int | None = None):
    cands = [w for w in view.neighbors(u) if w != exclude]
    return nearest_in_wedge(view.points, u, frame, kind, cands)


def edge_in_layer(view: LocalView, u: int, v: int, frame: SweepFrame) -> bool:
    """Whether edge ``uv`` of the host graph belongs to the layer with ``frame``.

    Either v is u's nearest in one of u's positive wedges, or u is v's
    nearest in one of v's. The second test reads v's neighbors, which sit
    two hops from the view center.
    """
    if v not in view.neighbors(u):
        raise RoutingError(f"{v} is not a neighbor of {u} in the view")
    P = view.points
    for kind in KINDS:
        if in_wedge(P[u], P[v], frame, kind) and _nearest(view, u, frame, kind) == v:
            return True
        if in_wedge(P[v], P[u], frame, kind) and _nearest(view, v, frame, kind) == u:
            return True
    return False


def edge_in_layer_1local(view: LocalView, u: int, v: int, frame: SweepFrame) -> bool:
    """Same decision for a full six-cone graph using u's neighbors only.

    If u sits in v's wedge of kind x, then u is v's nearest there iff the
    sweep triangle of v up to u holds no other vertex. That triangle is
    covered by sweep triangles of u's two other positive wedges, each
    truncated at v, and a non-empty sweep triangle always contains u's
    nearest neighbor in that wedge.
    """
    if v not in view.neighbors(u):
        raise RoutingError(f"{v} is not a neighbor of {u} in the view")
    P = view.points
    for kind in KINDS:
        if in_wedge(P[u], P[v], frame, kind) and _nearest(view, u, frame, kind) == v:
            return True
    for kind in KINDS:
        if not in_wedge(P[v], P[u], frame, kind):
            continue
        blocked = False
        for other in KINDS:
            if other == kind:
                continue
            x = _nearest(view, u, frame, other, exclude=v)
            if x is None:
                continue
            if sweep_distance(P[u], P[x], frame, other) <= sweep_distance(P[u], P[v], frame, other) + 1e-9:
                blocked = True
                break
        if not blocked:
            return True
    return False


@dataclass(frozen=True)
class RouteState:
    current: int
    target: int
    layer: int
    mode: str
    frame: SweepFrame


@dataclass(frozen=True)
class Step:
    mode: str
    case: str
    kind: str
    d_a: float
    d_b: float


@dataclass
class RouteTrace:
    vertices: list[int]
    steps: list[Step]
    layer: int
    side: str
    progress: list[tuple[float, float]] = field(default_factory=list)
    width_deg: float = 0.0
    stretch: float = 1.0

    def to_dict(self) -> dict:
        return {
            "path": list(self.vertices),
            "steps": [
                {"mode": s.mode, "case": s.case, "kind": s.kind, "d_a": s.d_a, "d_b": s.d_b} for s in self.steps
            ],
            "width_deg": self.width_deg,
            "stretch": self.stretch,
        }


def progress(u: Point, t: Point, frame: SweepFrame, side: str) -> tuple[float, float]:
    """``(d_a, d_b)``: distance from u to the line through t parallel to
    the a-sweep line, and from t to the near boundary line of ``W_{u,a}``."""
    d_a = sweep_distance(u, t, frame, "a")
    if side == "right":
        d_b = -Line(u, frame.start("a") + frame.extent("a")).signed_distance(t)
    else:
        d_b = Line(u, frame.start("a")).signed_distance(t)
    return d_a, d_b


EdgeTest = Callable[[LocalView, int, int, SweepFrame], bool]


def route_step(view: LocalView, state: RouteState, t: Point, edge_test: EdgeTest = edge_in_layer):
    """One forwarding decision. Returns ``(next_vertex, new_state, case, kind)``;
    ``next_vertex`` is ``None`` once the target is reached."""
    u = state.current
    if u == state.target:
        return None, state, "done", ""
    if view.center != u:
        raise RoutingError("view is not centered on the current vertex")
    P = view.points
    f = state.frame
    mode = state.mode
    if mode == "climb":
        if strictly_inside(P[u], t, f, "a"):
            v = _nearest(view, u, f, "a")
            if v is None:
                raise RoutingError(f"empty a-wedge at {u} during climb")
            return v, replace(state, current=v), "climb", "a"
        if in_wedge(t, P[u], f, "b"):
            mode = "left"
        elif in_wedge(t, P[u], f, "c"):
            mode = "right"
        else:
            raise RoutingError(f"vertex {u} lies in neither lower wedge of the target")
    side = "b" if mode == "left" else "c"
    # candidates sit in u's cone opposite W_{u,side}; order them starting
    # from the cone boundary that faces away from the a-wedge
    if mode == "left":
        ref = f.start("b") + 180.0 + f.extent("b")
    else:
        ref = f.start("c") + 180.0
    best = None
    for v in sorted(view.neighbors(u)):
        if v != state.target and not in_wedge(t, P[v], f, side):
            continue
        if not in_wedge(P[v], P[u], f, side):
            continue
        if not edge_test(view, u, v, f):
            continue
        if mode == "left":
            key = (ref - direction(P[u], P[v])) % 360.0
        else:
            key = (direction(P[u], P[v]) - ref) % 360.0
        if key > 180.0:
            key -= 360.0
        if best is None or key < best[0]:
            best = (key, v)
    if best is not None:
        v = best[1]
        return v, replace(state, current=v, mode=mode), "case1", side
    v = _nearest(view, u, f, "a")
    if v is None:
        raise RoutingError(f"no legal move at {u} in {mode} mode")
    return v, replace(state, current=v, mode=mode), "case2", "a"


def _route(
    g: GeometricGraph, q: int, t: int, cfg: LayeredConfig, radius: int, edge_test: EdgeTest
) -> RouteTrace:
    pts = g.points
    if q == t:
        return RouteTrace([q], [], 0, "none", [(0.0, 0.0)], 0.0, 1.0)
    layer = select_layer(pts[q], pts[t], cfg.k)
    frame = cfg.frame(layer)
    state = RouteState(q, t, layer, "climb", frame)
    verts = [q]
    raw: list[tuple[str, str]] = []
    guard = g.n + len(g.edges)
    while state.current != t:
        if len(raw) > guard:
            raise RoutingError(f"route {q}->{t} exceeded {guard} steps: {verts}")
        view = local_view(g, state.current, radius)
        v, state, case, kind = route_step(view, state, pts[t], edge_test)
        verts.append(v)
        raw.append((case, kind))
    side = state.mode if state.mode != "climb" else "left"
    prog = [progress(pts[v], pts[t], frame, side) for v in verts]
    steps = [
        Step("climb" if c == "climb" else side, c, k, prog[i + 1][0], prog[i + 1][1]) for i, (c, k) in enumerate(raw)
    ]
    w = trace_width(g, verts)
    st = path_length(pts, verts) / dist(pts[q], pts[t])
    return RouteTrace(verts, steps, layer, side, prog, w, st)


def route(h: LayeredGraph, q: int, t: int) -> RouteTrace:
    """Route from q to t on the layered graph with 2-hop views."""
    return _route(h.graph, q, t, h.cfg, 2, edge_in_layer)


def route_theta6_1local(g: GeometricGraph, q: int, t: int) -> RouteTrace:
    """Route on a full six-cone graph seeing only 1-hop views."""
    return _route(g, q, t, LayeredConfig(6), 1, edge_in_layer_1local)


def check_trace(tr: RouteTrace, g: GeometricGraph, alpha: float, tol_w: float = 1e-7, tol_s: float = 1e-9) -> list[str]:
    """Problems found in a trace; empty when it meets every guarantee."""
    problems = []
    sums = [a + b for a, b in tr.progress]
    for i in range(1, len(sums)):
        if not sums[i] < sums[i - 1]:
            problems.append(f"progress did not decrease at step {i}")
    if tr.width_deg > 90.0 + alpha + tol_w:
        problems.append(f"width {tr.width_deg} exceeds {90 + alpha}")
    if tr.stretch > routing_ratio_bound(alpha) + tol_s:
        problems.append(f"stretch {tr.stretch} exceeds bound")
    kinds = {s.kind for s in tr.steps}
    if {"b", "c"} <= kinds:
        problems.append("trace mixes b- and c-edges")
    for a, b in zip(tr.vertices, tr.vertices[1:]):
        if b not in g.adjacency[a]:
            problems.append(f"{a}-{b} is not an edge")
    return problems
