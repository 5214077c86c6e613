"""Geometric graph container, structural metrics and file formats."""

from __future__ import annotations

import heapq
import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .geometry import Point, check_distinct, dist, segments_cross


class GraphError(ValueError):
    pass


class ParseError(ValueError):
    pass


def _norm_edge(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class GeometricGraph:
    points: tuple[Point, ...]
    edges: frozenset[tuple[int, int]]
    steiner_from: int = -1

    def __post_init__(self):
        pts = tuple((float(p[0]), float(p[1])) for p in self.points)
        object.__setattr__(self, "points", pts)
        n = len(pts)
        es = set()
        for e in self.edges:
            i, j = int(e[0]), int(e[1])
            if i == j:
                raise GraphError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"edge {e} out of range for {n} points")
            es.add(_norm_edge(i, j))
        object.__setattr__(self, "edges", frozenset(es))
        if self.steiner_from < 0:
            object.__setattr__(self, "steiner_from", n)
        if not 0 <= self.steiner_from <= n:
            raise GraphError("steiner_from out of range")

    @classmethod
    def from_edges(cls, points: Sequence[Point], edges: Iterable[tuple[int, int]], steiner_from: int = -1):
        return cls(tuple(points), frozenset(_norm_edge(i, j) for i, j in edges if i != j), steiner_from)

    @property
    def n(self) -> int:
        return len(self.points)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in self.points]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return tuple(frozenset(a) for a in adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_steiner(self, v: int) -> bool:
        return v >= self.steiner_from

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "GeometricGraph":
        return GeometricGraph.from_edges(self.points, edges, self.steiner_from)


def empty_graph(points: Sequence[Point]) -> GeometricGraph:
    return GeometricGraph.from_edges(points, [])


def union_graphs(graphs: Sequence[GeometricGraph]) -> GeometricGraph:
    if not graphs:
        raise GraphError("union of no graphs")
    first = graphs[0]
    edges = set(first.edges)
    for g in graphs[1:]:
        if g.points != first.points or g.steiner_from != first.steiner_from:
            raise GraphError("union_graphs requires identical point lists")
        edges |= g.edges
    return GeometricGraph(first.points, frozenset(edges), first.steiner_from)


def check_planarity(g: GeometricGraph) -> tuple[int, int] | None:
    """Return ``None`` when the straight-line drawing is crossing-free,
    else one offending pair of edges."""
    es = g.sorted_edges()
    pts = g.points
    # sort by x-extent to skip clearly disjoint pairs
    boxes = sorted(
        ((min(pts[i][0], pts[j][0]), max(pts[i][0], pts[j][0]), (i, j)) for i, j in es),
    )
    for a in range(len(boxes)):
        x0, x1, e = boxes[a]
        p, q = pts[e[0]], pts[e[1]]
        ylo, yhi = sorted((p[1], q[1]))
        for b in range(a + 1, len(boxes)):
            y0, y1, f = boxes[b]
            if y0 > x1:
                break
            r, s = pts[f[0]], pts[f[1]]
            if max(r[1], s[1]) < ylo or min(r[1], s[1]) > yhi:
                continue
            if segments_cross(p, q, r, s):
                return (e, f)
    return None


def is_planar(g: GeometricGraph) -> bool:
    return check_planarity(g) is None


def dijkstra(g: GeometricGraph, source: int) -> list[float]:
    pts = g.points
    d = [math.inf] * g.n
    d[source] = 0.0
    heap = [(0.0, source)]
    adj = g.adjacency
    while heap:
        du, u = heapq.heappop(heap)
        if du > d[u]:
            continue
        for v in adj[u]:
            nd = du + dist(pts[u], pts[v])
            if nd < d[v]:
                d[v] = nd
                heapq.heappush(heap, (nd, v))
    return d


def spanning_ratio(g: GeometricGraph) -> float:
    """Max over non-Steiner pairs of graph distance / Euclidean distance."""
    m = g.steiner_from
    worst = 1.0 if m >= 2 else 1.0
    for s in range(m):
        d = dijkstra(g, s)
        for t in range(s + 1, m):
            if math.isinf(d[t]):
                raise GraphError(f"vertices {s} and {t} are disconnected")
            r = d[t] / dist(g.points[s], g.points[t])
            if r > worst:
                worst = r
    return worst


def path_length(points: Sequence[Point], path: Sequence[int]) -> float:
    return sum(dist(points[a], points[b]) for a, b in zip(path, path[1:]))


def hop_distances(g: GeometricGraph, source: int, limit: int | None = None) -> dict[int, int]:
    seen = {source: 0}
    frontier = [source]
    depth = 0
    while frontier and (limit is None or depth < limit):
        depth += 1
        nxt = []
        for u in frontier:
            for v in g.adjacency[u]:
                if v not in seen:
                    seen[v] = depth
                    nxt.append(v)
        frontier = nxt
    return seen


def hop_diameter(g: GeometricGraph) -> float:
    best = 0
    for s in range(g.n):
        h = hop_distances(g, s)
        if len(h) < g.n:
            return math.inf
        best = max(best, max(h.values()))
    return best


@dataclass(frozen=True)
class LocalView:
    """Induced subgraph within ``radius`` hops of ``center``.

    ``points`` maps each visible vertex to its coordinates; ``adj`` holds the
    induced adjacency. Nothing outside the ball is reachable from here.
    """

    center: int
    radius: int
    points: dict[int, Point]
    adj: dict[int, frozenset[int]] = field(repr=False)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.points)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(_norm_edge(u, v) for u, ns in self.adj.items() for v in ns)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj.get(v, frozenset())


def local_view(g: GeometricGraph, v: int, radius: int = 2) -> LocalView:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    ball = hop_distances(g, v, radius)
    adj = {u: frozenset(w for w in g.adjacency[u] if w in ball) for u in ball}
    return LocalView(v, radius, {u: g.points[u] for u in ball}, adj)


# ---------------------------------------------------------------- file formats


def format_graph(g: GeometricGraph) -> str:
    doc = {
        "points": [[p[0], p[1]] for p in g.points],
        "edges": [[i, j] for i, j in g.sorted_edges()],
        "steiner_from": g.steiner_from,
    }
    return json.dumps(doc, separators=(",", ": ")) + "\n"


def parse_graph(text: str) -> GeometricGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError("graph document must be a JSON object")
    for key in ("points", "edges"):
        if key not in doc:
            raise ParseError(f"missing field '{key}'")
    pts = []
    for k, p in enumerate(doc["points"]):
        if not (isinstance(p, list) and len(p) == 2 and all(isinstance(c, (int, float)) for c in p)):
            raise ParseError(f"points[{k}]: expected [x, y]")
        pts.append((float(p[0]), float(p[1])))
    edges = []
    for k, e in enumerate(doc["edges"]):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(c, int) for c in e)):
            raise ParseError(f"edges[{k}]: expected [i, j]")
        if not e[0] < e[1]:
            raise ParseError(f"edges[{k}]: expected i < j")
        edges.append((e[0], e[1]))
    sf = doc.get("steiner_from", len(pts))
    if not isinstance(sf, int):
        raise ParseError("steiner_from: expected integer")
    try:
        return GeometricGraph.from_edges(pts, edges, sf)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def write_graph(g: GeometricGraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(g))


def read_graph(path) -> GeometricGraph:
    with open(path) as fh:
        return parse_graph(fh.read())


def roundtrip(g: GeometricGraph) -> GeometricGraph:
    return parse_graph(format_graph(g))


def format_points(points: Sequence[Point]) -> str:
    return "".join(f"{p[0]!r} {p[1]!r}\n" for p in points)


def parse_points(text: str) -> list[Point]:
    pts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        fields = s.split()
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected two numbers, got {len(fields)} fields")
        try:
            pts.append((float(fields[0]), float(fields[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: not a number") from None
    try:
        check_distinct(pts)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return pts


def read_points(path) -> list[Point]:
    with open(path) as fh:
        return parse_points(fh.read())


def write_points(points: Sequence[Point], path) -> None:
    with open(path, "w") as fh:
        fh.write(format_points(points))


def render_svg(g: GeometricGraph, route: Sequence[int] | None = None, size: float = 600.0) -> str:
    """SVG 1.1 drawing: edges as lines, vertices as circles, Steiner points
    as small squares, optional route as a highlighted polyline."""
    pts = g.points
    if pts:
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    else:
        x0 = y0 = 0.0
        x1 = y1 = 1.0
    span = max(x1 - x0, y1 - y0, 1e-12)
    pad = 20.0
    k = (size - 2 * pad) / span

    def tx(p):
        # flip y so the picture is in the usual orientation
        return pad + (p[0] - x0) * k, size - pad - (p[1] - y0) * k

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size:g}" height="{size:g}" '
        f'viewBox="0 0 {size:g} {size:g}">',
        '<g stroke="#555" stroke-width="1">',
    ]
    for i, j in g.sorted_edges():
        (ax, ay), (bx, by) = tx(pts[i]), tx(pts[j])
        out.append(f'<line x1="{ax:.3f}" y1="{ay:.3f}" x2="{bx:.3f}" y2="{by:.3f}"/>')
    out.append("</g>")
    if route:
        coords = " ".join("{:.3f},{:.3f}".format(*tx(pts[v])) for v in route)
        out.append(f'<polyline points="{coords}" fill="none" stroke="#d62728" stroke-width="3"/>')
    out.append('<g fill="#1f77b4">')
    for v, p in enumerate(pts):
        x, y = tx(p)
        if g.is_steiner(v):
            out.append(f'<rect class="steiner" x="{x - 2:.3f}" y="{y - 2:.3f}" width="4" height="4" fill="#2ca02c"/>')
        else:
            out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
