"""Width verification that trusts nothing from the constructions.

A path of width gamma exists from s to t iff, for some closed wedge of
extent gamma, t is reachable from s using only directed edges whose
direction lies in the wedge. A minimal wedge can always be taken to start
at one of the path's own edge directions, so only edge angles need to be
tried as wedge starts.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .geograph import GeometricGraph
from .geometry import Point, ccw_offset, direction, minimal_cover_width

WIDTH_TOL = 1e-7


class OracleError(ValueError):
    pass


def path_width(path: Sequence[Point]) -> float:
    if len(path) < 2:
        raise OracleError("path_width needs at least two vertices")
    return minimal_cover_width(direction(a, b) for a, b in zip(path, path[1:]))


def trace_width(g: GeometricGraph, verts: Sequence[int]) -> float:
    if len(verts) < 2:
        return 0.0
    return path_width([g.points[v] for v in verts])


def directed_edges(g: GeometricGraph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    src, dst, ang = [], [], []
    for i, j in g.sorted_edges():
        a = direction(g.points[i], g.points[j])
        src += [i, j]
        dst += [j, i]
        ang += [a, direction(g.points[j], g.points[i])]
    return (np.asarray(src, dtype=np.int64), np.asarray(dst, dtype=np.int64), np.asarray(ang, dtype=float))


def _reach_in_wedge(g, s, start, gamma, tol, adj_dir):
    seen = {s}
    stack = [s]
    while stack:
        u = stack.pop()
        for v, a in adj_dir[u]:
            if v in seen:
                continue
            off = ccw_offset(start, a)
            if off <= gamma + tol or off >= 360.0 - tol:
                seen.add(v)
                stack.append(v)
    return seen


def _adj_dir(g: GeometricGraph):
    adj = [[] for _ in range(g.n)]
    for i, j in g.edges:
        adj[i].append((j, direction(g.points[i], g.points[j])))
        adj[j].append((i, direction(g.points[j], g.points[i])))
    return adj


def has_width_path(g: GeometricGraph, s: int, t: int, gamma: float, tol: float = WIDTH_TOL) -> bool:
    """Fresh directed search per candidate wedge start."""
    if s == t:
        raise OracleError("has_width_path needs s != t")
    adj = _adj_dir(g)
    starts = sorted({a for row in adj for _, a in row})
    return any(t in _reach_in_wedge(g, s, a0, gamma, tol, adj) for a0 in starts)


def _reach_chunk(args):
    n, src, dst, ang, gamma, tol, anchors = args
    return kernels.width_reach_matrix(n, src, dst, ang, gamma, tol, anchors)


def width_reach(g: GeometricGraph, gamma: float, tol: float = WIDTH_TOL, jobs: int = 1) -> np.ndarray:
    """Boolean matrix: ``[s, t]`` iff a width-``gamma`` path s->t exists.

    With ``jobs > 1`` the wedge anchors are split across processes and the
    partial matrices OR-ed, so the result does not depend on ``jobs``.
    """
    n = g.n
    if n == 0:
        return np.zeros((0, 0), dtype=bool)
    src, dst, ang = directed_edges(g)
    if len(src) == 0:
        return np.eye(n, dtype=bool)
    if gamma + 2 * tol < 180.0:
        if jobs <= 1:
            return kernels.width_reach_matrix(n, src, dst, ang, float(gamma), float(tol))
        anchors = np.unique(ang)
        parts = [anchors[k::jobs] for k in range(jobs) if len(anchors[k::jobs])]
        tasks = [(n, src, dst, ang, float(gamma), float(tol), a) for a in parts]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            out = np.eye(n, dtype=bool)
            for m in ex.map(_reach_chunk, tasks):
                out |= m
        return out
    # wide wedges admit cycles; plain search per anchor
    adj = _adj_dir(g)
    out = np.eye(n, dtype=bool)
    for a0 in sorted(set(ang.tolist())):
        for s in range(n):
            for v in _reach_in_wedge(g, s, a0, gamma, tol, adj):
                out[s, v] = True
    return out


def min_width_all(g: GeometricGraph) -> np.ndarray:
    """All-pairs minimal width; ``inf`` where unreachable."""
    n = g.n
    src, dst, ang = directed_edges(g)
    if len(src) == 0:
        m = np.full((n, n), math.inf)
        np.fill_diagonal(m, 0.0)
        return m
    return kernels.min_width_matrix(n, src, dst, ang)


def min_path_width(g: GeometricGraph, s: int, t: int) -> float:
    """Smallest gamma admitting a width-gamma path from s to t.

    Candidate widths are the ccw spans between directed-edge angles; the
    answer is the least candidate for which the search succeeds.
    """
    if s == t:
        return 0.0
    adj = _adj_dir(g)
    angs = sorted({a for row in adj for _, a in row})
    cands = sorted({ccw_offset(a, b) for a in angs for b in angs})
    lo, hi = 0, len(cands) - 1
    if not cands or not _any_wedge(adj, angs, s, t, cands[hi]):
        raise OracleError(f"vertices {s} and {t} are disconnected")
    while lo < hi:
        mid = (lo + hi) // 2
        if _any_wedge(adj, angs, s, t, cands[mid]):
            hi = mid
        else:
            lo = mid + 1
    return cands[lo]


def _any_wedge(adj, angs, s, t, gamma):
    for a0 in angs:
        if t in _reach_exact(adj, s, a0, gamma):
            return True
    return False


def _reach_exact(adj, s, start, gamma):
    seen = {s}
    stack = [s]
    while stack:
        u = stack.pop()
        for v, a in adj[u]:
            if v not in seen and ccw_offset(start, a) <= gamma:
                seen.add(v)
                stack.append(v)
    return seen


def brute_force_min_width(g: GeometricGraph, s: int, t: int) -> float:
    """Minimum path width over every simple s-t path (tiny graphs only)."""
    if s == t:
        return 0.0
    best = math.inf
    adj = g.adjacency
    pts = g.points
    stack = [(s, [s])]
    while stack:
        u, path = stack.pop()
        for v in adj[u]:
            if v in path:
                continue
            p = path + [v]
            if v == t:
                best = min(best, path_width([pts[i] for i in p]))
            else:
                stack.append((v, p))
    if math.isinf(best):
        raise OracleError(f"vertices {s} and {t} are disconnected")
    return best


@dataclass
class WidthReport:
    gamma: float
    graph_width: float
    worst_pair: tuple[int, int] | None
    passed: bool
    failing_pair: tuple[int, int] | None = None
    per_pair: dict[tuple[int, int], float] | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        d = {
            "gamma": self.gamma,
            "passed": self.passed,
            "graph_width": self.graph_width,
            "worst_pair": list(self.worst_pair) if self.worst_pair else None,
            "failing_pair": list(self.failing_pair) if self.failing_pair else None,
        }
        if self.per_pair is not None:
            d["per_pair"] = [[s, t, w] for (s, t), w in sorted(self.per_pair.items())]
        return d


def _default_pairs(g: GeometricGraph) -> list[tuple[int, int]]:
    return list(combinations(range(g.steiner_from), 2))


def verify_graph_width(
    g: GeometricGraph,
    gamma: float,
    pairs: Iterable[tuple[int, int]] | None = None,
    per_pair: bool = False,
    tol: float = WIDTH_TOL,
    jobs: int = 1,
) -> WidthReport:
    """Check every requested pair for a width-``gamma`` path.

    Pairs are unordered: reversing a path preserves its width. With
    ``per_pair`` the minimal width of every pair is also computed, and
    ``graph_width`` is their maximum; otherwise ``graph_width`` is
    ``gamma`` on success and ``inf`` on failure.
    """
    plist = _default_pairs(g) if pairs is None else [tuple(p) for p in pairs]
    reach = width_reach(g, gamma, tol, jobs)
    failing = next(((s, t) for s, t in plist if not reach[s, t]), None)
    if not per_pair:
        return WidthReport(
            gamma=gamma,
            graph_width=gamma if failing is None else math.inf,
            worst_pair=failing,
            passed=failing is None,
            failing_pair=failing,
        )
    mw = min_width_all(g)
    table = {(s, t): float(mw[s, t]) for s, t in plist}
    worst = max(table, key=lambda p: (table[p], -p[0], -p[1])) if table else None
    gw = table[worst] if worst else 0.0
    return WidthReport(gamma, gw, worst, failing is None, failing, table)
