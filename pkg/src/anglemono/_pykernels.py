"""Pure-Python (numpy-assisted) versions of the hot kernels.

Behaviour must match ``_ckernels.pyx`` exactly; tests compare the two.
"""

from __future__ import annotations

import heapq
import math

import numpy as np

EPS_ORIENT = 1e-9


def _ccw(start, a):
    d = a - start
    if d < 0.0:
        d += 360.0
    return d


def largest_convex_subset(points):
    P = np.asarray(points, dtype=float)
    n = len(P)
    if n <= 2:
        return list(range(n))
    s = max(1.0, float(np.abs(P).max()))
    eps = EPS_ORIENT * s * s
    best_size, best_set = 2, [0, 1]
    for a in range(n):
        ax, ay = P[a]
        above = [i for i in range(n) if P[i, 1] > ay or (P[i, 1] == ay and P[i, 0] > ax)]
        m = len(above)
        if m + 1 <= best_size:
            continue
        ang = [math.atan2(P[i, 1] - ay, P[i, 0] - ax) for i in above]
        dd = [(P[i, 0] - ax) ** 2 + (P[i, 1] - ay) ** 2 for i in above]
        order = sorted(range(m), key=lambda r: (ang[r], dd[r], above[r]))
        idx = [above[r] for r in order]
        Q = P[idx]
        X, Y = Q[:, 0], Q[:, 1]
        # left(a, Qi, Qj)
        la = ((X[:, None] - ax) * (Y[None, :] - ay) - (Y[:, None] - ay) * (X[None, :] - ax)) > eps
        dp = np.zeros((m, m), dtype=np.int64)
        par = np.full((m, m), -1, dtype=np.int64)
        for i in range(m):
            js = np.arange(i + 1, m)
            if len(js) == 0:
                continue
            ok = la[i, js]
            base = np.where(ok, 3, 0)
            col = dp[:i, i]
            if i > 0 and col.max() > 0:
                ks = np.arange(i)
                # left(Qk, Qi, Qj) for k < i < j
                cr = (X[i] - X[ks])[:, None] * (Y[js] - Y[ks][:, None]) - (Y[i] - Y[ks])[:, None] * (
                    X[js] - X[ks][:, None]
                )
                valid = (cr > eps) & (col[:, None] > 0)
                cand = np.where(valid, col[:, None], 0)
                kbest = cand.argmax(axis=0)
                cbest = cand[kbest, np.arange(len(js))]
                ext = np.where((cbest > 0) & ok, cbest + 1, 0)
                use = ext > base
                dp[i, js] = np.where(use, ext, base)
                par[i, js] = np.where(use, kbest, -1)
            else:
                dp[i, js] = base
        # closing turn at Qj back to a
        for i in range(m):
            for j in range(i + 1, m):
                v = dp[i, j]
                if v <= best_size:
                    continue
                c = (X[j] - X[i]) * (ay - Y[i]) - (Y[j] - Y[i]) * (ax - X[i])
                if c > eps:
                    best_size = int(v)
                    chain = [j, i]
                    k, cur = int(par[i, j]), i
                    while k >= 0:
                        chain.append(k)
                        k, cur = int(par[k, cur]), k
                    best_set = [a] + [idx[r] for r in reversed(chain)]
    return best_set


def min_width_matrix(n, src, dst, ang):
    """All-pairs minimal angle-monotone path width (degrees, inf if unreachable)."""
    out = np.full((n, n), math.inf)
    np.fill_diagonal(out, 0.0)
    adj = [[] for _ in range(n)]
    for u, v, a in zip(src, dst, ang):
        adj[u].append((v, a))
    anchors = sorted(set(ang))
    for a0 in anchors:
        for s in range(n):
            best = [math.inf] * n
            best[s] = 0.0
            heap = [(0.0, s)]
            row = out[s]
            while heap:
                b, u = heapq.heappop(heap)
                if b > best[u]:
                    continue
                for v, a in adj[u]:
                    c = _ccw(a0, a)
                    nb = b if b > c else c
                    if nb < best[v]:
                        best[v] = nb
                        heapq.heappush(heap, (nb, v))
            for t in range(n):
                if best[t] < row[t]:
                    row[t] = best[t]
    return out


def width_reach_matrix(n, src, dst, ang, gamma, tol, anchors=None):
    """``covered[s, t]`` iff some closed wedge of extent ``gamma`` (+``tol``)
    admits an s->t path. Requires ``gamma + 2 tol < 180`` so every
    wedge-restricted subgraph is acyclic."""
    out_edges = [[] for _ in range(n)]
    for u, v, a in zip(src, dst, ang):
        # plain ints: bit masks grow past 64 bits
        out_edges[int(u)].append((int(v), float(a)))
    covered = [1 << v for v in range(n)]
    lim_hi = gamma + tol
    lim_lo = 360.0 - tol
    if anchors is None:
        anchors = sorted(set(ang))
    for a0 in anchors:
        inc = []
        for u in range(n):
            row = []
            for w, a in out_edges[u]:
                c = _ccw(a0, a)
                if c <= lim_hi or c >= lim_lo:
                    row.append(w)
            inc.append(row)
        reach = [0] * n
        for v in _topo(n, inc):
            r = 1 << v
            for w in inc[v]:
                r |= reach[w]
            reach[v] = r
            covered[v] |= r
    res = np.zeros((n, n), dtype=bool)
    for s in range(n):
        c = covered[s]
        for t in range(n):
            if (c >> t) & 1:
                res[s, t] = True
    return res


def _topo(n, inc):
    """Reverse topological order (sinks first) of a DAG given by ``inc``."""
    state = [0] * n
    order = []
    for root in range(n):
        if state[root]:
            continue
        stack = [(root, 0)]
        state[root] = 1
        while stack:
            u, i = stack[-1]
            if i < len(inc[u]):
                stack[-1] = (u, i + 1)
                w = inc[u][i]
                if state[w] == 0:
                    state[w] = 1
                    stack.append((w, 0))
            else:
                stack.pop()
                state[u] = 2
                order.append(u)
    return order
