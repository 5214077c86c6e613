# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; mirrors ``_pykernels``."""

import math

import numpy as np
cimport numpy as cnp
from libc.math cimport atan2, INFINITY, fabs

cnp.import_array()

cdef double EPS_ORIENT = 1e-9


cdef inline double _ccw(double start, double a) nogil:
    cdef double d = a - start
    if d < 0.0:
        d += 360.0
    return d


def largest_convex_subset(points):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] P = np.ascontiguousarray(points, dtype=np.float64)
    cdef Py_ssize_t n = P.shape[0]
    if n <= 2:
        return list(range(n))
    cdef double s = max(1.0, float(np.abs(P).max()))
    cdef double eps = EPS_ORIENT * s * s
    cdef int best_size = 2
    best_set = [0, 1]
    cdef Py_ssize_t a, i, j, k, m, r
    cdef double ax, ay, c, cr
    cdef int v, cb, kb
    cdef cnp.ndarray[cnp.float64_t, ndim=1] X, Y
    cdef cnp.ndarray[cnp.int64_t, ndim=2] dp, par
    for a in range(n):
        ax = P[a, 0]
        ay = P[a, 1]
        above = [i for i in range(n) if P[i, 1] > ay or (P[i, 1] == ay and P[i, 0] > ax)]
        m = len(above)
        if m + 1 <= best_size:
            continue
        ang = [atan2(P[i, 1] - ay, P[i, 0] - ax) for i in above]
        dd = [(P[i, 0] - ax) ** 2 + (P[i, 1] - ay) ** 2 for i in above]
        order = sorted(range(m), key=lambda q: (ang[q], dd[q], above[q]))
        idx = [above[q] for q in order]
        X = np.ascontiguousarray(P[idx, 0])
        Y = np.ascontiguousarray(P[idx, 1])
        dp = np.zeros((m, m), dtype=np.int64)
        par = np.full((m, m), -1, dtype=np.int64)
        for i in range(m):
            for j in range(i + 1, m):
                c = (X[i] - ax) * (Y[j] - ay) - (Y[i] - ay) * (X[j] - ax)
                if not c > eps:
                    continue
                cb = 0
                kb = -1
                for k in range(i):
                    if dp[k, i] > cb:
                        cr = (X[i] - X[k]) * (Y[j] - Y[k]) - (Y[i] - Y[k]) * (X[j] - X[k])
                        if cr > eps:
                            cb = <int>dp[k, i]
                            kb = k
                if cb > 0 and cb + 1 > 3:
                    dp[i, j] = cb + 1
                    par[i, j] = kb
                else:
                    dp[i, j] = 3
        for i in range(m):
            for j in range(i + 1, m):
                v = <int>dp[i, j]
                if v <= best_size:
                    continue
                c = (X[j] - X[i]) * (ay - Y[i]) - (Y[j] - Y[i]) * (ax - X[i])
                if c > eps:
                    best_size = v
                    chain = [j, i]
                    k = par[i, j]
                    r = i
                    while k >= 0:
                        chain.append(k)
                        k, r = par[k, r], k
                    best_set = [a] + [idx[q] for q in reversed(chain)]
    return best_set


def min_width_matrix(Py_ssize_t n, src, dst, ang):
    cdef cnp.ndarray[cnp.int64_t, ndim=1] S = np.asarray(src, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] D = np.asarray(dst, dtype=np.int64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] A = np.asarray(ang, dtype=np.float64)
    cdef Py_ssize_t E = S.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.full((n, n), INFINITY)
    cdef Py_ssize_t i, s, t, u, e, it
    for i in range(n):
        out[i, i] = 0.0
    # CSR adjacency
    order = np.argsort(S, kind="stable")
    cdef cnp.ndarray[cnp.int64_t, ndim=1] adj_to = D[order]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] adj_ang = A[order]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] start = np.zeros(n + 1, dtype=np.int64)
    for e in range(E):
        start[S[e] + 1] += 1
    for i in range(n):
        start[i + 1] += start[i]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] anchors = np.unique(A)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] cost = np.empty(E, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] best = np.empty(n, dtype=np.float64)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] done = np.empty(n, dtype=np.uint8)
    cdef double a0, b, c, nb
    cdef Py_ssize_t nanch = anchors.shape[0], ai
    for ai in range(nanch):
        a0 = anchors[ai]
        for e in range(E):
            cost[e] = _ccw(a0, adj_ang[e])
        for s in range(n):
            for i in range(n):
                best[i] = INFINITY
                done[i] = 0
            best[s] = 0.0
            # O(n^2) minimax Dijkstra
            for it in range(n):
                u = -1
                b = INFINITY
                for i in range(n):
                    if not done[i] and best[i] < b:
                        b = best[i]
                        u = i
                if u < 0:
                    break
                done[u] = 1
                for e in range(start[u], start[u + 1]):
                    c = cost[e]
                    nb = b if b > c else c
                    t = adj_to[e]
                    if nb < best[t]:
                        best[t] = nb
            for t in range(n):
                if best[t] < out[s, t]:
                    out[s, t] = best[t]
    return out


def width_reach_matrix(Py_ssize_t n, src, dst, ang, double gamma, double tol, anchors=None):
    cdef cnp.ndarray[cnp.int64_t, ndim=1] S = np.asarray(src, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] D = np.asarray(dst, dtype=np.int64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] A = np.asarray(ang, dtype=np.float64)
    cdef Py_ssize_t E = S.shape[0]
    cdef Py_ssize_t W = (n + 63) // 64
    cdef cnp.ndarray[cnp.uint64_t, ndim=2] covered = np.zeros((n, W), dtype=np.uint64)
    cdef cnp.ndarray[cnp.uint64_t, ndim=2] reach = np.zeros((n, W), dtype=np.uint64)
    cdef Py_ssize_t i, e, u, w, k, top, pos
    order = np.argsort(S, kind="stable")
    cdef cnp.ndarray[cnp.int64_t, ndim=1] adj_to = D[order]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] adj_ang = A[order]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] start = np.zeros(n + 1, dtype=np.int64)
    for e in range(E):
        start[S[e] + 1] += 1
    for i in range(n):
        start[i + 1] += start[i]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] inc = np.zeros(E, dtype=np.uint8)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] state = np.zeros(n, dtype=np.uint8)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] stack_v = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] stack_i = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] anc = np.unique(A) if anchors is None else np.asarray(anchors, dtype=np.float64)
    cdef double a0, c, hi = gamma + tol, lo = 360.0 - tol
    cdef Py_ssize_t ai, root
    cdef unsigned long long one = 1
    for i in range(n):
        covered[i, i // 64] |= one << (i % 64)
    for ai in range(anc.shape[0]):
        a0 = anc[ai]
        for e in range(E):
            c = _ccw(a0, adj_ang[e])
            inc[e] = 1 if (c <= hi or c >= lo) else 0
        for i in range(n):
            state[i] = 0
        # iterative DFS; finish order is sinks first
        for root in range(n):
            if state[root]:
                continue
            top = 0
            stack_v[0] = root
            stack_i[0] = start[root]
            state[root] = 1
            while top >= 0:
                u = stack_v[top]
                pos = stack_i[top]
                if pos < start[u + 1]:
                    stack_i[top] = pos + 1
                    if inc[pos]:
                        w = adj_to[pos]
                        if state[w] == 0:
                            state[w] = 1
                            top += 1
                            stack_v[top] = w
                            stack_i[top] = start[w]
                else:
                    top -= 1
                    state[u] = 2
                    for k in range(W):
                        reach[u, k] = 0
                    reach[u, u // 64] |= one << (u % 64)
                    for e in range(start[u], start[u + 1]):
                        if inc[e]:
                            w = adj_to[e]
                            for k in range(W):
                                reach[u, k] |= reach[w, k]
                    for k in range(W):
                        covered[u, k] |= reach[u, k]
    res = np.zeros((n, n), dtype=bool)
    cdef Py_ssize_t t
    for u in range(n):
        for t in range(n):
            if (covered[u, t // 64] >> (t % 64)) & one:
                res[u, t] = True
    return res
