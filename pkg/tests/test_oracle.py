import math
import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from anglemono.geograph import GeometricGraph
from anglemono.oracle import (
    OracleError,
    brute_force_min_width,
    has_width_path,
    min_path_width,
    min_width_all,
    path_width,
    trace_width,
    verify_graph_width,
    width_reach,
)
from anglemono.sweep import build_theta6_direct

from .conftest import random_points

L = GeometricGraph.from_edges([(0, 0), (1, 0), (1, 1)], [(0, 1), (1, 2)])
SQ = GeometricGraph.from_edges([(0, 0), (1, 0), (1, 1), (0, 1)], [(0, 1), (1, 2), (2, 3), (0, 3)])


def small_graph(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 8)
    pts = random_points(seed, n)
    es = [e for e in combinations(range(n), 2) if rng.random() < 0.45]
    es += [(i, i + 1) for i in range(n - 1)]
    return GeometricGraph.from_edges(pts, es)


def test_path_width_examples():
    assert path_width([(0, 0), (1, 0)]) == 0
    assert path_width([(0, 0), (1, 0), (1, 1)]) == pytest.approx(90)
    assert path_width([(0, 0), (1, 0), (0, 1)]) == pytest.approx(135)
    with pytest.raises(OracleError):
        path_width([(0, 0)])


def test_has_width_path_examples():
    assert has_width_path(L, 0, 2, 90)
    assert not has_width_path(L, 0, 2, 89)
    assert has_width_path(L, 2, 0, 90)
    with pytest.raises(OracleError):
        has_width_path(L, 1, 1, 90)


def test_complete_graph_width_zero():
    pts = random_points(2, 6)
    g = GeometricGraph.from_edges(pts, combinations(range(6), 2))
    for s, t in combinations(range(6), 2):
        assert has_width_path(g, s, t, 0.0)


def test_min_path_width_examples():
    assert min_path_width(L, 0, 1) == 0
    assert min_path_width(L, 0, 2) == pytest.approx(90)
    g = GeometricGraph.from_edges([(0, 0), (1, 0), (5, 5)], [(0, 1)])
    with pytest.raises(OracleError):
        min_path_width(g, 0, 2)


def test_verify_examples():
    r = verify_graph_width(build_theta6_direct(random_points(20, 20)), 120.0)
    assert r.passed and r.failing_pair is None
    assert verify_graph_width(GeometricGraph.from_edges([(0, 0), (1, 2)], [(0, 1)]), 0.0).passed
    r = verify_graph_width(SQ, 45.0)
    assert not r.passed
    assert r.failing_pair in {(0, 2), (1, 3)}


def test_report_width_is_the_max_pair_width():
    g = build_theta6_direct(random_points(5, 15))
    r = verify_graph_width(g, 120.0, per_pair=True)
    assert r.graph_width == max(r.per_pair.values())
    assert r.graph_width == r.per_pair[r.worst_pair]
    d = r.to_dict()
    assert d["passed"] and len(d["per_pair"]) == 15 * 14 // 2


def test_steiner_endpoints_are_skipped_by_default():
    pts = [(0, 0), (1, 0), (0.5, 5)]
    g = GeometricGraph.from_edges(pts, [(0, 1)], steiner_from=2)
    assert verify_graph_width(g, 0.0).passed


@pytest.mark.parametrize("seed", range(40))
def test_min_width_matches_brute_force(seed):
    g = small_graph(seed)
    mw = min_width_all(g)
    for s, t in combinations(range(g.n), 2):
        b = brute_force_min_width(g, s, t)
        assert mw[s, t] == b
        assert min_path_width(g, s, t) == b


@given(st.integers(0, 10**6), st.floats(1.0, 170.0))
def test_reach_matches_per_pair_search(seed, gamma):
    g = small_graph(seed)
    R = width_reach(g, gamma)
    for s in range(g.n):
        for t in range(g.n):
            if s != t:
                assert R[s, t] == has_width_path(g, s, t, gamma)


@given(st.integers(0, 10**6))
def test_min_width_symmetric_and_monotone(seed):
    g = small_graph(seed)
    mw = min_width_all(g)
    assert np.allclose(mw, mw.T, rtol=0, atol=1e-9)
    s, t = 0, g.n - 1
    if s == t:
        return
    w = mw[s, t]
    assert has_width_path(g, s, t, w)
    assert has_width_path(g, s, t, w + 5.0)


def test_wide_gamma_path_uses_search():
    g = small_graph(3)
    R = width_reach(g, 200.0)
    assert R.all() or not all(len(a) for a in g.adjacency)


def test_parallel_reach_matches_serial():
    g = build_theta6_direct(random_points(8, 40))
    assert np.array_equal(width_reach(g, 100.0), width_reach(g, 100.0, jobs=3))


def test_trace_width():
    assert trace_width(L, [0]) == 0.0
    assert trace_width(L, [0, 1, 2]) == pytest.approx(90)
