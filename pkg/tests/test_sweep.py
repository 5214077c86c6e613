import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from anglemono.geograph import check_planarity
from anglemono.oracle import trace_width, verify_graph_width
from anglemono.sweep import (
    LayeredConfig,
    SweepError,
    SweepFrame,
    build_3sweep,
    build_layered,
    build_theta6_direct,
    in_wedge,
    meeting_path,
    nearest_in_wedge,
    sweep_distance,
    sweep_path,
)

from .conftest import random_points

EQ = SweepFrame(60, 60, 60)
THREE = [(0.0, 0.0), (0.0, 10.0), (0.1, 5.0)]


def brute_nearest(pts, q, frame, kind):
    """Triangle-geometry oracle: rebuild the wedge from the frame's angles
    and scan every point."""
    ta, tb = frame.theta_a, frame.theta_b
    # canonical wedge start/extent per kind, then rotate clockwise
    starts = {"a": 90 - ta / 2, "b": 270 + ta / 2, "c": 90 + ta / 2 + tb}
    ext = {"a": frame.theta_a, "b": frame.theta_b, "c": frame.theta_c}[kind]
    s = (starts[kind] - frame.rotation) % 360
    # sweep normal: bisector-independent, perpendicular to the opposite side
    lo, hi = s, s + ext
    bx = (math.cos(math.radians(lo)), math.sin(math.radians(lo)))
    cx = (math.cos(math.radians(hi)), math.sin(math.radians(hi)))
    # the boundary rays reach the other two triangle vertices; each side
    # is proportional to the sine of the angle opposite it
    t = {"a": frame.theta_a, "b": frame.theta_b, "c": frame.theta_c}
    lo_len = math.sin(math.radians(t[{"a": "b", "b": "c", "c": "a"}[kind]]))
    hi_len = math.sin(math.radians(t[{"a": "c", "b": "a", "c": "b"}[kind]]))
    B = (bx[0] * lo_len, bx[1] * lo_len)
    C = (cx[0] * hi_len, cx[1] * hi_len)
    # right normal of the far side points away from the apex
    nx, ny = C[1] - B[1], -(C[0] - B[0])
    best = None
    Q = pts[q]
    for i, p in enumerate(pts):
        if i == q:
            continue
        a = math.degrees(math.atan2(p[1] - Q[1], p[0] - Q[0])) % 360
        off = (a - s) % 360
        if off > 360 - 1e-9:
            off -= 360
        if off > ext + 1e-9:
            continue
        h = (p[0] - Q[0]) * nx + (p[1] - Q[1]) * ny
        h /= math.hypot(nx, ny)
        key = (h, off, i)
        if best is None or h < best[0] - 1e-9 or (abs(h - best[0]) <= 1e-9 and (off, i) < best[1:]):
            best = key
    return None if best is None else best[2]


def test_frame_validation():
    with pytest.raises(SweepError):
        SweepFrame(60, 60, 61)
    with pytest.raises(SweepError):
        SweepFrame(0, 90, 90)
    assert EQ.acute and not SweepFrame(45, 90, 45).acute


def test_frame_wedges_partition_directions():
    f = SweepFrame(50, 60, 70, 17)
    total = sum(f.extent(k) for k in "abc")
    assert total == pytest.approx(180)
    # the three wedges and their opposites tile the circle
    for ang in range(0, 360, 7):
        d = (math.cos(math.radians(ang + 0.3)), math.sin(math.radians(ang + 0.3)))
        hits = sum(in_wedge((0, 0), d, f, k) or in_wedge(d, (0, 0), f, k) for k in "abc")
        assert hits == 1


def test_nearest_examples():
    assert nearest_in_wedge([(0, 0), (0, 2), (0.3, 1)], 0, EQ, "a") == 2
    assert nearest_in_wedge([(0, 0), (0.2, 1), (-0.2, 1)], 0, EQ, "a") == 1
    assert nearest_in_wedge([(0, 0), (0, -1)], 0, EQ, "a") is None


@given(st.integers(0, 10**6), st.sampled_from("abc"), st.floats(0, 360), st.sampled_from([(60, 60, 60), (40, 70, 70), (45, 90, 45), (30, 30, 120)]))
def test_nearest_matches_brute(seed, kind, rot, angles):
    pts = random_points(seed, 15)
    f = SweepFrame(*angles, rot)
    for q in range(len(pts)):
        assert nearest_in_wedge(pts, q, f, kind) == brute_nearest(pts, q, f, kind)


def test_build_3sweep_examples():
    assert len(build_3sweep([(0, 0), (1, 3)], EQ).edges) == 1
    assert build_3sweep(THREE, EQ).edges == {(0, 2), (1, 2)}


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("angles", [(60, 60, 60), (40, 70, 70), (20, 80, 80), (50, 60, 70)])
def test_3sweep_planar_and_sparse(seed, angles):
    pts = random_points(seed, 50)
    g = build_3sweep(pts, SweepFrame(*angles, seed * 23.0))
    assert check_planarity(g) is None
    assert len(g.edges) <= 3 * len(pts) - 6


def test_sweep_path_examples():
    g = build_3sweep(THREE, EQ)
    p = sweep_path(g, EQ, 0, "a")
    assert p.vertices == (0, 2, 1) and p.extended
    assert sweep_path(g, EQ, 1, "a").vertices == (1,)


@pytest.mark.parametrize("seed", range(4))
def test_sweep_paths_increase_and_contain_later_points(seed):
    pts = random_points(seed, 40)
    cfg = LayeredConfig(8)
    f = cfg.frame(3)
    g = build_3sweep(pts, f)
    for q in range(len(pts)):
        for kind in "abc":
            vs = sweep_path(g, f, q, kind).vertices
            h = [sweep_distance(pts[q], pts[v], f, kind) for v in vs]
            assert all(b > a for a, b in zip(h, h[1:]))
            for i in range(len(vs)):
                for j in range(i + 1, len(vs)):
                    assert in_wedge(pts[vs[i]], pts[vs[j]], f, kind)
            assert nearest_in_wedge(pts, vs[-1], f, kind) is None


def test_layered_config():
    cfg = LayeredConfig.from_alpha(30)
    assert cfg.k == 6 and cfg.width == 120
    f = cfg.frame(2)
    assert (f.theta_a, f.theta_b, f.theta_c, f.rotation) == (60, 60, 60, 60)
    assert LayeredConfig(10, even_only=True).layers() == [2, 4, 6, 8, 10]
    with pytest.raises(SweepError):
        LayeredConfig(8, even_only=True)
    with pytest.raises(SweepError):
        LayeredConfig(4)
    with pytest.raises(SweepError):
        LayeredConfig.from_alpha(25)


def test_layered_examples():
    pts = random_points(5, 60)
    assert build_layered(pts, LayeredConfig(6)).graph.edges == build_theta6_direct(pts).edges
    assert len(build_layered([(0, 0), (1, 2)], LayeredConfig(10)).graph.edges) == 1
    h = build_layered(random_points(6, 40), LayeredConfig(10, even_only=True))
    assert verify_graph_width(h.graph, 108 + 1e-7).passed


def test_theta6_examples():
    assert len(build_theta6_direct([(0, 0), (1, 2)]).edges) == 1
    assert build_theta6_direct(THREE).edges == {(0, 2), (1, 2)}


def test_theta6_symmetry_between_alternate_layers():
    h = build_layered(random_points(9, 50), LayeredConfig(6))
    for i in range(1, 5):
        assert h.layers[i].edges == h.layers[i + 2].edges


@pytest.mark.parametrize("k", [6, 8, 12])
def test_layered_edge_bound(k):
    pts = random_points(k, 45)
    h = build_layered(pts, LayeredConfig(k))
    assert len(h.graph.edges) <= k * (3 * len(pts) - 6)


@pytest.mark.parametrize("k", [6, 10])
def test_meeting_path_structure(k):
    pts = random_points(40 + k, 30)
    cfg = LayeredConfig(k)
    for i in cfg.layers()[:3]:
        f = cfg.frame(i)
        g = build_3sweep(pts, f)
        for q in range(len(pts)):
            for t in range(len(pts)):
                if q == t or not in_wedge(pts[q], pts[t], f, "a"):
                    continue
                side, x, vs = meeting_path(g, f, q, t)
                assert x is not None
                assert vs[0] == q and vs[-1] == t
                assert trace_width(g, vs) <= f.theta_a + f.theta_b + 1e-7
