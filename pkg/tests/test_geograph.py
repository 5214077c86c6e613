import json
import math
import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from anglemono.geograph import (
    GeometricGraph,
    GraphError,
    ParseError,
    check_planarity,
    dijkstra,
    empty_graph,
    format_graph,
    format_points,
    hop_distances,
    hop_diameter,
    local_view,
    parse_graph,
    parse_points,
    read_graph,
    render_svg,
    roundtrip,
    spanning_ratio,
    union_graphs,
    write_graph,
)
from anglemono.geometry import dist, segments_cross
from anglemono.sweep import build_theta6_direct

from .conftest import random_points

SQ = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
CYCLE = [(0, 1), (1, 2), (2, 3), (0, 3)]


def _random_graph(seed, n, p):
    rng = random.Random(seed)
    pts = random_points(seed, n)
    return GeometricGraph.from_edges(pts, [e for e in combinations(range(n), 2) if rng.random() < p])


def test_container_rejects_bad_edges():
    with pytest.raises(GraphError):
        GeometricGraph.from_edges(SQ, [(0, 4)])
    with pytest.raises(GraphError):
        GeometricGraph(tuple(SQ), frozenset({(1, 1)}))
    g = GeometricGraph.from_edges(SQ, [(1, 0), (0, 1)])
    assert g.edges == {(0, 1)}
    assert g.steiner_from == 4


def test_adjacency_half_sum():
    g = _random_graph(1, 15, 0.3)
    assert sum(len(a) for a in g.adjacency) == 2 * len(g.edges)


def test_union_examples():
    g = GeometricGraph.from_edges(SQ, CYCLE)
    assert union_graphs([g, g]).edges == g.edges
    assert union_graphs([g, empty_graph(SQ)]).edges == g.edges
    tri = [(0, 0), (1, 0), (2, 1)]
    u = union_graphs([GeometricGraph.from_edges(tri, [(0, 1)]), GeometricGraph.from_edges(tri, [(1, 2)])])
    assert u.edges == {(0, 1), (1, 2)}
    with pytest.raises(GraphError):
        union_graphs([g, empty_graph(tri)])


@given(st.integers(0, 10**6))
def test_union_commutative_associative(seed):
    pts = random_points(seed, 7)
    rng = random.Random(seed)
    gs = [GeometricGraph.from_edges(pts, [e for e in combinations(range(7), 2) if rng.random() < 0.3]) for _ in range(3)]
    assert union_graphs([gs[0], gs[1]]).edges == union_graphs([gs[1], gs[0]]).edges
    assert union_graphs([union_graphs(gs[:2]), gs[2]]).edges == union_graphs([gs[0], union_graphs(gs[1:])]).edges


def test_planarity_examples():
    assert check_planarity(GeometricGraph.from_edges(SQ, CYCLE)) is None
    bad = check_planarity(GeometricGraph.from_edges(SQ, CYCLE + [(0, 2), (1, 3)]))
    assert set(bad) == {(0, 2), (1, 3)}
    assert check_planarity(GeometricGraph.from_edges(SQ, [(0, 1), (1, 2)])) is None


def _brute_crossing(g):
    for e, f in combinations(g.sorted_edges(), 2):
        if segments_cross(g.points[e[0]], g.points[e[1]], g.points[f[0]], g.points[f[1]]):
            return True
    return False


@pytest.mark.parametrize("seed", range(30))
def test_planarity_matches_all_pairs(seed):
    g = _random_graph(seed, 9, 0.15)
    assert (check_planarity(g) is not None) == _brute_crossing(g)


def test_spanning_ratio_examples():
    assert spanning_ratio(GeometricGraph.from_edges(SQ[:2], [(0, 1)])) == 1.0
    assert spanning_ratio(GeometricGraph.from_edges(SQ, CYCLE)) == pytest.approx(math.sqrt(2))
    line = [(0, 0), (1, 0), (2, 0)]
    assert spanning_ratio(GeometricGraph.from_edges(line, [(0, 1), (1, 2)])) == pytest.approx(1.0)
    with pytest.raises(GraphError, match="0 and 2|disconnected"):
        spanning_ratio(GeometricGraph.from_edges(SQ, [(0, 1)]))


def test_spanning_ratio_uses_steiner_intermediates_only():
    pts = [(0.0, 0.0), (2.0, 0.0), (1.0, 0.0)]
    g = GeometricGraph.from_edges(pts, [(0, 2), (1, 2)], steiner_from=2)
    assert spanning_ratio(g) == pytest.approx(1.0)


def _floyd(g):
    n = g.n
    d = [[math.inf] * n for _ in range(n)]
    for i in range(n):
        d[i][i] = 0.0
    for i, j in g.edges:
        d[i][j] = d[j][i] = dist(g.points[i], g.points[j])
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


@pytest.mark.parametrize("seed", range(5))
def test_dijkstra_matches_floyd(seed):
    g = _random_graph(seed, 12, 0.3)
    fl = _floyd(g)
    for s in range(g.n):
        assert dijkstra(g, s) == pytest.approx(fl[s])


def test_local_view_path_and_isolated():
    pts = [(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)]
    g = GeometricGraph.from_edges(pts, [(0, 1), (1, 2), (2, 3), (3, 4)])
    v = local_view(g, 1)
    assert v.vertices == {0, 1, 2, 3}
    assert v.edges == {(0, 1), (1, 2), (2, 3)}
    iso = local_view(GeometricGraph.from_edges(pts, []), 2)
    assert iso.vertices == {2} and not iso.edges
    with pytest.raises(GraphError):
        local_view(g, 9)


@pytest.mark.parametrize("radius", [1, 2])
def test_local_view_is_the_induced_ball(radius):
    g = _random_graph(4, 25, 0.12)
    for c in range(g.n):
        v = local_view(g, c, radius)
        ball = {w for w, h in hop_distances(g, c).items() if h <= radius}
        assert v.vertices == ball
        assert v.edges == {e for e in g.edges if e[0] in ball and e[1] in ball}


def test_hop_diameter():
    g = GeometricGraph.from_edges(SQ, CYCLE)
    assert hop_diameter(g) == 2
    assert hop_diameter(GeometricGraph.from_edges(SQ, [(0, 1)])) == math.inf


def test_roundtrip_examples(tmp_path):
    one = empty_graph([(0.5, 0.25)])
    assert roundtrip(one) == one
    g = build_theta6_direct(random_points(20, 20))
    assert roundtrip(g) == g
    st_g = GeometricGraph.from_edges(SQ, CYCLE, steiner_from=3)
    assert roundtrip(st_g).steiner_from == 3
    write_graph(g, tmp_path / "g.json")
    assert read_graph(tmp_path / "g.json") == g


def test_graph_document_field_order():
    doc = format_graph(GeometricGraph.from_edges(SQ, CYCLE))
    assert list(json.loads(doc)) == ["points", "edges", "steiner_from"]


@pytest.mark.parametrize(
    "text,where",
    [
        ("{", "line 1"),
        ('{"points": [[0, 0]]}', "edges"),
        ('{"points": [[0]], "edges": []}', "points[0]"),
        ('{"points": [[0,0],[1,1]], "edges": [[1, 0]]}', "edges[0]"),
        ('{"points": [[0,0],[1,1]], "edges": [[0, 5]]}', "out of range"),
    ],
)
def test_parse_graph_errors_name_the_position(text, where):
    with pytest.raises(ParseError, match=where.replace("[", r"\[").replace("]", r"\]")):
        parse_graph(text)


def test_points_format():
    pts = random_points(3, 6)
    assert parse_points(format_points(pts)) == pts
    assert parse_points("# header\n1 2\n\n3 4\n") == [(1.0, 2.0), (3.0, 4.0)]
    with pytest.raises(ParseError, match="line 2"):
        parse_points("1 2\n3\n")
    with pytest.raises(ParseError, match="line 1"):
        parse_points("a b\n")
    with pytest.raises(ParseError, match="duplicate"):
        parse_points("1 2\n1 2\n")


def test_svg_render():
    g = GeometricGraph.from_edges(SQ, CYCLE, steiner_from=3)
    svg = render_svg(g, route=[0, 1, 2])
    assert svg.startswith("<?xml") and 'version="1.1"' in svg
    assert svg.count("<line") == 4
    assert svg.count("<circle") == 3
    assert svg.count('class="steiner"') == 1
    assert "<polyline" in svg
