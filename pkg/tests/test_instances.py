import math
import random

import pytest

from anglemono.geometry import in_strict_convex_position
from anglemono.instances import DISTRIBUTIONS, generate


@pytest.mark.parametrize("dist", DISTRIBUTIONS)
def test_deterministic_and_distinct(dist):
    a = generate(dist, 50, 7)
    assert a == generate(dist, 50, 7)
    assert len(a) == 50 and len(set(a)) == 50
    if dist != "grid":
        assert a != generate(dist, 50, 8)


def test_uniform_draw_order():
    rng = random.Random(3)
    want = [(rng.random(), rng.random()) for _ in range(5)]
    assert generate("uniform-square", 5, 3) == want


def test_convex_draw_order_and_shape():
    rng = random.Random(11)
    pts = generate("convex-position", 30, 11)
    a = 2 * math.pi * rng.random()
    assert pts[0] == (0.5 + 0.5 * math.cos(a), 0.5 + 0.5 * math.sin(a))
    for x, y in pts:
        assert math.hypot(x - 0.5, y - 0.5) == pytest.approx(0.5)
    assert in_strict_convex_position(pts)


def test_grid_layout():
    assert generate("grid", 5, 0) == [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (0.0, 1.0), (1.0, 1.0)]
    assert generate("grid", 9, 0)[-1] == (2.0, 2.0)
    assert generate("grid", 1, 0) == [(0.0, 0.0)]


def test_clustered_stays_near_centers():
    n = 64
    rng = random.Random(5)
    c = round(math.sqrt(n) / 2)
    centers = [(0.1 + 0.8 * rng.random(), 0.1 + 0.8 * rng.random()) for _ in range(c)]
    for p in generate("clustered", n, 5):
        assert min(math.dist(p, q) for q in centers) <= 0.05 + 1e-12


def test_empty_and_errors():
    assert generate("uniform-square", 0, 1) == []
    with pytest.raises(ValueError):
        generate("gaussian", 5, 0)
    with pytest.raises(ValueError):
        generate("grid", -1, 0)
