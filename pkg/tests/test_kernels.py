"""The compiled kernels and the fallback must agree bit for bit."""

import os
import subprocess
import sys

import numpy as np
import pytest

from anglemono import _pykernels, kernels
from anglemono.oracle import directed_edges
from anglemono.sweep import LayeredConfig, build_layered

from .conftest import random_points

ck = pytest.importorskip("anglemono._ckernels")


def _edges(seed, n, k=6):
    g = build_layered(random_points(seed, n), LayeredConfig(k)).graph
    return g, directed_edges(g)


@pytest.mark.parametrize("seed,n", [(0, 5), (1, 30), (2, 70)])
def test_width_reach_parity(seed, n):
    g, (s, d, a) = _edges(seed, n)
    for gamma in (60.0, 100.0, 120.0):
        assert np.array_equal(
            ck.width_reach_matrix(n, s, d, a, gamma, 1e-7), _pykernels.width_reach_matrix(n, s, d, a, gamma, 1e-7)
        )


def test_width_reach_anchor_subset_parity():
    g, (s, d, a) = _edges(3, 25)
    anc = np.unique(a)[::3]
    assert np.array_equal(
        ck.width_reach_matrix(25, s, d, a, 90.0, 1e-7, anc), _pykernels.width_reach_matrix(25, s, d, a, 90.0, 1e-7, anc)
    )


@pytest.mark.parametrize("seed,n", [(0, 6), (4, 25)])
def test_min_width_parity(seed, n):
    g, (s, d, a) = _edges(seed, n, 8)
    assert np.array_equal(ck.min_width_matrix(n, s, d, a), _pykernels.min_width_matrix(n, s, d, a))


@pytest.mark.parametrize("seed,n", [(0, 3), (1, 12), (2, 40)])
def test_largest_convex_subset_parity(seed, n):
    pts = random_points(seed, n)
    assert list(ck.largest_convex_subset(pts)) == list(_pykernels.largest_convex_subset(pts))


def test_pure_switch_selects_fallback():
    env = dict(os.environ, ANGLEMONO_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "from anglemono import kernels; print(kernels.BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND == ("python" if os.environ.get("ANGLEMONO_PURE") else "cython")
