"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--sizes 20,40,80] [--repeat 3]

Prints a CSV table: kernel, n, python seconds, cython seconds, speedup,
and whether the two outputs agree.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

import numpy as np

from anglemono import _pykernels
from anglemono.instances import generate
from anglemono.oracle import directed_edges
from anglemono.sweep import LayeredConfig, build_layered

try:
    from anglemono import _ckernels
except ImportError:
    sys.exit("compiled kernels are not built; run `pip install -e . --no-build-isolation` first")


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    p = argparse.ArgumentParser()
    p.add_argument("--sizes", default="20,40,80")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args(argv)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["kernel", "n", "python_s", "cython_s", "speedup", "agree"])
    for n in (int(x) for x in a.sizes.split(",")):
        pts = generate("uniform-square", n, a.seed)
        g = build_layered(pts, LayeredConfig(6)).graph
        src, dst, ang = directed_edges(g)
        cases = {
            "width_reach_matrix": lambda m: m.width_reach_matrix(n, src, dst, ang, 120.0, 1e-7),
            "min_width_matrix": lambda m: m.min_width_matrix(n, src, dst, ang),
            "largest_convex_subset": lambda m: m.largest_convex_subset(pts),
        }
        for name, call in cases.items():
            tp, rp = best_of(lambda: call(_pykernels), a.repeat)
            tc, rc = best_of(lambda: call(_ckernels), a.repeat)
            agree = bool(np.array_equal(np.asarray(rp), np.asarray(rc)))
            w.writerow([name, n, f"{tp:.4f}", f"{tc:.4f}", f"{tp / max(tc, 1e-9):.1f}", agree])


if __name__ == "__main__":
    main()
