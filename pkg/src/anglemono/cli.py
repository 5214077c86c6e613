"""Command-line interface: ``anglemono <command> ...``.

Angles on every flag are in degrees. Exit status is 0 on success, 1 when
``verify`` finds a violation, and 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from . import kernels
from .geograph import (
    GeometricGraph,
    GraphError,
    ParseError,
    format_graph,
    format_points,
    parse_graph,
    parse_points,
    render_svg,
    spanning_ratio,
)
from .instances import DISTRIBUTIONS, generate
from .oracle import WIDTH_TOL, min_width_all, verify_graph_width
from .routing import RoutingError, route, route_theta6_1local
from .steiner import SteinerError, construct_steiner
from .sweep import LayeredConfig, LayeredGraph, SweepError, build_3sweep, build_layered, build_theta6_direct
from .width90 import Width90Error, build_sqrt_alpha, build_width90

METHODS = ("width90", "sqrt", "layered", "theta6", "steiner")
BENCH_HEADER = ["n", "method", "param", "edges", "width_deg", "spanning_ratio", "max_route_stretch"]


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    method: str
    alpha: float | None = None
    gamma: float | None = None
    even_only: bool = False

    def __post_init__(self):
        m = self.method
        if m not in METHODS:
            raise UsageError(f"unknown method {m!r}")
        if self.gamma is not None and m != "steiner":
            raise UsageError("--gamma only applies to --method steiner")
        if self.alpha is not None and m not in ("layered", "sqrt"):
            raise UsageError(f"--alpha does not apply to --method {m}")
        if self.even_only and m != "layered":
            raise UsageError("--even-only only applies to --method layered")

    @property
    def param(self) -> str:
        if self.method == "steiner":
            return f"gamma={_num(self.gamma_or_default)}"
        if self.method in ("layered", "sqrt"):
            s = f"alpha={_num(self.alpha_or_default)}"
            return s + " even" if self.even_only else s
        if self.method == "theta6":
            return "alpha=30"
        return ""

    @property
    def alpha_or_default(self) -> float:
        return 30.0 if self.alpha is None else self.alpha

    @property
    def gamma_or_default(self) -> float:
        return 90.0 if self.gamma is None else self.gamma

    @property
    def routable(self) -> bool:
        return self.method in ("layered", "theta6") and not self.even_only


def _num(x: float) -> str:
    return f"{x:g}"


def build(points: Sequence, cfg: RunConfig) -> GeometricGraph:
    m = cfg.method
    if m == "width90":
        return build_width90(points)
    if m == "sqrt":
        return build_sqrt_alpha(points, cfg.alpha_or_default)
    if m == "layered":
        return build_layered(points, LayeredConfig.from_alpha(cfg.alpha_or_default, cfg.even_only)).graph
    if m == "theta6":
        return build_theta6_direct(points)
    return construct_steiner(points, cfg.gamma_or_default).graph


def graph_width(g: GeometricGraph) -> float:
    """Largest minimal width over pairs of input points."""
    m = g.steiner_from
    if m < 2:
        return 0.0
    mw = min_width_all(g)
    return max(float(mw[s, t]) for s, t in combinations(range(m), 2))


# ---------------------------------------------------------------- routing helpers


def _route_pair(args):
    g, alpha, q, t, one_hop = args
    if one_hop:
        tr = route_theta6_1local(g, q, t)
    else:
        tr = route(LayeredGraph(g, {}, LayeredConfig.from_alpha(alpha)), q, t)
    return q, t, tr


def _route_all(g: GeometricGraph, alpha: float, one_hop: bool, jobs: int):
    m = g.steiner_from
    tasks = [(g, alpha, q, t, one_hop) for q in range(m) for t in range(m) if q != t]
    if jobs > 1 and tasks:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_route_pair, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [_route_pair(a) for a in tasks]


# ---------------------------------------------------------------- commands


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", newline="") as fh:
        fh.write(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def cmd_gen(a) -> int:
    if a.n < 0:
        raise UsageError("--n must be non-negative")
    _write_text(a.out, format_points(generate(a.dist, a.n, a.seed)))
    return 0


def cmd_build(a) -> int:
    cfg = RunConfig(a.method, a.alpha, a.gamma, a.even_only)
    pts = parse_points(_read_text(a.points))
    if len(pts) < 1:
        raise UsageError("the points file is empty")
    _write_text(a.out, format_graph(build(pts, cfg)))
    return 0


def cmd_verify(a) -> int:
    g = parse_graph(_read_text(a.graph))
    rep = verify_graph_width(g, a.width, per_pair=a.per_pair, tol=a.tol, jobs=a.jobs)
    if a.out:
        _write_text(a.out, _dump(rep.to_dict()))
    if rep.passed:
        print(f"pass: every pair has a path of width <= {_num(a.width)}")
        return 0
    s, t = rep.failing_pair
    print(f"FAIL: no path of width <= {_num(a.width)} between {s} and {t}")
    return 1


def cmd_route(a) -> int:
    g = parse_graph(_read_text(a.graph))
    alpha = a.alpha
    if a.one_hop and alpha != 30.0:
        raise UsageError("--one-hop routing needs --alpha 30")
    if a.all_pairs:
        res = _route_all(g, alpha, a.one_hop, a.jobs)
        pairs = [
            {"source": q, "target": t, "path": tr.vertices, "width_deg": tr.width_deg, "stretch": tr.stretch}
            for q, t, tr in res
        ]
        doc = {
            "alpha": alpha,
            "pairs": pairs,
            "max_stretch": max((p["stretch"] for p in pairs), default=1.0),
            "max_width_deg": max((p["width_deg"] for p in pairs), default=0.0),
        }
        print(f"routed {len(pairs)} pairs; max stretch {doc['max_stretch']:.6f}; max width {doc['max_width_deg']:.6f}")
    else:
        if a.source is None or a.target is None:
            raise UsageError("give --source and --target, or --all-pairs")
        for v in (a.source, a.target):
            if not 0 <= v < g.n:
                raise UsageError(f"vertex {v} out of range")
        _, _, tr = _route_pair((g, alpha, a.source, a.target, a.one_hop))
        doc = {"alpha": alpha, "source": a.source, "target": a.target, "layer": tr.layer, "side": tr.side}
        doc.update(tr.to_dict())
        print(f"path {' '.join(map(str, tr.vertices))}; stretch {tr.stretch:.6f}; width {tr.width_deg:.6f}")
    if a.out:
        _write_text(a.out, _dump(doc))
    return 0


def cmd_stats(a) -> int:
    g = parse_graph(_read_text(a.graph))
    doc = {
        "vertices": g.n,
        "input_points": g.steiner_from,
        "steiner_points": g.n - g.steiner_from,
        "edges": len(g.edges),
    }
    if a.alpha is not None:
        cfg = LayeredConfig.from_alpha(a.alpha)
        pts = g.points[: g.steiner_from]
        doc["layer_edges"] = {str(i): len(build_3sweep(pts, cfg.frame(i)).edges) for i in cfg.layers()}
    try:
        doc["spanning_ratio"] = spanning_ratio(g)
    except GraphError:
        doc["spanning_ratio"] = None
    doc["max_min_width_deg"] = graph_width(g)
    _write_text(a.out, _dump(doc))
    return 0


def cmd_render(a) -> int:
    g = parse_graph(_read_text(a.graph))
    path = None
    if a.trace:
        doc = json.loads(_read_text(a.trace))
        if "path" not in doc:
            raise UsageError("trace file has no 'path' (use a single-pair route trace)")
        path = doc["path"]
        if any(not 0 <= v < g.n for v in path):
            raise UsageError("trace does not match the graph")
    _write_text(a.out, render_svg(g, path, a.size))
    return 0


def _bench_one(args):
    n, seed, dist, cfg = args
    pts = generate(dist, n, seed)
    if cfg.method == "steiner":
        b = construct_steiner(pts, cfg.gamma_or_default)
        g, extra = b.graph, (b.steiner_count, b.steiner_count / b.count_bound())
    else:
        g, extra = build(pts, cfg), None
    stretch = None
    if cfg.routable:
        one = cfg.method == "theta6"
        res = _route_all(g, cfg.alpha_or_default, one, 1)
        stretch = max((tr.stretch for _, _, tr in res), default=1.0)
    return len(g.edges), graph_width(g), spanning_ratio(g), stretch, extra


def cmd_bench(a) -> int:
    sizes = [int(x) for x in a.sizes.split(",") if x]
    if any(n < 2 for n in sizes):
        raise UsageError("bench sizes must be at least 2")
    cfgs = []
    for m in a.methods.split(","):
        if m in ("layered", "sqrt"):
            cfgs += [RunConfig(m, float(x)) for x in a.alphas.split(",")]
        elif m == "steiner":
            cfgs += [RunConfig(m, gamma=float(x)) for x in a.gammas.split(",")]
        else:
            cfgs.append(RunConfig(m))
    tasks = [(n, seed, a.dist, c) for n in sizes for c in cfgs for seed in range(a.seed, a.seed + a.seeds)]
    if a.jobs > 1:
        with ProcessPoolExecutor(max_workers=a.jobs) as ex:
            results = list(ex.map(_bench_one, tasks))
    else:
        results = [_bench_one(t) for t in tasks]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(BENCH_HEADER)
    k = 0
    for n in sizes:
        for c in cfgs:
            rows = results[k : k + a.seeds]
            k += a.seeds
            param = c.param
            if c.method == "steiner":
                cnt = max(r[4][0] for r in rows)
                const = max(r[4][1] for r in rows)
                param += f";steiner={cnt};C={const:.4f}"
            stretch = [r[3] for r in rows if r[3] is not None]
            w.writerow(
                [
                    n,
                    c.method,
                    param,
                    max(r[0] for r in rows),
                    f"{max(r[1] for r in rows):.6f}",
                    f"{max(r[2] for r in rows):.6f}",
                    f"{max(stretch):.6f}" if stretch else "",
                ]
            )
    _write_text(a.out, buf.getvalue())
    return 0


# ---------------------------------------------------------------- parser


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="anglemono", description="Angle-monotone graph construction and routing.")
    p.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({kernels.BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="generate a seeded point set")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform-square")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("build", help="build a graph from a points file")
    s.add_argument("points")
    s.add_argument("--method", choices=METHODS, required=True)
    s.add_argument("--alpha", type=float, help="degrees; layered and sqrt")
    s.add_argument("--gamma", type=float, help="degrees; steiner")
    s.add_argument("--even-only", action="store_true", help="layered: keep only even layers")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("verify", help="check that every pair has a path of the given width")
    s.add_argument("graph")
    s.add_argument("--width", type=float, required=True, help="degrees")
    s.add_argument("--tol", type=float, default=WIDTH_TOL, help="degrees of slack on wedge membership")
    s.add_argument("--per-pair", action="store_true", help="also report every pair's minimal width")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("-o", "--out", help="write the report as JSON")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("route", help="route locally on a layered graph")
    s.add_argument("graph")
    s.add_argument("--alpha", type=float, default=30.0, help="degrees; the graph's layer angle")
    s.add_argument("--source", type=int)
    s.add_argument("--target", type=int)
    s.add_argument("--all-pairs", action="store_true")
    s.add_argument("--one-hop", action="store_true", help="six-cone routing from 1-hop views")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("-o", "--out", help="write the trace as JSON")
    s.set_defaults(func=cmd_route)

    s = sub.add_parser("stats", help="edge counts, spanning ratio and width")
    s.add_argument("graph")
    s.add_argument("--alpha", type=float, help="degrees; also count edges per layer")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("render", help="draw a graph as SVG")
    s.add_argument("graph")
    s.add_argument("--trace", help="single-pair route trace to highlight")
    s.add_argument("--size", type=float, default=600.0)
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("bench", help="CSV table of edges, width, stretch")
    s.add_argument("--sizes", default="20,40")
    s.add_argument("--seeds", type=int, default=3)
    s.add_argument("--seed", type=int, default=0, help="first seed")
    s.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform-square")
    s.add_argument("--methods", default="theta6,layered,width90,sqrt")
    s.add_argument("--alphas", default="30", help="degrees; for layered and sqrt")
    s.add_argument("--gammas", default="90", help="degrees; for steiner")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    a = parser.parse_args(argv)
    if getattr(a, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return a.func(a)
    except (UsageError, ParseError, GraphError, SweepError, Width90Error, SteinerError, RoutingError, ValueError) as exc:
        print(f"anglemono: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
