"""Seeded point-set generators.

Every generator draws from ``random.Random(seed)`` and only calls its
``random()`` method, whose output sequence is fixed for a given seed
(MT19937, 53-bit doubles). The draw order is documented per distribution
so that other implementations can reproduce the instances exactly.
"""

from __future__ import annotations

import math
import random

from .geometry import Point

DISTRIBUTIONS = ("uniform-square", "convex-position", "grid", "clustered")


def uniform_square(n: int, rng: random.Random) -> list[Point]:
    """x then y per point in [0, 1); repeated points are redrawn."""
    seen, out = set(), []
    while len(out) < n:
        p = (rng.random(), rng.random())
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def convex_position(n: int, rng: random.Random) -> list[Point]:
    """One angle ``2*pi*u`` per point on the circle of radius 1/2 about
    (1/2, 1/2), kept in draw order; repeated angles are redrawn."""
    seen, out = set(), []
    while len(out) < n:
        a = 2.0 * math.pi * rng.random()
        if a in seen:
            continue
        seen.add(a)
        out.append((0.5 + 0.5 * math.cos(a), 0.5 + 0.5 * math.sin(a)))
    return out


def grid(n: int, rng: random.Random) -> list[Point]:
    """First n cells of a ceil(sqrt(n))-wide integer lattice, row by row.
    Draws nothing."""
    m = max(1, math.isqrt(n - 1) + 1) if n > 0 else 1
    return [(float(i % m), float(i // m)) for i in range(n)]


def clustered(n: int, rng: random.Random) -> list[Point]:
    """``c = max(1, round(sqrt(n)/2))`` centers drawn x then y in
    [0.1, 0.9); then per point: cluster ``floor(u*c)``, radius
    ``0.05*sqrt(u)``, angle ``2*pi*u``."""
    c = max(1, round(math.sqrt(n) / 2))
    centers = [(0.1 + 0.8 * rng.random(), 0.1 + 0.8 * rng.random()) for _ in range(c)]
    seen, out = set(), []
    while len(out) < n:
        k = min(c - 1, int(rng.random() * c))
        r = 0.05 * math.sqrt(rng.random())
        a = 2.0 * math.pi * rng.random()
        p = (centers[k][0] + r * math.cos(a), centers[k][1] + r * math.sin(a))
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


_GEN = {
    "uniform-square": uniform_square,
    "convex-position": convex_position,
    "grid": grid,
    "clustered": clustered,
}


def generate(distribution: str, n: int, seed: int) -> list[Point]:
    if distribution not in _GEN:
        raise ValueError(f"unknown distribution {distribution!r}; choose from {', '.join(DISTRIBUTIONS)}")
    if n < 0:
        raise ValueError("n must be non-negative")
    return _GEN[distribution](n, random.Random(seed))
