"""Standard graph families used by the checks, the demos and the CLI."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph


def cycle(n: int) -> Graph:
    """Cycle on vertices 0..n-1, unit weights."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph([(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on vertices 0..n-1 (n=1 gives a single isolated vertex)."""
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return Graph([(i, i + 1) for i in range(n - 1)], vertices=range(n))


def int_path(lo: int, hi: int) -> Graph:
    """Path on the integers lo..hi, unit weights."""
    if hi < lo:
        raise ValueError("empty integer range")
    return Graph([(i, i + 1) for i in range(lo, hi)], vertices=range(lo, hi + 1))


def grid(w: int, h: int) -> Graph:
    """w x h square grid of (i, j) tuples, 4-neighbor, unit weights."""
    _require_dims(w, h)
    edges = []
    for i in range(w):
        for j in range(h):
            if i + 1 < w:
                edges.append(((i, j), (i + 1, j)))
            if j + 1 < h:
                edges.append(((i, j), (i, j + 1)))
    return Graph(edges, vertices=((i, j) for i in range(w) for j in range(h)))


def king_grid(w: int, h: int) -> Graph:
    """w x h grid with king moves (8 neighbors), unit weights."""
    _require_dims(w, h)
    steps = ((1, 0), (0, 1), (1, 1), (1, -1))
    edges = []
    for i in range(w):
        for j in range(h):
            for di, dj in steps:
                ni, nj = i + di, j + dj
                if 0 <= ni < w and 0 <= nj < h:
                    edges.append(((i, j), (ni, nj)))
    return Graph(edges, vertices=((i, j) for i in range(w) for j in range(h)))


def triangular_tiling(w: int, h: int) -> Graph:
    """Parallelogram window of the triangular tiling, unit weights.

    Vertices (i, j) for 0 <= i < w, 0 <= j < h; edges step by (1,0), (0,1)
    and (1,1), so every interior vertex has six neighbors forming a 6-cycle.
    """
    _require_dims(w, h)
    steps = ((1, 0), (0, 1), (1, 1))
    edges = []
    for i in range(w):
        for j in range(h):
            for di, dj in steps:
                ni, nj = i + di, j + dj
                if 0 <= ni < w and 0 <= nj < h:
                    edges.append(((i, j), (ni, nj)))
    return Graph(edges, vertices=((i, j) for i in range(w) for j in range(h)))


def tiling_interior(w: int, h: int) -> frozenset:
    """Vertices of triangular_tiling(w, h) with a full 6-neighborhood."""
    return frozenset((i, j) for i in range(1, w - 1) for j in range(1, h - 1))


def grid_interior(w: int, h: int) -> frozenset:
    """Vertices of grid(w, h) with a full 4-neighborhood."""
    return frozenset((i, j) for i in range(1, w - 1) for j in range(1, h - 1))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p) on vertices 0..n-1: each pair becomes an edge with probability p."""
    if n < 1:
        raise ValueError("need at least one vertex")
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph(edges, vertices=range(n))


def random_connected_graph(n: int, p: float, rng: random.Random, max_tries: int = 1000) -> Graph:
    """Resample G(n, p) until connected."""
    for _ in range(max_tries):
        g = random_graph(n, p, rng)
        if g.is_connected:
            return g
    raise RuntimeError(f"no connected G({n}, {p}) found in {max_tries} tries")


def _require_dims(w: int, h: int) -> None:
    if w < 1 or h < 1:
        raise ValueError("grid dimensions must be positive")
