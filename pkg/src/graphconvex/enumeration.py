"""Exhaustive enumeration of small connected graphs up to relabeling.

Graphs are represented as edge bitmasks over the pairs of 0..n-1.  The
canonical form of a graph is the minimum bitmask over all vertex orderings
consistent with an iterated color refinement (degrees, then multisets of
neighbor colors).  Refinement cells are usually tiny, so the minimum is
taken over few orderings; fully regular graphs fall back to all n!.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .graph import Graph


def connected_unit_graphs(n: int) -> list[Graph]:
    """All connected unit-weight graphs on vertices 0..n-1, one per
    isomorphism class, in deterministic order."""
    return [_from_mask(n, mask) for mask in _canonical_masks(n)]


def count_connected_graphs(n: int) -> int:
    return len(_canonical_masks(n))


def count_labeled_connected_graphs(n: int) -> int:
    """Connected graphs on labeled vertices 0..n-1 (no de-duplication)."""
    pairs = list(itertools.combinations(range(n), 2))
    return sum(1 for mask in range(1 << len(pairs)) if _connected(n, mask, pairs))


@lru_cache(maxsize=None)
def _canonical_masks(n: int) -> tuple[int, ...]:
    if n < 1:
        raise ValueError("need at least one vertex")
    pairs = list(itertools.combinations(range(n), 2))
    seen: set[int] = set()
    for mask in range(1 << len(pairs)):
        if not _connected(n, mask, pairs):
            continue
        canon = _canonical_form(n, mask, pairs)
        seen.add(canon)
    return tuple(sorted(seen))


def _from_mask(n: int, mask: int) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
    return Graph(edges, vertices=range(n))


def _neighbors(n: int, mask: int, pairs) -> list[list[int]]:
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for k, (i, j) in enumerate(pairs):
        if mask >> k & 1:
            nbrs[i].append(j)
            nbrs[j].append(i)
    return nbrs


def _connected(n: int, mask: int, pairs) -> bool:
    nbrs = _neighbors(n, mask, pairs)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in nbrs[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == n


def _refine(n: int, nbrs) -> list[int]:
    """Iterated color refinement; the final coloring is isomorphism-invariant."""
    colors = [len(nbrs[v]) for v in range(n)]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in nbrs[v])))
            for v in range(n)
        ]
        palette = {key: rank for rank, key in enumerate(sorted(set(keys)))}
        new = [palette[keys[v]] for v in range(n)]
        if new == colors:
            return colors
        colors = new


def _canonical_form(n: int, mask: int, pairs) -> int:
    pair_index = {p: k for k, p in enumerate(pairs)}
    nbrs = _neighbors(n, mask, pairs)
    colors = _refine(n, nbrs)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    ordered_cells = [cells[c] for c in sorted(cells)]
    edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
    best: int | None = None
    for perm_parts in itertools.product(
        *(itertools.permutations(cell) for cell in ordered_cells)
    ):
        order = [v for part in perm_parts for v in part]
        pos = [0] * n
        for position, v in enumerate(order):
            pos[v] = position
        candidate = 0
        for i, j in edges:
            a, b = pos[i], pos[j]
            if a > b:
                a, b = b, a
            candidate |= 1 << pair_index[(a, b)]
        if best is None or candidate < best:
            best = candidate
    assert best is not None
    return best
