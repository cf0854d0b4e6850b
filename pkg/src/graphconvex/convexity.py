"""Betweenness, closure operators, convex hulls and convex functions.

Everything here is relative to a :class:`~graphconvex.graph.Metric`.  A
vertex z lies between x and y when d(x, y) = d(x, z) + d(z, y) with
d(x, y) finite.  A set is convex when it is fixed by the one-step
betweenness closure; the convex hull is the least such fixed point.

A function f is convex at z when for every pair x, y with z between them,

    f(z) <= (d(y,z)/d(x,y)) * f(x) + (d(x,z)/d(x,y)) * f(y).

Functions may take the value +inf (e.g. indicators); the conventions are
0 * inf = 0 and v <= inf for every v.  The inequality is evaluated with
denominators cleared, so unit-weight graphs are checked in exact ints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Mapping

from .extreal import INF, approx_eq, approx_le, exact_div, scaled
from .graph import Metric, UnknownVertexError

VertexFunction = Mapping[Any, float]


@dataclass(frozen=True)
class ConvexityWitness:
    """A violated instance of the two-point inequality at some vertex."""

    x: Any
    y: Any
    lhs: Any  # f at the middle vertex
    rhs: Any  # the distance-weighted combination of f(x) and f(y)


@dataclass(frozen=True)
class ConvexityVerdict:
    ok: bool
    vertex: Any
    witness: ConvexityWitness | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_between(m: Metric, x, z, y) -> bool:
    """True iff d(x, y) = d(x, z) + d(z, y) with d(x, y) finite."""
    dxy = m.dist(x, y)
    if math.isinf(dxy):
        return False
    return approx_eq(dxy, m.dist(x, z) + m.dist(z, y), m.tol)


def betweenness_closure(m: Metric, members) -> frozenset:
    """One closure step: members plus every vertex between two members."""
    a = frozenset(members)
    _require_members(m, a)
    if not a:
        return a
    dist, tol = m.dist, m.tol
    out = set(a)
    pts = [v for v in m.vertices if v in a]
    for z in m.vertices:
        if z in out:
            continue
        found = False
        for i, x in enumerate(pts):
            dxz = dist(x, z)
            if math.isinf(dxz):
                continue
            for y in pts[i + 1 :]:
                dxy = dist(x, y)
                if math.isinf(dxy):
                    continue
                if approx_eq(dxy, dxz + dist(z, y), tol):
                    found = True
                    break
            if found:
                break
        if found:
            out.add(z)
    return frozenset(out)


def convex_hull(m: Metric, members) -> frozenset:
    """Least convex superset: iterate the closure to its fixed point."""
    current = frozenset(members)
    _require_members(m, current)
    for _ in range(len(m.vertices) + 1):
        nxt = betweenness_closure(m, current)
        if nxt == current:
            return current
        current = nxt
    raise RuntimeError("betweenness closure failed to stabilize")


def is_convex_set(m: Metric, members) -> bool:
    a = frozenset(members)
    return betweenness_closure(m, a) == a


def is_convex_at(m: Metric, f: VertexFunction, z) -> ConvexityVerdict:
    """Check the two-point inequality at z over all pairs in f's domain.

    Pairs are scanned in the metric's vertex order, so a failure reports
    the first violating pair.  Vertices without a value are skipped; if z
    itself has none there is nothing to check and the verdict is ok.
    """
    if z not in m.vertices:
        raise UnknownVertexError(z)
    if z not in f:
        return ConvexityVerdict(True, z)
    dist, tol = m.dist, m.tol
    dom = [v for v in m.vertices if v in f]
    fz = f[z]
    for i, x in enumerate(dom):
        dxz = dist(x, z)
        if math.isinf(dxz):
            continue
        fx = f[x]
        for y in dom[i + 1 :]:
            dxy = dist(x, y)
            if dxy == 0 or math.isinf(dxy):
                continue
            dzy = dist(z, y)
            if not approx_eq(dxy, dxz + dzy, tol):
                continue
            lhs = scaled(dxy, fz)
            rhs = scaled(dzy, fx) + scaled(dxz, f[y])
            if not approx_le(lhs, rhs, tol):
                combo = INF if math.isinf(rhs) else exact_div(rhs, dxy)
                return ConvexityVerdict(False, z, ConvexityWitness(x, y, fz, combo))
    return ConvexityVerdict(True, z)


def distance_to_set(m: Metric, x, members):
    """min over members of d(x, .); +inf for the empty set."""
    best = INF
    for y in members:
        d = m.dist(x, y)
        if d < best:
            best = d
    return best


def indicator(members, vertices) -> dict:
    """0 on the set, +inf off it."""
    s = set(members)
    unknown = s.difference(vertices)
    if unknown:
        raise UnknownVertexError(next(iter(unknown)))
    return {v: (0 if v in s else INF) for v in vertices}


def distance_function(m: Metric, a) -> dict:
    """f(v) = d(v, a) over the metric's vertex universe."""
    return {v: m.dist(v, a) for v in m.vertices}


def set_distance_function(m: Metric, members) -> dict:
    """f(v) = distance_to_set(v, members) over the vertex universe."""
    return {v: distance_to_set(m, v, members) for v in m.vertices}


def brute_force_convex_hull(m: Metric, members) -> frozenset:
    """Hull by enumeration: intersect every convex superset of the input.

    Exponential in the vertex count (guarded at 14); kept as an
    independent cross-check for :func:`convex_hull`.  The closure test is
    recomputed here from scratch on bitmasks rather than reusing
    :func:`betweenness_closure`.
    """
    n = len(m.vertices)
    if n > 14:
        raise ValueError(f"brute-force hull is limited to 14 vertices, got {n}")
    a = frozenset(members)
    _require_members(m, a)
    index, convex_masks = _hull_tables(m)
    amask = 0
    for v in a:
        amask |= 1 << index[v]
    result = (1 << n) - 1
    for bmask in convex_masks:
        if bmask & amask == amask:
            result &= bmask
    return frozenset(v for v, i in index.items() if result >> i & 1)


@lru_cache(maxsize=32)
def _hull_tables(m: Metric):
    """Per-metric tables for the brute-force hull: the vertex index and the
    bitmasks of all convex sets (the full vertex set is always among them)."""
    verts = m.vertices
    n = len(verts)
    index = {v: i for i, v in enumerate(verts)}
    dist, tol = m.dist, m.tol
    rows = [[dist(u, v) for v in verts] for u in verts]
    between = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            dij = rows[i][j]
            if math.isinf(dij):
                continue
            mask = 0
            for k in range(n):
                if approx_eq(dij, rows[i][k] + rows[k][j], tol):
                    mask |= 1 << k
            between[i][j] = mask
    convex_masks = []
    for mask in range(1 << n):
        closed = mask
        bits = [i for i in range(n) if mask >> i & 1]
        for ai, i in enumerate(bits):
            row = between[i]
            for j in bits[ai + 1 :]:
                closed |= row[j]
        if closed == mask:
            convex_masks.append(mask)
    return index, tuple(convex_masks)


def _require_members(m: Metric, members) -> None:
    known = set(m.vertices)
    for v in members:
        if v not in known:
            raise UnknownVertexError(v)
