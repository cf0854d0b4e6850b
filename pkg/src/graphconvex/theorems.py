"""Machine checks for the claims connecting convexity and subharmonicity.

Each verifier scans an instance, fires wherever the claim's hypothesis
holds, asserts the claimed conclusion there, and returns a
:class:`ClaimReport`.  Vacuous outcomes (the hypothesis never fired) are
first-class: a claim suite that only ever fires vacuously is treated as a
failure by the CLI.

Claim ids used throughout (also the CLI vocabulary):

================  ============================================================
``thm1``          triangle-free at z with deg(z) > 1: convex at z implies
                  subharmonic at z (unit weights)
``thm2``          neighbors of z split into non-adjacent pairs: convex at z
                  implies subharmonic at z (unit weights)
``thm3``          d(., F) convex everywhere implies F is convex (graph metric)
``thm4-cvx-sub``  midpoint convex implies weighted-subharmonic at interior
                  lattice vertices
``lem-deg2``      on connected 2-regular triangle-free graphs, a function is
                  convex everywhere iff subharmonic everywhere
``lem-dist-pt``   f = ||. - a|| is midpoint convex at every window vertex
``prop-dist-cvx`` d(., F) midpoint convex everywhere implies F is convex
                  (norm metric)
``prop-nn``       F convex with the nearest-neighbor property: d(., F) is
                  midpoint convex and weighted-subharmonic at interior
                  vertices
================  ============================================================
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Mapping

from . import generators
from .convexity import (
    distance_function,
    indicator,
    is_convex_at,
    is_convex_set,
    set_distance_function,
)
from .enumeration import connected_unit_graphs
from .extreal import DEFAULT_TOL
from .graph import Graph
from .io import format_graph, format_vertex
from .lattice import GroupLattice, is_midpoint_convex_at, has_nearest_neighbor_property
from .subharmonic import is_subharmonic_at

CLAIM_IDS = (
    "thm1",
    "thm2",
    "thm3",
    "thm4-cvx-sub",
    "lem-deg2",
    "lem-dist-pt",
    "prop-dist-cvx",
    "prop-nn",
)

PREDICATES = ("convex-not-subharmonic", "distance-fn-not-convex")

SAMPLERS = ("distance", "random-int", "indicator", "constant")

FAMILIES = ("cycle", "path", "grid", "random")


@dataclass
class ClaimReport:
    """Outcome of checking one claim on one instance (or aggregated sweep).

    ``checked`` counts assertion sites scanned, ``hypothesis_fired`` how many
    of them had the full antecedent hold (each such site was asserted).
    ``verdict`` is ``"verified"``, ``"vacuous"`` (never fired) or
    ``"refuted"`` (an assertion failed; ``witness`` says where).
    """

    claim: str
    instance: str
    checked: int
    hypothesis_fired: int
    verdict: str
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.verdict != "refuted"

    def as_dict(self) -> dict:
        out = {
            "claim": self.claim,
            "instance": self.instance,
            "checked": self.checked,
            "hypothesis_fired": self.hypothesis_fired,
            "verdict": self.verdict,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def aggregate_reports(claim: str, instance: str, reports: Iterable[ClaimReport]) -> ClaimReport:
    """Fold per-instance reports into one: refuted wins, then verified, then vacuous."""
    checked = fired = 0
    first_refuted: ClaimReport | None = None
    for r in reports:
        checked += r.checked
        fired += r.hypothesis_fired
        if r.verdict == "refuted" and first_refuted is None:
            first_refuted = r
    if first_refuted is not None:
        return ClaimReport(claim, instance, checked, fired, "refuted", first_refuted.witness)
    return ClaimReport(claim, instance, checked, fired, "verified" if fired else "vacuous")


# -- structural hypotheses ----------------------------------------------------


def triangle_free_hypothesis(g: Graph, z) -> bool:
    """deg(z) > 1 and no two neighbors of z are adjacent."""
    return g.degree(z) > 1 and not g.in_triangle(z)


def pairing_hypothesis(g: Graph, z) -> tuple | None:
    """A partition of z's neighbors into mutually non-adjacent pairs, or None.

    Deterministic backtracking in vertex order, so the same matching is
    returned every time.  Odd degree (and degree zero, where neighborhood
    means are undefined) yields None.
    """
    nbrs = [v for v in g.vertices if g.adjacent(z, v)]
    if not nbrs or len(nbrs) % 2:
        return None
    pairs: list[tuple] = []

    def extend(remaining: list) -> bool:
        if not remaining:
            return True
        a = remaining[0]
        for k in range(1, len(remaining)):
            b = remaining[k]
            if not g.adjacent(a, b):
                pairs.append((a, b))
                if extend(remaining[1:k] + remaining[k + 1 :]):
                    return True
                pairs.pop()
        return False

    return tuple(pairs) if extend(nbrs) else None


# -- pointwise implication claims ---------------------------------------------


def verify_pointwise_implication(
    instance: Graph | GroupLattice,
    f: Mapping,
    hypothesis: str,
    tol: float = DEFAULT_TOL,
    label: str | None = None,
) -> ClaimReport:
    """Assert "convex here implies subharmonic here" wherever the named
    hypothesis holds.

    ``hypothesis`` is ``"triangle_free"`` or ``"pairing"`` on a unit-weight
    graph (plain means, claim thm1/thm2), or ``"midpoint"`` on a lattice
    (weighted means at interior vertices, claim thm4-cvx-sub).
    """
    if hypothesis in ("triangle_free", "pairing"):
        if not isinstance(instance, Graph):
            raise ValueError(f"hypothesis {hypothesis!r} needs a Graph instance")
        return _verify_on_graph(instance, f, hypothesis, tol, label)
    if hypothesis == "midpoint":
        if not isinstance(instance, GroupLattice):
            raise ValueError("hypothesis 'midpoint' needs a GroupLattice instance")
        return _verify_on_lattice(instance, f, tol, label)
    raise ValueError(f"unknown hypothesis {hypothesis!r}")


def _verify_on_graph(g: Graph, f, hypothesis, tol, label) -> ClaimReport:
    if not g.is_unit_weight:
        raise ValueError("structural hypotheses assume unit edge weights")
    claim = "thm1" if hypothesis == "triangle_free" else "thm2"
    instance = label or repr(g)
    m = g.metric(tol)
    checked = fired = 0
    for z in g.vertices:
        if hypothesis == "triangle_free":
            hyp = triangle_free_hypothesis(g, z)
        else:
            hyp = pairing_hypothesis(g, z) is not None
        if not hyp:
            continue
        checked += 1
        if not is_convex_at(m, f, z):
            continue
        fired += 1
        cmp = is_subharmonic_at(g, f, z, weighted=False, tol=tol)
        if not cmp:
            witness = {
                "vertex": format_vertex(z),
                "f_value": _num(cmp.f_value),
                "neighborhood_mean": _num(cmp.neighborhood_mean),
            }
            return ClaimReport(claim, instance, checked, fired, "refuted", witness)
    return ClaimReport(claim, instance, checked, fired, "verified" if fired else "vacuous")


def _verify_on_lattice(lat: GroupLattice, f, tol, label) -> ClaimReport:
    instance = label or repr(lat)
    checked = fired = 0
    for x in sorted(lat.interior):
        if lat.graph.degree(x) == 0:
            continue  # radius below 1: no neighbors, no mean to compare
        checked += 1
        if not is_midpoint_convex_at(lat, f, x, tol=tol):
            continue
        fired += 1
        cmp = is_subharmonic_at(lat.graph, f, x, weighted=True, tol=tol)
        if not cmp:
            witness = {
                "vertex": format_vertex(x),
                "f_value": _num(cmp.f_value),
                "neighborhood_mean": _num(cmp.neighborhood_mean),
                "total_weight": _num(cmp.total_weight),
            }
            return ClaimReport("thm4-cvx-sub", instance, checked, fired, "refuted", witness)
    return ClaimReport(
        "thm4-cvx-sub", instance, checked, fired, "verified" if fired else "vacuous"
    )


# -- distance-function claims --------------------------------------------------


def verify_dist_convex_implies_set_convex(
    instance: Graph | GroupLattice,
    members,
    tol: float = DEFAULT_TOL,
    label: str | None = None,
) -> ClaimReport:
    """If d(., F) is convex (graph metric: two-point inequality everywhere;
    lattice: midpoint inequality everywhere), then F must be a convex set.

    Claim thm3 on graphs, prop-dist-cvx on lattices.  F must be nonempty.
    """
    f_set = frozenset(members)
    if not f_set:
        raise ValueError("F must be nonempty")
    if isinstance(instance, GroupLattice):
        claim = "prop-dist-cvx"
        m = instance.metric(tol)
        fun = set_distance_function(m, f_set)
        antecedent = all(
            is_midpoint_convex_at(instance, fun, x, tol=tol) for x in instance.window
        )
        checked = len(instance.window)
    else:
        claim = "thm3"
        m = instance.metric(tol)
        fun = set_distance_function(m, f_set)
        antecedent = all(is_convex_at(m, fun, z) for z in m.vertices)
        checked = len(m.vertices)
    name = label or f"{instance!r}, |F|={len(f_set)}"
    if not antecedent:
        return ClaimReport(claim, name, checked, 0, "vacuous")
    if is_convex_set(m, f_set):
        return ClaimReport(claim, name, checked, 1, "verified")
    from .convexity import betweenness_closure

    extra = sorted(betweenness_closure(m, f_set) - f_set, key=format_vertex)
    witness = {"vertex": format_vertex(extra[0]), "outside_set": True}
    return ClaimReport(claim, name, checked, 1, "refuted", witness)


def verify_nn_implies_dist_midpoint_convex(
    lat: GroupLattice,
    members,
    tol: float = DEFAULT_TOL,
    label: str | None = None,
) -> ClaimReport:
    """Claim prop-nn: a convex set with the nearest-neighbor property has a
    midpoint-convex (hence weighted-subharmonic) distance function at every
    interior vertex."""
    f_set = frozenset(members)
    if not f_set:
        raise ValueError("F must be nonempty")
    name = label or f"{lat!r}, |F|={len(f_set)}"
    m = lat.metric(tol)
    checked = len(lat.interior)
    if not is_convex_set(m, f_set) or not has_nearest_neighbor_property(lat, f_set, tol=tol):
        return ClaimReport("prop-nn", name, checked, 0, "vacuous")
    fun = set_distance_function(m, f_set)
    fired = 0
    for x in sorted(lat.interior):
        if lat.graph.degree(x) == 0:
            continue
        fired += 1
        mp = is_midpoint_convex_at(lat, fun, x, tol=tol)
        if not mp:
            w = mp.witness
            witness = {
                "vertex": format_vertex(x),
                "z": format_vertex(w.z),
                "lhs": _num(w.lhs),
                "rhs": _num(w.rhs),
            }
            return ClaimReport("prop-nn", name, checked, fired, "refuted", witness)
        cmp = is_subharmonic_at(lat.graph, fun, x, weighted=True, tol=tol)
        if not cmp:
            witness = {
                "vertex": format_vertex(x),
                "f_value": _num(cmp.f_value),
                "neighborhood_mean": _num(cmp.neighborhood_mean),
            }
            return ClaimReport("prop-nn", name, checked, fired, "refuted", witness)
    return ClaimReport("prop-nn", name, checked, fired, "verified" if fired else "vacuous")


def verify_dist_to_point_midpoint_convex(
    lat: GroupLattice,
    points: Iterable | None = None,
    count: int = 20,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
) -> ClaimReport:
    """Claim lem-dist-pt: f = ||. - a|| is midpoint convex at every window
    vertex, for each base point a (sampled near the window by default)."""
    spec = lat.spec
    if points is None:
        rng = random.Random(f"dist-pt:{seed}")
        points = [
            tuple(rng.randint(lo - 2, hi + 2) for lo, hi in spec.window)
            for _ in range(count)
        ]
    else:
        points = list(points)
    checked = fired = 0
    for a in points:
        fun = {v: spec.norm_value(_sub(v, a)) for v in lat.window}
        for x in lat.window:
            checked += 1
            fired += 1
            mp = is_midpoint_convex_at(lat, fun, x, tol=tol)
            if not mp:
                w = mp.witness
                witness = {
                    "base_point": format_vertex(a),
                    "vertex": format_vertex(x),
                    "z": format_vertex(w.z),
                    "lhs": _num(w.lhs),
                    "rhs": _num(w.rhs),
                }
                return ClaimReport(
                    "lem-dist-pt", repr(lat), checked, fired, "refuted", witness
                )
    return ClaimReport(
        "lem-dist-pt",
        f"{lat!r}, {len(points)} base points",
        checked,
        fired,
        "verified" if fired else "vacuous",
    )


# -- degree-2 equivalence -------------------------------------------------------


def verify_degree2_equivalence(g: Graph, values=(0, 1, 2)) -> ClaimReport:
    """Claim lem-deg2 on a connected 2-regular triangle-free graph.

    For every function into ``values`` this asserts, in exact ints:

    * pointwise, convex at z implies subharmonic at z;
    * globally, convex everywhere iff subharmonic everywhere.

    The pointwise *converse* is deliberately not asserted: on cycles of
    length >= 6 a function can be subharmonic at a vertex while a longer
    between-pair refutes convexity there (see the test suite for a concrete
    witness), so only the function-level equivalence is a theorem.
    """
    if not g.is_unit_weight:
        raise ValueError("degree-2 equivalence assumes unit weights")
    if not g.is_connected:
        raise ValueError("degree-2 equivalence needs a connected graph")
    if any(g.degree(v) != 2 for v in g.vertices):
        raise ValueError("degree-2 equivalence needs a 2-regular graph")
    if any(g.in_triangle(v) for v in g.vertices):
        raise ValueError("degree-2 equivalence needs a triangle-free graph")
    if not all(isinstance(v, int) for v in values):
        raise ValueError("values must be ints for the exact sweep")
    n = g.vertex_count
    if len(values) ** n > 250_000:
        raise ValueError("value sweep too large")
    pairs_at, nbrs_at = _prepare_unit(g)
    checked = fired = 0
    for fvals in itertools.product(values, repeat=n):
        conv = []
        sub = []
        for k in range(n):
            fz = fvals[k]
            ok = True
            for i, j, dij, djz, diz in pairs_at[k]:
                if dij * fz > djz * fvals[i] + diz * fvals[j]:
                    ok = False
                    break
            conv.append(ok)
            nlist, deg = nbrs_at[k]
            sub.append(deg * fz <= sum(fvals[i] for i in nlist))
            checked += 1
        for k in range(n):
            if conv[k] and not sub[k]:
                witness = _sweep_witness(g, fvals, k, "convex at z but not subharmonic at z")
                return ClaimReport("lem-deg2", repr(g), checked, fired, "refuted", witness)
        fired += sum(conv)
        if all(sub):
            fired += 1
            if not all(conv):
                k = conv.index(False)
                witness = _sweep_witness(
                    g, fvals, k, "subharmonic everywhere but not convex everywhere"
                )
                return ClaimReport("lem-deg2", repr(g), checked, fired, "refuted", witness)
        elif all(conv):
            k = sub.index(False)
            witness = _sweep_witness(
                g, fvals, k, "convex everywhere but not subharmonic everywhere"
            )
            return ClaimReport("lem-deg2", repr(g), checked, fired, "refuted", witness)
    return ClaimReport(
        "lem-deg2",
        f"{g!r}, f in {values}^X",
        checked,
        fired,
        "verified" if fired else "vacuous",
    )


# -- exhaustive sweeps over small graphs ----------------------------------------


def exhaustive_small_graph_sweep(
    hypothesis: str,
    max_n: int = 6,
    values=(0, 1, 2),
    graphs: Iterable[Graph] | None = None,
) -> ClaimReport:
    """Run thm1/thm2 over every function into ``values`` on every connected
    graph up to ``max_n`` vertices (one per isomorphism class).

    All arithmetic is exact ints.  The returned report counts every
    hypothesis site scanned and every firing (site where the function was
    also convex); a single refutation aborts the sweep with its witness.
    """
    if hypothesis == "triangle_free":
        claim = "thm1"

        def hyp(g, z):
            return triangle_free_hypothesis(g, z)

    elif hypothesis == "pairing":
        claim = "thm2"

        def hyp(g, z):
            return pairing_hypothesis(g, z) is not None

    else:
        raise ValueError(f"unknown hypothesis {hypothesis!r}")
    if not all(isinstance(v, int) for v in values):
        raise ValueError("values must be ints for the exact sweep")
    if graphs is None:
        graphs = [g for n in range(1, max_n + 1) for g in connected_unit_graphs(n)]
    else:
        graphs = list(graphs)
    checked = fired = 0
    for g in graphs:
        if len(values) ** g.vertex_count > 4_000_000:
            raise ValueError(
                f"value sweep over {g.vertex_count} vertices is too large"
            )
        index = {v: i for i, v in enumerate(g.vertices)}
        sites = [index[z] for z in g.vertices if hyp(g, z)]
        if not sites:
            continue
        pairs_at, nbrs_at = _prepare_unit(g)
        data = [(k, pairs_at[k], nbrs_at[k]) for k in sites]
        n = g.vertex_count
        for fvals in itertools.product(values, repeat=n):
            for k, plist, (nlist, deg) in data:
                fz = fvals[k]
                checked += 1
                ok = True
                for i, j, dij, djz, diz in plist:
                    if dij * fz > djz * fvals[i] + diz * fvals[j]:
                        ok = False
                        break
                if not ok:
                    continue
                fired += 1
                if deg * fz > sum(fvals[i] for i in nlist):
                    witness = _sweep_witness(
                        g, fvals, k, "convex at z but not subharmonic at z"
                    )
                    label = f"{len(graphs)} graphs, f in {values}^X"
                    return ClaimReport(claim, label, checked, fired, "refuted", witness)
    label = f"{len(graphs)} graphs, f in {values}^X"
    return ClaimReport(claim, label, checked, fired, "verified" if fired else "vacuous")


def _prepare_unit(g: Graph):
    """Index-based distance/betweenness tables for exact integer sweeps."""
    if not g.is_unit_weight:
        raise ValueError("prepared sweeps require unit weights")
    verts = g.vertices
    n = len(verts)
    rows = []
    for u in verts:
        row = g.distances_from(u)
        rows.append([row.get(v) for v in verts])
    pairs_at: list[list[tuple]] = [[] for _ in range(n)]
    for k in range(n):
        for i in range(n):
            dik = rows[i][k]
            if dik is None:
                continue
            for j in range(i + 1, n):
                dij = rows[i][j]
                if dij is None or dij == 0:
                    continue
                dkj = rows[k][j]
                if dkj is None:
                    continue
                if dik + dkj == dij:
                    pairs_at[k].append((i, j, dij, dkj, dik))
    nbrs_at = []
    index = {v: i for i, v in enumerate(verts)}
    for v in verts:
        nlist = [index[u] for u in g.neighbors(v)]
        nbrs_at.append((nlist, len(nlist)))
    return pairs_at, nbrs_at


def _sweep_witness(g: Graph, fvals, k: int, reason: str) -> dict:
    verts = g.vertices
    return {
        "graph": format_graph(g),
        "f": {format_vertex(v): fvals[i] for i, v in enumerate(verts)},
        "vertex": format_vertex(verts[k]),
        "reason": reason,
    }


# -- self-contained suites (no user-supplied function/set) ------------------------


def sweep_max_affine(
    lat: GroupLattice, count: int = 50, seed: int = 0, tol: float = DEFAULT_TOL
) -> ClaimReport:
    """thm4-cvx-sub over ``count`` sampled max-of-affine functions."""
    rng = random.Random(f"max-affine:{seed}")
    reports = [
        verify_pointwise_implication(lat, fun, "midpoint", tol=tol, label=name)
        for name, fun in max_affine_samples(lat.spec, rng, count)
    ]
    return aggregate_reports(
        "thm4-cvx-sub", f"{lat!r}, {count} max-affine samples", reports
    )


def sweep_subsets_dist_convex(
    instance: Graph | GroupLattice, tol: float = DEFAULT_TOL, max_universe: int = 12
) -> ClaimReport:
    """thm3 (graph) / prop-dist-cvx (lattice) over every nonempty subset."""
    universe = instance.window if isinstance(instance, GroupLattice) else instance.vertices
    claim = "prop-dist-cvx" if isinstance(instance, GroupLattice) else "thm3"
    reports = [
        verify_dist_convex_implies_set_convex(instance, subset, tol=tol)
        for subset in _nonempty_subsets(universe, max_universe)
    ]
    return aggregate_reports(claim, f"{instance!r}, all nonempty F", reports)


def sweep_subsets_nn(
    lat: GroupLattice, tol: float = DEFAULT_TOL, max_universe: int = 12
) -> ClaimReport:
    """prop-nn over every nonempty subset of the window."""
    reports = [
        verify_nn_implies_dist_midpoint_convex(lat, subset, tol=tol)
        for subset in _nonempty_subsets(lat.window, max_universe)
    ]
    return aggregate_reports("prop-nn", f"{lat!r}, all nonempty F", reports)


def _nonempty_subsets(universe, max_universe: int) -> Iterator[frozenset]:
    items = tuple(universe)
    if len(items) > max_universe:
        raise ValueError(
            f"subset sweep over {len(items)} vertices is too large "
            f"(limit {max_universe})"
        )
    for mask in range(1, 1 << len(items)):
        yield frozenset(v for i, v in enumerate(items) if mask >> i & 1)


# -- function samplers -----------------------------------------------------------


def integer_function_samples(
    vertices, rng: random.Random, count: int = 20, lo: int = -3, hi: int = 3
) -> Iterator[tuple[str, dict]]:
    """Uniform random integer functions into [lo, hi]."""
    vs = tuple(vertices)
    for k in range(count):
        yield f"random-int#{k}", {v: rng.randint(lo, hi) for v in vs}


def indicator_samples(
    vertices, rng: random.Random, count: int = 20
) -> Iterator[tuple[str, dict]]:
    """Indicators (0 on the set, +inf off it) of random nonempty subsets."""
    vs = tuple(vertices)
    for k in range(count):
        size = rng.randint(1, len(vs))
        subset = rng.sample(vs, size)
        yield f"indicator#{k}", indicator(subset, vs)


def max_affine_samples(
    spec,
    rng: random.Random,
    count: int = 200,
    max_terms: int = 4,
    coeff_bound: int = 2,
    offset_bound: int = 3,
) -> Iterator[tuple[str, dict]]:
    """Maxima of up to ``max_terms`` integer affine forms <c, v> + b on a
    lattice window: midpoint convex by construction, in exact ints."""
    pts = tuple(spec.points())
    for k in range(count):
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            c = tuple(rng.randint(-coeff_bound, coeff_bound) for _ in range(spec.dimension))
            b = rng.randint(-offset_bound, offset_bound)
            terms.append((c, b))
        fun = {
            v: max(sum(ci * vi for ci, vi in zip(c, v)) + b for c, b in terms)
            for v in pts
        }
        yield f"max-affine#{k}", fun


# -- counterexample search ---------------------------------------------------------


@dataclass(frozen=True)
class SearchWitness:
    """A found counterexample: which instance, which function, which vertex."""

    instance: str
    function: str
    vertex: Any
    graph: Graph
    values: dict
    detail: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "instance": self.instance,
            "function": self.function,
            "vertex": format_vertex(self.vertex),
            "graph": format_graph(self.graph),
            "values": {format_vertex(v): _num(x) for v, x in self.values.items()},
            "detail": self.detail,
        }


def search_counterexample(
    family: str,
    sampler: str,
    budget: int,
    predicate: str = "convex-not-subharmonic",
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    **params,
) -> SearchWitness | None:
    """Scan ``budget`` instances of a graph family, sampling functions on
    each, for the first vertex where the predicate trips.

    Predicates:

    * ``convex-not-subharmonic`` - f convex at z but not subharmonic at z
      (never fires when the structural hypotheses of thm1/thm2 hold);
    * ``distance-fn-not-convex`` - f fails the two-point inequality at z
      (with the ``distance`` sampler this finds the classic 4-cycle failure
      of d(., a)).

    Returns None when the budget is exhausted without a hit.  Fully
    deterministic for a given seed.
    """
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}")
    instances = _family_instances(family, seed, params)
    for idx, (label, g) in enumerate(itertools.islice(instances, budget)):
        m = g.metric(tol)
        rng_key = f"search:{seed}:{idx}"
        for flabel, fun in _sampler_functions(sampler, g, m, rng_key, params):
            for z in g.vertices:
                hit = _evaluate_predicate(predicate, g, m, fun, z, tol)
                if hit is not None:
                    return SearchWitness(label, flabel, z, g, dict(fun), hit)
    return None


def _evaluate_predicate(predicate, g, m, fun, z, tol) -> dict | None:
    if z not in fun:
        return None
    if predicate == "convex-not-subharmonic":
        if g.degree(z) == 0:
            return None
        if not is_convex_at(m, fun, z):
            return None
        cmp = is_subharmonic_at(g, fun, z, tol=tol)
        if cmp:
            return None
        return {
            "f_value": _num(cmp.f_value),
            "neighborhood_mean": _num(cmp.neighborhood_mean),
        }
    verdict = is_convex_at(m, fun, z)
    if verdict:
        return None
    w = verdict.witness
    detail = {
        "pair": [format_vertex(w.x), format_vertex(w.y)],
        "lhs": _num(w.lhs),
        "rhs": _num(w.rhs),
    }
    if g.degree(z) > 0:
        detail["subharmonic"] = bool(is_subharmonic_at(g, fun, z, tol=tol))
    return detail


def _family_instances(family: str, seed: int, params) -> Iterator[tuple[str, Graph]]:
    if family == "cycle":
        sizes = params.get("sizes") or itertools.count(3)
        return ((f"cycle({n})", generators.cycle(n)) for n in sizes)
    if family == "path":
        sizes = params.get("sizes") or itertools.count(2)
        return ((f"path({n})", generators.path(n)) for n in sizes)
    if family == "grid":
        dims = params.get("dims") or _grid_dims()
        return ((f"grid({w}x{h})", generators.grid(w, h)) for w, h in dims)
    if family == "random":
        return _random_instances(seed, params)
    raise ValueError(f"unknown family {family!r}")


def _random_instances(seed: int, params) -> Iterator[tuple[str, Graph]]:
    p = params.get("p", 0.5)
    fixed_n = params.get("n")
    for idx in itertools.count():
        n = fixed_n if fixed_n else 4 + idx % 5
        rng = random.Random(f"family:{seed}:{idx}")
        yield f"random(n={n},p={p})#{idx}", generators.random_graph(n, p, rng)


def _grid_dims() -> Iterator[tuple[int, int]]:
    for area in itertools.count(4):
        for w in range(2, int(math.isqrt(area)) + 1):
            if area % w == 0:
                yield (w, area // w)


def _sampler_functions(sampler, g, m, rng_key, params) -> Iterator[tuple[str, dict]]:
    count = params.get("count", 20)
    if sampler == "distance":
        return ((f"d(.,{format_vertex(a)})", distance_function(m, a)) for a in m.vertices)
    if sampler == "random-int":
        return integer_function_samples(g.vertices, random.Random(rng_key), count)
    if sampler == "indicator":
        return indicator_samples(g.vertices, random.Random(rng_key), count)
    if sampler == "constant":
        return ((f"const {c}", {v: c for v in g.vertices}) for c in (0, 1))
    raise ValueError(f"unknown sampler {sampler!r}")


def _num(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return x


def _sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))
