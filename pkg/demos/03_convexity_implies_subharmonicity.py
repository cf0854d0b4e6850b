"""
When does convexity force subharmonicity?
=========================================

A function that is convex at a vertex z is also subharmonic there,
provided the neighborhood of z is structured so that mean comparisons
can be assembled out of two-point convexity inequalities.  Two
sufficient structures are implemented:

* triangle-free: z has degree > 1 and no two neighbors are adjacent
  (claim id thm1);
* pairing: the neighbors of z split into mutually non-adjacent pairs
  (claim id thm2) - each pair (u, w) has z on a u-w geodesic, so the
  two-point inequality at (u, w) bounds f(z) by their average.

This script exercises the claim checkers, runs the exhaustive sweeps
over all small connected graphs, and finishes with the cautionary tale:
the pointwise converse is false on 6-cycles, although the function-level
equivalence survives on every cycle.
"""

from graphconvex import (
    Graph,
    cycle,
    distance_function,
    exhaustive_small_graph_sweep,
    grid,
    grid_interior,
    is_convex_at,
    is_subharmonic_at,
    pairing_hypothesis,
    tiling_interior,
    triangle_free_hypothesis,
    triangular_tiling,
    verify_degree2_equivalence,
    verify_pointwise_implication,
)

# -- single instances ---------------------------------------------------------

square = Graph([("a", "x"), ("x", "y"), ("y", "z"), ("z", "a")])
f = distance_function(square.metric(), "a")
report = verify_pointwise_implication(square, f, "triangle_free")
print(f"d(., a) on the square: {report.verdict}")
print(f"  hypothesis held at {report.checked} vertices, fired at {report.hypothesis_fired}")
# it fires at a, x, z but not at y - d(., a) is not convex at y, so the
# implication has nothing to say there
assert (report.checked, report.hypothesis_fired) == (4, 3)

# -- where the hypotheses hold --------------------------------------------------

tri = triangular_tiling(5, 5)
z = sorted(tiling_interior(5, 5))[0]
print(f"\ntriangular tiling, interior vertex {z}:")
print(f"  triangle-free? {triangle_free_hypothesis(tri, z)} (degree {tri.degree(z)})")
pairs = pairing_hypothesis(tri, z)
print(f"  but the 6 neighbors pair up: {pairs}")
assert pairs is not None and len(pairs) == 3

gz = sorted(grid_interior(5, 5))[0]
print(f"grid, interior vertex {gz}: pairs = {pairing_hypothesis(grid(5, 5), gz)}")

# -- exhaustive sweeps over every small connected graph ---------------------------

for hyp in ("triangle_free", "pairing"):
    sweep = exhaustive_small_graph_sweep(hyp, max_n=5, values=(0, 1, 2))
    print(f"\nsweep [{hyp}] over {sweep.instance}:")
    print(f"  {sweep.checked} sites checked, {sweep.hypothesis_fired} fired, verdict {sweep.verdict}")
    assert sweep.verdict == "verified"

# -- cycles: exact equivalence at the level of whole functions --------------------

for n in (4, 5, 6):
    r = verify_degree2_equivalence(cycle(n))
    print(f"cycle({n}): convex-everywhere <=> subharmonic-everywhere, {r.verdict} "
          f"({r.checked} checks, {r.hypothesis_fired} firings)")
    assert r.verdict == "verified"

# -- ...but not at the level of single vertices ------------------------------------

c6 = cycle(6)
g6 = c6.metric()
f6 = {0: 0, 1: 0, 2: 0, 3: 0, 4: 1, 5: 2}
print(f"\ncycle(6) with f = {f6}:")
print(f"  subharmonic at 4? {bool(is_subharmonic_at(c6, f6, 4))}  (1 <= (0 + 2)/2)")
v = is_convex_at(g6, f6, 4)
print(f"  convex at 4?      {bool(v)}  "
      f"(pair ({v.witness.x}, {v.witness.y}): {v.witness.lhs} > {v.witness.rhs})")
assert is_subharmonic_at(c6, f6, 4) and not v
print("subharmonicity at a vertex sees only the two neighbors; convexity")
print("at a vertex also answers to longer between-pairs routed through it.")
