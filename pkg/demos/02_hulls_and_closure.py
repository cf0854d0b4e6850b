"""
Convex hulls as a closure operator
==================================

The hull of a vertex set is the least fixed point of the one-step
betweenness closure: keep adding every vertex that lies on a geodesic
between two current members until nothing changes.  This script walks
through hulls on a path, a cycle and a grid, then recomputes a batch of
hulls by brute force - intersecting all convex supersets - to show the
two characterizations agree.
"""

import random

from graphconvex import (
    betweenness_closure,
    brute_force_convex_hull,
    convex_hull,
    cycle,
    grid,
    path,
    random_connected_graph,
)

# -- a path: hulls are intervals ------------------------------------------------

p = path(7)
mp = p.metric()
print("path(7), hull of {1, 5}:", sorted(convex_hull(mp, {1, 5})))
assert convex_hull(mp, {1, 5}) == frozenset(range(1, 6))

# -- a long cycle: two far-apart vertices drag in a whole arc --------------------

c = cycle(9)
mc = c.metric()
print("cycle(9), hull of {0, 3}:", sorted(convex_hull(mc, {0, 3})))
# 0 and 3 are at distance 3 along one arc (the other way is 6), so only
# the short arc fills in
assert convex_hull(mc, {0, 3}) == frozenset({0, 1, 2, 3})

# antipodal-ish pairs are more dramatic: on an even cycle both arcs tie
c8 = cycle(8)
print("cycle(8), hull of {0, 4}:", sorted(convex_hull(c8.metric(), {0, 4})))

# -- a grid: the hull of two corners is the bounding rectangle -------------------

g = grid(5, 5)
mg = g.metric()
corners = {(0, 0), (2, 2)}
hull = convex_hull(mg, corners)
print(f"grid(5,5), hull of {sorted(corners)} has {len(hull)} vertices")
assert hull == frozenset((i, j) for i in range(3) for j in range(3))

# here one betweenness step already finishes: every box point lies on some
# staircase geodesic between the corners
assert betweenness_closure(mg, corners) == hull

# -- but closure can genuinely need more than one round ---------------------------

from graphconvex import triangular_tiling

t = triangular_tiling(4, 4)
mt = t.metric()
triple = {(0, 0), (0, 3), (3, 3)}
step1 = betweenness_closure(mt, triple)
hull_t = convex_hull(mt, triple)
print(f"triangular tiling, closure of {sorted(triple)}: "
      f"{len(step1)} vertices after one step, {len(hull_t)} in the hull")
assert step1 < hull_t
late = sorted(hull_t - step1)
print(f"  arriving only in round two: {late}")

# -- agreement with the brute-force characterization ------------------------------

# hull(S) should equal the intersection of every convex superset of S.
# That definition is exponential, which is exactly what makes it a good
# independent oracle for small graphs.
rng = random.Random("hull-oracle-demo")
trials = 0
for k in range(6):
    g = random_connected_graph(rng.randint(4, 8), 0.5, rng)
    m = g.metric()
    for _ in range(40):
        size = rng.randint(0, g.vertex_count)
        subset = frozenset(rng.sample(g.vertices, size))
        assert convex_hull(m, subset) == brute_force_convex_hull(m, subset)
        trials += 1
print(f"\nfixed-point hull == intersection-of-convex-supersets on {trials} random subsets")

# -- closure laws -----------------------------------------------------------------

s, t = frozenset({(0, 0)}), frozenset({(0, 0), (2, 2), (4, 0)})
hs, ht = convex_hull(mg, s), convex_hull(mg, t)
assert s <= hs and hs <= ht and convex_hull(mg, hs) == hs
print("extensive, monotone, idempotent: a closure operator in good standing")
