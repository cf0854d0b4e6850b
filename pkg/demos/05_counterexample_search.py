"""
Searching for counterexamples
=============================

The claim checkers say "verified" on instances where the hypotheses
hold; the search tool plays the other side, scanning graph families and
function samplers for a vertex that breaks a predicate.  Two predicates
are built in:

* convex-not-subharmonic - a vertex where convexity holds but the
  neighborhood mean fails.  The structural results say this needs a
  triangle (or degree-1 boundary effects), and indeed the very first
  cycle, the triangle itself, delivers.
* distance-fn-not-convex - a vertex where some d(., a) fails the
  two-point inequality, which rediscovers the 4-cycle counterexample.

Searches are fully deterministic for a fixed seed.
"""

import json

from graphconvex import search_counterexample

# -- a triangle breaks convex => subharmonic ----------------------------------------

hit = search_counterexample("cycle", "distance", budget=1)
print("predicate convex-not-subharmonic, cycles from n=3:")
print(f"  found on {hit.instance}: {hit.function} at vertex {hit.vertex}")
print(f"  f = {hit.values}, detail = {hit.detail}")
assert hit.instance == "cycle(3)"
# on the triangle, d(., 0) is convex at vertex 1 (no nontrivial pair has
# 1 strictly between) yet f(1) = 1 > (f(0) + f(2)) / 2 = 1/2

# -- triangle-free cycles never trip it ----------------------------------------------

quiet = search_counterexample("cycle", "random-int", budget=4, seed=11,
                              sizes=[4, 5, 6, 7], count=60)
print(f"\nsame predicate on cycles 4..7, 60 random functions each: "
      f"{'no hit' if quiet is None else quiet.instance}")
assert quiet is None

# -- the classic square counterexample, rediscovered ----------------------------------

w = search_counterexample("cycle", "distance", budget=2,
                          predicate="distance-fn-not-convex")
print(f"\npredicate distance-fn-not-convex: found on {w.instance}, "
      f"{w.function} at vertex {w.vertex}")
print(f"  pair {w.detail['pair']}: f = {w.detail['lhs']} > {w.detail['rhs']}")
print(f"  subharmonic there? {w.detail['subharmonic']}")
assert w.instance == "cycle(4)" and w.vertex == 2

# -- everything a witness knows is serializable ----------------------------------------

print("\nwitness payload:")
print(json.dumps(w.as_dict(), indent=2))

# -- grids give the standard predicates nothing ------------------------------------------

none = search_counterexample("grid", "indicator", budget=3, seed=2, count=30)
print(f"\ngrids, 30 random indicators each, 3 instances: "
      f"{'no hit' if none is None else 'hit'}")
