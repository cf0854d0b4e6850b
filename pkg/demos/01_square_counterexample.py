"""
The 4-cycle counterexample
==========================

Distance functions on graphs are the first thing one reaches for when
looking for convex functions, and on trees they behave.  On the 4-cycle
a - x - y - z - a they already fail: d(., a) sits strictly above its
neighborhood mean at the antipodal vertex y, it is not convex there, and
the three vertices {x, y, z} fail to form a convex set because both
geodesics between x and z pass through the missing vertex a.

Every number below is an exact integer - no tolerance is involved.
"""

from graphconvex import (
    Graph,
    convex_hull,
    distance_function,
    is_convex_at,
    is_convex_set,
    is_subharmonic_at,
    laplacian,
)

square = Graph([("a", "x"), ("x", "y"), ("y", "z"), ("z", "a")])
m = square.metric()

# -- the distance function from a ------------------------------------------

f = distance_function(m, "a")
print("f = d(., a) on the square:")
for v in square.vertices:
    print(f"  f({v}) = {f[v]}")

# -- f pokes above the mean at the antipode ---------------------------------

cmp = is_subharmonic_at(square, f, "y")
print(f"\nat y: f(y) = {cmp.f_value}, neighborhood mean = {cmp.neighborhood_mean}")
print(f"subharmonic at y? {bool(cmp)}   (verdict: {cmp.verdict})")
assert cmp.f_value == 2 and cmp.neighborhood_mean == 1

# -- and convexity fails at the same vertex ----------------------------------

verdict = is_convex_at(m, f, "y")
w = verdict.witness
print(f"\nconvex at y? {bool(verdict)}")
print(f"  witness pair ({w.x}, {w.y}): f(y) = {w.lhs} > combination {w.rhs}")
assert w.lhs == 2 and w.rhs == 1 and isinstance(w.rhs, int)

# y lies between x and z (d(x,z) = 2 = 1 + 1), so convexity would force
# 2 f(y) <= f(x) + f(z) = 2, i.e. f(y) <= 1.  But f(y) = 2.

# -- {x, y, z} is not convex --------------------------------------------------

subset = {"x", "y", "z"}
print(f"\nis {sorted(subset)} convex? {is_convex_set(m, subset)}")
hull = convex_hull(m, subset)
print(f"its hull is {sorted(hull)}: both x-z geodesics must come along")
assert hull == frozenset("axyz")

# -- the laplacian view -------------------------------------------------------

lap = {v: laplacian(square, f, v) for v in square.vertices}
print(f"\nlaplacian of f: { {v: lap[v] for v in square.vertices} }")
assert lap == {"a": 2, "x": 0, "y": -2, "z": 0}
print("\nd(., a) is harmonic on the two 'sides' and breaks exactly at y.")
