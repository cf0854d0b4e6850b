"""
Norm lattices: midpoint convexity and the nearest-neighbor property
===================================================================

Integer points in a window, adjacency whenever 0 < ||x - y|| <= r, edge
weight ||x - y||.  Interior vertices are the ones whose whole ball fits
inside the window, which is where weighted neighborhood means are
trustworthy.  On these lattices:

* ||. - a|| is midpoint convex at every window vertex (lem-dist-pt);
* midpoint-convex functions are weighted-subharmonic at interior
  vertices (thm4-cvx-sub);
* if d(., F) is midpoint convex everywhere then F is a convex set
  (prop-dist-cvx), and a convex F with the nearest-neighbor property
  pushes midpoint convexity of d(., F) back out (prop-nn).
"""

import random

from graphconvex import (
    LatticeSpec,
    build_lattice,
    has_nearest_neighbor_property,
    is_midpoint_convex_at,
    is_subharmonic_at,
    max_affine_samples,
    sweep_subsets_dist_convex,
    sweep_subsets_nn,
    verify_dist_to_point_midpoint_convex,
)

# -- three norms, three neighborhood shapes --------------------------------------

for norm, radius in (("l1", 1), ("linf", 1), ("l2", 1.5)):
    lat = build_lattice(LatticeSpec(2, norm, radius, ((-3, 3), (-3, 3))))
    deg = lat.graph.degree((0, 0))
    print(f"{lat!r}: {len(lat.window)} vertices, center degree {deg}, "
          f"{len(lat.interior)} interior")

# l1 radius 1 gives the 4-neighbor grid, linf the 8-neighbor king moves,
# and l2 radius 1.5 king moves with diagonal edges weighted sqrt(2).

# -- distance to a point is midpoint convex ---------------------------------------

lat = build_lattice(LatticeSpec(2, "l2", 1.5, ((-3, 3), (-3, 3))))
report = verify_dist_to_point_midpoint_convex(lat, count=10, seed=4)
print(f"\n||. - a|| midpoint convex: {report.verdict} "
      f"({report.checked} vertex checks over 10 base points)")
assert report.verdict == "verified"

# -- midpoint convex implies weighted subharmonic at interior vertices -------------

rng = random.Random("lattice-demo")
fails = 0
for _, fun in max_affine_samples(lat.spec, rng, count=25):
    for x in sorted(lat.interior):
        assert is_midpoint_convex_at(lat, fun, x)
        if not is_subharmonic_at(lat.graph, fun, x, weighted=True):
            fails += 1
print(f"25 maxima of affine forms, every interior vertex: {fails} mean violations")
assert fails == 0

# -- the nearest-neighbor property ---------------------------------------------------

line = build_lattice(LatticeSpec(1, "l1", 1, ((-3, 3),)))
gap = {(-1,), (1,)}
verdict = has_nearest_neighbor_property(line, gap)
w = verdict.witness
print(f"\nF = {{-1, +1}} on the line: nearest-neighbor property? {bool(verdict)}")
print(f"  witness: z = {w.z} sits between {w.y1} and {w.y2} with no member close enough")
assert not verdict and w.z == (0,)

# the same two-point set, one dimension up: the l1 norm forgives the
# diagonal pair (coordinates cancel in ||(y1 - z) + (y2 - z)||), l2 does not
plane1 = build_lattice(LatticeSpec(2, "l1", 1, ((-2, 2), (-2, 2))))
plane2 = build_lattice(LatticeSpec(2, "l2", 1.5, ((-2, 2), (-2, 2))))
diagonal = {(0, 0), (1, 1)}
print(f"diagonal pair, l1:  {bool(has_nearest_neighbor_property(plane1, diagonal))}")
print(f"diagonal pair, l2:  {bool(has_nearest_neighbor_property(plane2, diagonal))}")

# -- subset sweeps on a small window ---------------------------------------------------

small = build_lattice(LatticeSpec(1, "l1", 1, ((-2, 2),)))
for name, sweep in (
    ("d(., F) convex => F convex", sweep_subsets_dist_convex(small)),
    ("convex + NN => d(., F) midpoint convex", sweep_subsets_nn(small)),
):
    print(f"{name}: {sweep.verdict} over all nonempty F "
          f"({sweep.hypothesis_fired} firings)")
    assert sweep.verdict == "verified"
