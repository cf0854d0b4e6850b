import math
import random

import pytest

from graphconvex import (
    Graph,
    UnknownVertexError,
    betweenness_closure,
    brute_force_convex_hull,
    convex_hull,
    cycle,
    distance_function,
    distance_to_set,
    grid,
    indicator,
    int_path,
    is_between,
    is_convex_at,
    is_convex_set,
    path,
    random_connected_graph,
    set_distance_function,
)

INF = math.inf


# ----------------------------------------------------------------------
# betweenness
# ----------------------------------------------------------------------


def test_is_between_on_path():
    m = path(5).metric()
    assert is_between(m, 0, 2, 4)
    assert is_between(m, 0, 0, 4)  # endpoints are between themselves
    assert is_between(m, 4, 2, 0)
    assert not is_between(m, 0, 4, 2)


def test_is_between_on_lettered_square(lettered_square):
    m = lettered_square.metric()
    # both x and y (and a and z) lie between the antipodal pair... of their sides
    assert is_between(m, "x", "a", "z")
    assert is_between(m, "x", "y", "z")
    assert not is_between(m, "a", "y", "x")


def test_between_ignores_unreachable_pairs():
    g = Graph([(0, 1)], vertices=[2])
    m = g.metric()
    assert not is_between(m, 0, 1, 2)
    assert not is_between(m, 0, 2, 1)


# ----------------------------------------------------------------------
# closure and hull
# ----------------------------------------------------------------------


def test_one_step_closure_on_lettered_square(lettered_square):
    m = lettered_square.metric()
    got = betweenness_closure(m, {"x", "z"})
    assert got == {"a", "x", "y", "z"}


def test_closure_trivia(lettered_square):
    m = lettered_square.metric()
    assert betweenness_closure(m, set()) == frozenset()
    assert betweenness_closure(m, {"a"}) == {"a"}
    with pytest.raises(UnknownVertexError):
        betweenness_closure(m, {"q"})


def test_hull_on_lettered_square(lettered_square):
    m = lettered_square.metric()
    assert convex_hull(m, {"x", "z"}) == frozenset(m.vertices)
    assert convex_hull(m, set()) == frozenset()
    assert convex_hull(m, {"y"}) == {"y"}


def test_hull_on_path_is_the_interval():
    m = path(7).metric()
    assert convex_hull(m, {1, 5}) == {1, 2, 3, 4, 5}
    assert convex_hull(m, {0, 2, 3}) == {0, 1, 2, 3}


def test_hull_on_grid_is_the_bounding_box():
    m = grid(5, 5).metric()
    hull = convex_hull(m, {(0, 0), (2, 2)})
    assert hull == {(i, j) for i in range(3) for j in range(3)}
    assert len(hull) == 9


def test_hull_needs_multiple_rounds():
    # on a path, c1({0, 4}) already gives the whole interval, so force
    # stepwise growth with two far apart points on a larger cycle
    m = cycle(9).metric()
    a = betweenness_closure(m, {0, 3})
    assert a == {0, 1, 2, 3}
    assert convex_hull(m, {0, 3}) == {0, 1, 2, 3}


def test_is_convex_set(lettered_square):
    m = lettered_square.metric()
    assert not is_convex_set(m, {"x", "y", "z"})
    assert is_convex_set(m, set(m.vertices))
    assert is_convex_set(m, set())
    assert is_convex_set(m, {"a", "x"})
    pm = path(6).metric()
    assert is_convex_set(pm, {2, 3, 4})
    assert not is_convex_set(pm, {2, 4})


# ----------------------------------------------------------------------
# convex functions
# ----------------------------------------------------------------------


def test_distance_function_fails_at_opposite_vertex(lettered_square):
    m = lettered_square.metric()
    f = distance_function(m, "a")
    assert f == {"a": 0, "x": 1, "y": 2, "z": 1}
    verdict = is_convex_at(m, f, "y")
    assert not verdict
    assert verdict.vertex == "y"
    w = verdict.witness
    assert {w.x, w.y} == {"x", "z"}
    assert w.lhs == 2
    assert w.rhs == 1  # exactly 1, computed in integer arithmetic
    assert isinstance(w.rhs, int)
    # ... and is fine everywhere else
    for z in ("a", "x", "z"):
        assert is_convex_at(m, f, z)


def test_convexity_on_path_interval_functions():
    m = int_path(-5, 5).metric()
    f = {v: abs(v) for v in m.vertices}
    assert all(is_convex_at(m, f, z) for z in m.vertices)
    g = {v: -abs(v) for v in m.vertices}
    # chords crossing the kink dip below -|v|, so every interior vertex fails
    bad = [z for z in m.vertices if not is_convex_at(m, g, z)]
    assert bad == list(range(-4, 5))


def test_convexity_skips_missing_values():
    m = path(5).metric()
    f = {0: 0, 4: 0, 2: 5}  # no values at 1 and 3
    v = is_convex_at(m, f, 2)
    assert not v and v.witness.lhs == 5
    assert is_convex_at(m, {0: 0, 4: 0}, 2)  # z itself unset: vacuous
    partial = {0: 0, 2: 5}  # pair (0, 4) now lacks an endpoint value
    assert is_convex_at(m, partial, 2) is not None


def test_convexity_with_infinite_values():
    m = path(4).metric()
    chi = indicator({0, 1}, m.vertices)
    assert chi == {0: 0, 1: 0, 2: INF, 3: INF}
    assert all(is_convex_at(m, chi, z) for z in m.vertices)
    # an infinite gap inside finite values is not convex
    f = {0: 0, 1: INF, 2: 0, 3: 0}
    assert not is_convex_at(m, f, 1)


def test_convexity_unknown_vertex(lettered_square):
    m = lettered_square.metric()
    with pytest.raises(UnknownVertexError):
        is_convex_at(m, {"a": 0}, "nope")


def test_weighted_metric_convexity():
    g = Graph([(0, 1, 2.0), (1, 2, 1.0)])
    m = g.metric()
    f = {0: 0.0, 1: 2.0, 2: 3.0}  # f = d(., 0): convex everywhere
    assert all(is_convex_at(m, f, z) for z in m.vertices)
    f[1] = 2.5  # now above the chord between 0 and 2
    assert not is_convex_at(m, f, 1)


# ----------------------------------------------------------------------
# indicator functions tie sets to functions
# ----------------------------------------------------------------------


def test_indicator_validates_members():
    with pytest.raises(UnknownVertexError):
        indicator({9}, cycle(3).vertices)


def test_indicator_convex_iff_set_convex_seeded_sweep():
    """chi_A is convex at every vertex exactly when A is a convex set."""
    rng = random.Random("indicator-sweep")
    for trial in range(40):
        n = rng.randint(2, 8)
        g = random_connected_graph(n, rng.uniform(0.3, 0.9), rng)
        m = g.metric()
        size = rng.randint(1, n)
        members = set(rng.sample(list(m.vertices), size))
        chi = indicator(members, m.vertices)
        fn_convex = all(is_convex_at(m, chi, z) for z in m.vertices)
        assert fn_convex == is_convex_set(m, members), (g.adjacency(), members)


# ----------------------------------------------------------------------
# distance-to-set
# ----------------------------------------------------------------------


def test_distance_to_set():
    m = path(5).metric()
    assert distance_to_set(m, 0, {3, 4}) == 3
    assert distance_to_set(m, 3, {3, 4}) == 0
    assert distance_to_set(m, 2, set()) == INF
    f = set_distance_function(m, {0, 4})
    assert f == {0: 0, 1: 1, 2: 2, 3: 1, 4: 0}


def test_distance_to_set_unreachable_component():
    g = Graph([(0, 1), (2, 3)])
    m = g.metric()
    assert distance_to_set(m, 0, {2}) == INF


# ----------------------------------------------------------------------
# hull oracle (independent route)
# ----------------------------------------------------------------------


def test_brute_force_oracle_matches_hull_on_all_square_subsets(lettered_square):
    m = lettered_square.metric()
    verts = list(m.vertices)
    for mask in range(1 << len(verts)):
        subset = {v for i, v in enumerate(verts) if mask >> i & 1}
        assert brute_force_convex_hull(m, subset) == convex_hull(m, subset)


def test_brute_force_oracle_random_graphs():
    rng = random.Random("hull-oracle")
    for trial in range(10):
        n = rng.randint(2, 8)
        g = random_connected_graph(n, rng.uniform(0.25, 0.8), rng)
        m = g.metric()
        verts = list(m.vertices)
        for _ in range(25):
            subset = {v for v in verts if rng.random() < 0.4}
            assert brute_force_convex_hull(m, subset) == convex_hull(m, subset)


def test_hull_closure_properties_quick():
    rng = random.Random("hull-props")
    g = random_connected_graph(7, 0.4, rng)
    m = g.metric()
    verts = list(m.vertices)
    for _ in range(20):
        a = {v for v in verts if rng.random() < 0.3}
        b = a | {v for v in verts if rng.random() < 0.3}
        ha, hb = convex_hull(m, a), convex_hull(m, b)
        assert a <= ha  # extensive
        assert ha <= hb  # monotone
        assert convex_hull(m, ha) == ha  # idempotent
        assert is_convex_set(m, ha & hb)  # intersection of convex is convex
