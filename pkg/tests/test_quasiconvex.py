import random

import pytest

from hypercore import (
    Ball,
    HalfInt,
    QSet,
    QSetFamily,
    ball_members,
    covering_radius,
    distance_matrix,
    four_point_delta,
    greedy_hit_pack,
    helly_balls_check,
    helly_center,
    interval,
    interval_thinness,
    is_interval_like,
    measure_epsilon,
    neighborhood,
    project_toward,
    set_distance,
    thin_delta_bound,
)
from hypercore.generators import cycle_graph, gnp_connected, path_graph, random_tree


def test_measure_epsilon_examples():
    tree = random_tree(15, 3)
    dm = distance_matrix(tree)
    sub = interval(dm, 0, 9)  # a path in the tree: convex
    assert measure_epsilon(dm, sub) == 0
    dm4 = distance_matrix(cycle_graph(4))
    assert measure_epsilon(dm4, [0, 2]) == 1
    with pytest.raises(ValueError):
        measure_epsilon(dm4, [])


def test_intervals_are_thinness_quasiconvex():
    rng = random.Random(5)
    for g in (gnp_connected(16, 0.25, 2), cycle_graph(9)):
        dm = distance_matrix(g)
        nu = interval_thinness(dm)
        for _ in range(12):
            u, v = rng.randrange(g.n), rng.randrange(g.n)
            assert measure_epsilon(dm, interval(dm, u, v)) <= nu


def test_neighborhood():
    dm = distance_matrix(path_graph(5))
    assert neighborhood(dm, [2], 0) == [2]
    assert neighborhood(dm, [2], 1) == [1, 2, 3]
    dm6 = distance_matrix(cycle_graph(6))
    assert neighborhood(dm6, [0, 3], 1) == [0, 1, 2, 3, 4, 5]
    with pytest.raises(ValueError):
        neighborhood(dm, [2], -1)


def test_project_toward():
    g = path_graph(7)
    dm = distance_matrix(g)
    assert project_toward(dm, g, 6, [0, 1], 0) == 1
    assert project_toward(dm, g, 6, [0, 1], 2) == 3
    assert project_toward(dm, g, 3, [0, 3, 5], 4) == 3  # z inside Q
    assert project_toward(dm, g, 6, [0], 99) == 6  # walk caps at z


def test_covering_radius_formula():
    assert covering_radius(0, 2, HalfInt(1)) == 9  # max(2*2+5, 0+2+3)
    assert covering_radius(4, 0, HalfInt(0)) == 4
    assert covering_radius(0, 0, HalfInt.from_doubled(1)) == HalfInt.from_doubled(5)


def _tree_ball_family(dm, tree, hub, picks):
    # balls of a tree are subtrees; radius reaches the hub so they all meet it
    sets = [sorted(neighborhood(dm, [v], dm.dist(v, hub))) for v in picks]
    return QSetFamily.measure(dm, sets)


def test_helly_center_subtrees_of_tree():
    tree = random_tree(20, 11)
    dm = distance_matrix(tree)
    fam = _tree_ball_family(dm, tree, hub=4, picks=[0, 7, 13, 19])
    assert fam.family_epsilon == 0
    ball = helly_center(dm, tree, fam, 0, HalfInt(0))
    assert ball.radius == 0
    for s in fam.sets:
        assert set_distance(dm, [ball.center], s.members) == 0


def test_helly_center_cycle_intervals():
    g = cycle_graph(6)
    dm = distance_matrix(g)
    delta = thin_delta_bound(four_point_delta(dm).delta)
    fam = QSetFamily.measure(
        dm, [interval(dm, 0, x) for x in (2, 3, 4)]  # all contain vertex 0
    )
    ball = helly_center(dm, g, fam, 0, delta)
    members = ball_members(dm, ball)
    assert ball.radius <= covering_radius(0, fam.family_epsilon, delta).floor()
    for s in fam.sets:
        assert set_distance(dm, members, s.members) == 0


def test_helly_center_single_set():
    g = path_graph(6)
    dm = distance_matrix(g)
    fam = QSetFamily.measure(dm, [[4, 5]])
    ball = helly_center(dm, g, fam, 0, HalfInt(0))
    assert set_distance(dm, [ball.center], fam.sets[0].members) == 0


def test_helly_center_rejects_far_family():
    g = path_graph(9)
    dm = distance_matrix(g)
    fam = QSetFamily.measure(dm, [[0], [8]], names=["left", "right"])
    with pytest.raises(ValueError, match="left.*right"):
        helly_center(dm, g, fam, 1, HalfInt(0))


def test_greedy_hit_pack_far_singletons():
    tree = path_graph(15)
    dm = distance_matrix(tree)
    fam = QSetFamily.measure(dm, [[0], [5], [10], [14]])
    hp = greedy_hit_pack(dm, tree, fam, 1, HalfInt(0))
    assert len(hp.hitting_set) == len(hp.packing) == 4
    assert hp.pack_gap == 1


def test_greedy_hit_pack_intersecting_collapses():
    g = cycle_graph(6)
    dm = distance_matrix(g)
    fam = QSetFamily.measure(dm, [interval(dm, 0, 3), interval(dm, 1, 4), interval(dm, 2, 5)])
    hp = greedy_hit_pack(dm, g, fam, 0, thin_delta_bound(four_point_delta(dm).delta))
    assert len(hp.hitting_set) == len(hp.packing) == 1


def test_greedy_hit_pack_random_certificates():
    rng = random.Random(9)
    g = gnp_connected(30, 0.12, 4)
    dm = distance_matrix(g)
    delta = thin_delta_bound(four_point_delta(dm).delta)
    sets = []
    for _ in range(10):
        a, b = rng.randrange(30), rng.randrange(30)
        sets.append(interval(dm, a, b))
    fam = QSetFamily.measure(dm, sets)
    for r in (0, 1, 2):
        hp = greedy_hit_pack(dm, g, fam, r, delta)
        assert len(hp.hitting_set) == len(hp.packing)
        assert hp.hit_radius == covering_radius(r, fam.family_epsilon, delta).floor()
        for s in fam.sets:
            assert min(
                set_distance(dm, [t], s.members) for t in hp.hitting_set
            ) <= hp.hit_radius
        for i, a in enumerate(hp.packing):
            for b in hp.packing[i + 1 :]:
                assert set_distance(dm, fam.sets[a].members, fam.sets[b].members) > 2 * r


def test_helly_balls_check_tree_and_cycle():
    tree = random_tree(18, 6)
    dm = distance_matrix(tree)
    balls = [Ball(v, dm.dist(v, 3)) for v in (0, 8, 12, 17)]  # all meet vertex 3
    assert helly_balls_check(dm, balls, HalfInt(0)) is not None
    dm4 = distance_matrix(cycle_graph(4))
    got = helly_balls_check(dm4, [Ball(0, 1), Ball(1, 1), Ball(2, 1)], HalfInt(0))
    assert got == 1  # vertex 1 lies in all three already


def test_helly_balls_check_random_with_thin_inflation():
    rng = random.Random(12)
    checked = 0
    for seed in range(8):
        g = gnp_connected(18, 0.2, seed + 40)
        dm = distance_matrix(g)
        delta = thin_delta_bound(four_point_delta(dm).delta)
        balls = [Ball(rng.randrange(18), rng.randrange(0, 3)) for _ in range(5)]
        ok = all(
            dm.dist(a.center, b.center) <= a.radius + b.radius
            for i, a in enumerate(balls)
            for b in balls[i + 1 :]
        )
        if not ok:
            continue
        checked += 1
        assert helly_balls_check(dm, balls, delta) is not None
    assert checked >= 2


def test_helly_balls_check_rejects_disjoint():
    dm = distance_matrix(path_graph(8))
    with pytest.raises(ValueError, match="do not intersect"):
        helly_balls_check(dm, [Ball(0, 1), Ball(7, 1)], HalfInt(0))


def test_is_interval_like():
    dm = distance_matrix(cycle_graph(6))
    assert is_interval_like(dm, interval(dm, 0, 3))
    assert is_interval_like(dm, [2])
    assert not is_interval_like(dm, [0, 3])  # interval of (0,3) is all of C_6


def test_qset_measures_epsilon_itself():
    dm = distance_matrix(cycle_graph(4))
    q = QSet.measure(dm, [2, 0])
    assert q.members == (0, 2)
    assert q.epsilon == 1
