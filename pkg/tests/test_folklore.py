import random

import pytest

from malkit.errors import InfeasibleError
from malkit.exact import exact_mal
from malkit.folklore import (EXACT, KNOWN_GAP, label_2r, label_2r_plus_1,
                             label_optimal_large_age)
from malkit.generators import random_connected
from malkit.graph import Graph, bfs_spt, cycle_graph, metrics, path_graph, star_graph

from oracles import naive_connected


def ok(g, lab, age=None):
    return naive_connected(g.n, {e: set(ls) for e, ls in lab.items()}, max_age=age)


def test_2r_star_every_spoke_1_2():
    lab = label_2r(star_graph(4))
    assert all(ls == (1, 2) for _, ls in lab.items())
    assert lab.total == 6 and lab.lifetime == 2


def test_2r_k2_and_p5():
    assert label_2r(Graph(2, [(0, 1)])).labels(0, 1) == (1, 2)
    g = path_graph(5)
    lab = label_2r(g)
    assert lab.total == 8 and lab.lifetime == 4 and ok(g, lab)


def test_2r1_star_and_k2():
    lab = label_2r_plus_1(star_graph(4))
    assert lab.total == 5 and lab.lifetime == 3 and ok(star_graph(4), lab, 3)
    # the special edge is the center's lowest neighbor
    assert lab.labels(0, 1) == (2,)
    assert label_2r_plus_1(Graph(2, [(0, 1)])).total == 1
    assert label_2r_plus_1(Graph(1)).total == 0


def test_random_64():
    for seed in range(5):
        g = random_connected(64, 100, seed)
        lab = label_2r_plus_1(g)
        assert lab.total == 2 * 64 - 3 and ok(g, lab)


def test_only_tree_edges_labeled():
    rng = random.Random(1)
    for seed in range(10):
        n = rng.randint(3, 30)
        g = random_connected(n, min(n * (n - 1) // 2, 2 * n), seed)
        tree = {g.key(c, p) for c, p in bfs_spt(g, metrics(g).center).tree_edges()}
        for fn in (label_2r, label_2r_plus_1):
            assert set(fn(g).edges()) <= tree


def test_large_age_p4_optimal():
    res = label_optimal_large_age(path_graph(4), 8)
    assert res.labeling.total == 5 and res.flag == EXACT and res.gap == 0


def test_large_age_c4_reports_gap():
    res = label_optimal_large_age(cycle_graph(4), 6)
    assert res.labeling.total == 5 and res.flag == KNOWN_GAP and res.gap == 1
    assert exact_mal(cycle_graph(4), 6).total == res.labeling.total - res.gap


def test_large_age_k2_and_precondition():
    assert label_optimal_large_age(Graph(2, [(0, 1)]), 4).labeling.total == 1
    with pytest.raises(InfeasibleError):
        label_optimal_large_age(path_graph(4), 7)
