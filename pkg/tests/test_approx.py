import math
import random

from malkit.approx import (five_thirds_count_bound, five_thirds_params, label_3half,
                           label_5thirds, label_trivial, three_half_count_bound,
                           three_half_params)
from malkit.dominating import dominating_set_pair, hitting_set_bound
from malkit.generators import random_connected
from malkit.graph import Graph, complete_graph, cycle_graph, metrics, path_graph, star_graph

from oracles import naive_connected


def ok(g, lab, age=None):
    return naive_connected(g.n, {e: set(ls) for e, ls in lab.items()}, max_age=age)


def caterpillar(spine, legs, seed):
    """Path of hubs, each with a random number of pendant leaves."""
    rng = random.Random(seed)
    edges = [(i, i + 1) for i in range(spine - 1)]
    n = spine
    for hub in range(spine):
        for _ in range(rng.randint(legs // 2, legs)):
            edges.append((hub, n))
            n += 1
    return Graph(n, edges)


def test_trivial_small():
    assert label_trivial(Graph(2, [(0, 1)])).labels(0, 1) == (1,)
    lab = label_trivial(star_graph(4))
    assert lab.total == 6 and lab.lifetime == 2 and ok(star_graph(4), lab)
    lab = label_trivial(path_graph(3))
    assert lab.labels(0, 1) == (1, 2) and lab.labels(1, 2) == (1, 2)


def test_trivial_lifetime_is_diameter():
    for seed in range(10):
        g = random_connected(25, 40, seed)
        lab = label_trivial(g)
        assert lab.lifetime == metrics(g).diameter and ok(g, lab)
        assert lab.total <= g.n * (g.n - 1)


def test_3half_small():
    for g in (star_graph(4), cycle_graph(6)):
        lab = label_3half(g)
        assert lab.lifetime <= math.ceil(3 * metrics(g).diameter / 2) and ok(g, lab)
    assert label_3half(Graph(1)).total == 0


def test_5thirds_small():
    lab = label_5thirds(path_graph(4))
    assert lab.lifetime <= 5 and ok(path_graph(4), lab)
    lab = label_5thirds(complete_graph(5))
    assert lab.lifetime <= 2 and ok(complete_graph(5), lab)
    assert label_5thirds(Graph(1)).total == 0


def test_random_n300_bounds():
    g = random_connected(300, 360, 17)
    n, d = g.n, metrics(g).diameter
    pair = dominating_set_pair(g, *three_half_params(g))
    assert len(pair.chosen) <= max(hitting_set_bound(n, pair.n2, n), pair.n2)
    lab = label_3half(g)
    assert lab.total <= three_half_count_bound(n, len(pair.chosen))
    assert lab.lifetime <= math.ceil(3 * d / 2)
    pair = dominating_set_pair(g, *five_thirds_params(g, d))
    lab = label_5thirds(g)
    assert lab.total <= five_thirds_count_bound(n, d, pair)
    assert lab.lifetime <= math.ceil(5 * d / 3)


def test_5thirds_condition_one_branch():
    hit = 0
    for seed in range(12):
        g = caterpillar(random.Random(seed).randint(5, 9), 40, seed)
        n, d = g.n, metrics(g).diameter
        pair = dominating_set_pair(g, *five_thirds_params(g, d))
        lab = label_5thirds(g)
        assert lab.lifetime <= math.ceil(5 * d / 3)
        assert lab.total <= five_thirds_count_bound(n, d, pair)
        assert ok(g, lab)
        hit += pair.satisfied == 1
    assert hit >= 3


def test_lifetime_ceilings_across_diameters():
    for length in range(2, 14):
        g = path_graph(length)
        d = length - 1
        assert label_3half(g).lifetime <= math.ceil(3 * d / 2)
        assert label_5thirds(g).lifetime <= math.ceil(5 * d / 3)
        assert ok(g, label_3half(g)) and ok(g, label_5thirds(g))
