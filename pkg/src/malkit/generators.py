"""Seeded random instances."""
from __future__ import annotations

import random

from .graph import Graph
from .reductions import MinRepInstance, SetCoverInstance


def random_connected(n: int, m: int, seed: int) -> Graph:
    """Random Prim-order spanning tree plus m-(n-1) extra edges chosen uniformly.

    The tree grows by picking a uniform (tree vertex, outside vertex) pair at
    each step, which amounts to a shuffled vertex order where each newcomer
    attaches to a uniform earlier vertex.
    """
    if n < 1:
        raise ValueError("n must be positive")
    max_m = n * (n - 1) // 2
    if not n - 1 <= m <= max_m:
        raise ValueError(f"m must lie in [{n - 1}, {max_m}] for n = {n}")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for k in range(1, n):
        u, v = order[rng.randrange(k)], order[k]
        edges.add((min(u, v), max(u, v)))
    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    edges.update(rng.sample(missing, m - (n - 1)))
    return Graph(n, edges)


def random_set_cover(universe_size: int, num_sets: int, seed: int,
                     density: float = 0.4) -> SetCoverInstance:
    """Each element joins each set with probability density; strays go to a random set."""
    rng = random.Random(seed)
    sets = [set() for _ in range(num_sets)]
    for i in range(universe_size):
        for s in sets:
            if rng.random() < density:
                s.add(i)
        if not any(i in s for s in sets):
            sets[rng.randrange(num_sets)].add(i)
    for s in sets:
        if not s:
            s.add(rng.randrange(universe_size))
    return SetCoverInstance.of(universe_size, sets)


def random_minrep_yes(r: int, sigma: int, seed: int,
                      density: float = 0.5, noise: float = 0.2) -> tuple[MinRepInstance, list[int]]:
    """A MIN-REP instance with a planted REP-cover, returned alongside it."""
    rng = random.Random(seed)
    groups_a = [list(range(i * sigma, (i + 1) * sigma)) for i in range(r)]
    off = r * sigma
    groups_b = [list(range(off + j * sigma, off + (j + 1) * sigma)) for j in range(r)]
    reps_a = [rng.choice(g) for g in groups_a]
    reps_b = [rng.choice(g) for g in groups_b]
    edges = set()
    for i in range(r):
        for j in range(r):
            if rng.random() < density:
                edges.add((reps_a[i], reps_b[j]))
                for a in groups_a[i]:
                    for b in groups_b[j]:
                        if rng.random() < noise:
                            edges.add((a, b))
    if not edges:
        edges.add((reps_a[0], reps_b[0]))
    return MinRepInstance.of(groups_a, groups_b, sorted(edges)), reps_a + reps_b
