"""Approximate MAL labelings whose lifetime stays close to the diameter.

``label_trivial`` fits in lifetime D; ``label_3half`` in ceil(3D/2);
``label_5thirds`` in ceil(5D/3). The last two route everything through a
small dominating vertex set.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .dominating import DominatingSetPair, dominating_set_pair
from .graph import Graph, bfs_spf, bfs_spt, metrics
from .temporal import Labeling


def _clamp(x: int, n: int) -> int:
    return min(max(x, 1), n)


def three_half_params(g: Graph) -> tuple[Fraction, int]:
    n = g.n
    return Fraction(1, 2), _clamp(math.ceil(math.sqrt(n * math.log(n))), n)


def five_thirds_params(g: Graph, diam: int | None = None) -> tuple[Fraction, int]:
    n = g.n
    if diam is None:
        diam = metrics(g).diameter
    return Fraction(1, 3), _clamp(math.ceil((diam * n * math.log(n) ** 2) ** (1 / 3)), n)


def three_half_count_bound(n: int, roots: int) -> int:
    return (roots + 1) * (n - 1)


def five_thirds_count_bound(n: int, diam: int, pair: DominatingSetPair) -> int:
    if pair.satisfied == 2:
        return three_half_count_bound(n, len(pair.s2))
    k = len(pair.s1)
    return 2 * (n - 1) + diam * k * (k - 1)


def label_trivial(g: Graph) -> Labeling:
    """Each source gets its own BFS tree labeled by depth."""
    lab = Labeling()
    for s in range(g.n):
        spt = bfs_spt(g, s)
        for child, parent in spt.tree_edges():
            lab.add(child, parent, int(spt.dist[child]))
    return lab


def label_through_hubs(g: Graph, hubs: Iterable[int], diam: int) -> Labeling:
    """Everyone reaches every hub by time diam, then hubs fan out after diam."""
    hubs = sorted(hubs)
    lab = Labeling()
    for h in hubs:
        spt = bfs_spt(g, h)
        for child, parent in spt.tree_edges():
            lab.add(child, parent, diam - int(spt.dist[child]) + 1)
    spf = bfs_spf(g, hubs)
    for child, parent in spf.tree_edges():
        lab.add(child, parent, diam + int(spf.dist[child]))
    return lab


def label_3half(g: Graph) -> Labeling:
    if g.n == 1:
        return Labeling()
    diam = metrics(g).diameter
    pair = dominating_set_pair(g, *three_half_params(g))
    return label_through_hubs(g, pair.chosen, diam)


def label_5thirds(g: Graph) -> Labeling:
    if g.n == 1:
        return Labeling()
    diam = metrics(g).diameter
    pair = dominating_set_pair(g, *five_thirds_params(g, diam))
    if pair.satisfied == 2:
        return label_through_hubs(g, pair.s2, diam)

    base = diam // 3
    lab = Labeling()
    # climb to S1 on labels 1..base, descend from S1 on base+diam+1 .. 2*base+diam
    spf = bfs_spf(g, pair.s1)
    for child, parent in spf.tree_edges():
        q = int(spf.dist[child])
        lab.add(child, parent, base - q + 1, base + diam + q)
    # every pair inside S1 talks both ways on base+1 .. base+diam
    hubs = sorted(pair.s1)
    for i, s in enumerate(hubs):
        spt = bfs_spt(g, s)
        for t in hubs[i + 1:]:
            path = [t]
            while path[-1] != s:
                path.append(spt.parent[path[-1]])
            path.reverse()
            k = len(path) - 1
            for j in range(1, k + 1):
                lab.add(path[j - 1], path[j], base + j, base + k - j + 1)
    return lab
