"""Greedy hitting sets and dominating set-pairs.

A dominating set-pair (S1, S2) guarantees that either every vertex is within
floor(delta*D) of S1, or every vertex is within ceil((1-delta)*D) of S2.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DisconnectedError
from .graph import INF, Graph, bfs_spf, distances


def hitting_set_bound(n: int, ell: int, num_sets: int) -> int:
    """ceil((n/ell) * (ln N + 1)), the size guarantee of greedy_hitting_set."""
    if num_sets == 0:
        return 0
    return math.ceil(n / ell * (math.log(num_sets) + 1))


def greedy_hitting_set(n: int, sets: Sequence[Sequence[int]]) -> set[int]:
    """Repeatedly take the element lying in the most not-yet-hit sets.

    Ties go to the lowest element. All sets must share one size ell >= 1.
    """
    if not sets:
        return set()
    ell = len(sets[0])
    members: list[list[int]] = [[] for _ in range(n)]
    for idx, s in enumerate(sets):
        if len(s) != ell or len(set(s)) != ell or ell < 1:
            raise ValueError(f"set {idx} has {len(set(s))} distinct elements, expected {ell}")
        for x in s:
            if not 0 <= x < n:
                raise ValueError(f"element {x} outside the universe [0, {n})")
            members[x].append(idx)
    count = [len(m) for m in members]
    heap = [(-c, x) for x, c in enumerate(count) if c]
    heapq.heapify(heap)
    hit = [False] * len(sets)
    remaining = len(sets)
    chosen: set[int] = set()
    while remaining:
        negc, x = heapq.heappop(heap)
        if -negc != count[x]:
            if count[x]:
                heapq.heappush(heap, (-count[x], x))
            continue
        chosen.add(x)
        for idx in members[x]:
            if not hit[idx]:
                hit[idx] = True
                remaining -= 1
                for y in sets[idx]:
                    count[y] -= 1
    return chosen


@dataclass(frozen=True)
class DominatingSetPair:
    s1: frozenset[int]
    s2: frozenset[int]
    h1: int
    h2: int
    satisfied: int
    delta: Fraction
    n2: int

    @property
    def chosen(self) -> frozenset[int]:
        """The set whose covering condition holds."""
        return self.s1 if self.satisfied == 1 else self.s2

    @property
    def radius(self) -> int:
        return self.h1 if self.satisfied == 1 else self.h2


def nearest_vertices(dist: Sequence[float], k: int) -> list[int]:
    """The k vertices closest to the BFS source, ties by vertex index."""
    order = sorted((d, v) for v, d in enumerate(dist) if d != INF)
    return [v for _, v in order[:k]]


def dominating_set_pair(g: Graph, delta, n2: int) -> DominatingSetPair:
    delta = Fraction(delta)
    n = g.n
    if not 0 < delta < 1:
        raise ValueError(f"delta must lie strictly between 0 and 1, got {delta}")
    if not 1 <= n2 <= n:
        raise ValueError(f"n2 must lie in [1, {n}], got {n2}")
    dist = [distances(g, v) for v in range(n)]
    if any(INF in row for row in dist):
        raise DisconnectedError("dominating set-pairs need a connected graph")
    diam = int(max(max(row) for row in dist))
    h1 = math.floor(delta * diam)
    h2 = math.ceil((1 - delta) * diam)

    near = [nearest_vertices(dist[v], n2) for v in range(n)]
    s1 = greedy_hitting_set(n, near)
    to_s1 = bfs_spf(g, s1).dist
    far = max(to_s1)
    w = to_s1.index(far)
    s2 = near[w]
    if far <= h1:
        satisfied = 1
    else:
        ball = {v for v in range(n) if dist[w][v] <= h1}
        if ball & s1:
            raise AssertionError("vertices near the farthest vertex must miss S1")
        to_s2 = bfs_spf(g, s2).dist
        if max(to_s2) > h2:
            raise AssertionError("neither dominating condition holds")
        satisfied = 2
    return DominatingSetPair(frozenset(s1), frozenset(s2), h1, h2, satisfied, delta, n2)
