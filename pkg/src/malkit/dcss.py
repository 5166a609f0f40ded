"""Moving between MAL labelings and diameter-bounded spanning subgraphs.

A spanning subgraph of diameter <= b becomes a labeling by giving each of its
edges every label 1..b; a feasible labeling becomes a subgraph by keeping the
labeled edges. Any DCSS solver therefore doubles as a MAL solver at a cost
factor of b.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import DisconnectedError, InfeasibleError
from .exact import ExactBudget, exact_dcss
from .graph import INF, Graph, bfs_spt, diameter, distances, is_connected, metrics
from .temporal import Labeling, TemporalGraph, is_temporally_connected

# |E| <= n*(ceil(sqrt n)-1) + n*(n-1)/ceil(sqrt n) + n < 3 n^1.5
PLUS2_EDGE_CONSTANT = 3


@dataclass(frozen=True)
class DcssSolver:
    name: str
    solve: Callable[[Graph, int], Graph]

    def __call__(self, g: Graph, d: int) -> Graph:
        h = self.solve(g, d)
        check_dcss(g, h, d)
        return h


def check_dcss(g: Graph, h: Graph, d: int) -> None:
    """Raise InfeasibleError unless h is a spanning subgraph of g with diameter <= d."""
    if not h.is_subgraph_of(g):
        raise InfeasibleError("solver output is not a spanning subgraph of the input")
    dh = diameter(h)
    if dh > d:
        raise InfeasibleError(f"solver output has diameter {dh}, above the bound {d}")


def dcss_to_mal(h: Graph, b: int) -> Labeling:
    dh = diameter(h)
    if dh > b:
        raise InfeasibleError(f"subgraph diameter {dh} exceeds b = {b}")
    lab = Labeling(directed=h.directed)
    labels = range(1, b + 1)
    for u, v in h.edges:
        lab.add(u, v, *labels)
    return lab


def mal_to_dcss(tg: TemporalGraph) -> Graph:
    verdict = is_temporally_connected(tg)
    if not verdict:
        raise InfeasibleError(f"labeling is not temporally connected: {verdict.describe()}")
    return tg.graph.subgraph(tg.labeling.edges())


def solve_mal_via_dcss(g: Graph, a: int, solver: DcssSolver) -> Labeling:
    d = metrics(g).diameter
    if a < d:
        raise InfeasibleError(f"age {a} is below the diameter {d}")
    return dcss_to_mal(solver(g, a), a)


def center_bfs_tree(g: Graph) -> Graph:
    m = metrics(g)
    return g.subgraph(bfs_spt(g, m.center).tree_edges())


def plus2_spanner(g: Graph) -> Graph:
    """Subgraph with d_H(u, v) <= d_G(u, v) + 2 and fewer than 3 n^1.5 edges.

    Clusters are grown greedily around vertices that still have at least
    ceil(sqrt n) unclustered neighbors; then every edge touching an unclustered
    vertex is kept and a BFS tree is grown from each cluster center.
    """
    if g.directed:
        raise ValueError("plus2_spanner handles undirected graphs only")
    if not is_connected(g):
        raise DisconnectedError("plus2_spanner needs a connected graph")
    n = g.n
    tau = math.isqrt(n - 1) + 1 if n > 1 else 1  # ceil(sqrt(n))
    clustered = [False] * n
    centers = []
    kept: set[tuple[int, int]] = set()
    for v in range(n):
        fresh = [u for u in g.adj[v] if not clustered[u]]
        if len(fresh) < tau:
            continue
        centers.append(v)
        # an unclustered center becomes a member of its own cluster
        clustered[v] = True
        for u in fresh:
            clustered[u] = True
            kept.add(g.key(u, v))
    # a single pass suffices: clustering only ever shrinks "fresh" neighborhoods
    for u, v in g.edges:
        if not clustered[u] or not clustered[v]:
            kept.add((u, v))
    for c in centers:
        for child, parent in bfs_spt(g, c).tree_edges():
            kept.add(g.key(child, parent))
    return g.subgraph(kept)


def _tree_solve(g: Graph, d: int) -> Graph:
    return center_bfs_tree(g)


def _plus2_solve(g: Graph, d: int) -> Graph:
    return plus2_spanner(g)


def _exact_solve(g: Graph, d: int) -> Graph:
    return exact_dcss(g, d, ExactBudget())


SOLVERS = {
    "tree": DcssSolver("tree", _tree_solve),
    "plus2": DcssSolver("plus2", _plus2_solve),
    "exact": DcssSolver("exact", _exact_solve),
}


def additive_stretch(g: Graph, h: Graph) -> float:
    """max over pairs of d_H(u, v) - d_G(u, v)."""
    worst = 0
    for s in range(g.n):
        dg, dh = distances(g, s), distances(h, s)
        for v in range(g.n):
            if dh[v] == INF:
                return INF
            worst = max(worst, dh[v] - dg[v])
    return worst
