"""Two-labels-per-tree-edge constructions around a center vertex.

Every vertex climbs to the center on the early labels and descends from it on
the late ones, so the center is the meeting point of every temporal path.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import InfeasibleError
from .graph import Graph, bfs_spt, has_c4, metrics
from .temporal import Labeling

EXACT = "exact"
KNOWN_GAP = "exact-minus-known-gap"


class LargeAgeResult(NamedTuple):
    labeling: Labeling
    flag: str
    gap: int


def label_tree(tree_edges: Iterable[tuple[int, int, int]], radius: int,
               directed: bool = False, special: tuple[int, int] | None = None) -> Labeling:
    """Label (child, parent, depth) triples of a tree rooted at its center.

    Without ``special`` each edge gets {radius-depth+1, radius+depth}. With a
    root edge ``special`` = (child, root), that edge gets only radius+1 and the
    descending label of every other edge shifts up by one.
    """
    lab = Labeling(directed=directed)
    shift = 1 if special is not None else 0
    for child, parent, depth in tree_edges:
        if special is not None and (child, parent) == special:
            lab.add(child, parent, radius + 1)
        else:
            lab.add(child, parent, radius - depth + 1, radius + depth + shift)
    return lab


def _center_tree(g: Graph):
    m = metrics(g)
    spt = bfs_spt(g, m.center)
    triples = [(c, p, int(spt.dist[c])) for c, p in spt.tree_edges()]
    return m, spt, triples


def label_2r(g: Graph) -> Labeling:
    """2n-2 labels, lifetime at most 2R."""
    m, _, triples = _center_tree(g)
    return label_tree(triples, m.radius)


def label_2r_plus_1(g: Graph) -> Labeling:
    """2n-3 labels, lifetime at most 2R+1."""
    m, _, triples = _center_tree(g)
    if g.n == 1:
        return Labeling()
    special = (g.adj[m.center][0], m.center)
    return label_tree(triples, m.radius, special=special)


def label_optimal_large_age(g: Graph, a: int) -> LargeAgeResult:
    """Optimal when g has no 4-cycle; otherwise one label above the 2n-4 optimum."""
    d = metrics(g).diameter
    if a < 2 * d + 2:
        raise InfeasibleError(f"large-age construction needs a >= 2D+2 = {2 * d + 2}, got {a}")
    lab = label_2r_plus_1(g)
    if has_c4(g):
        return LargeAgeResult(lab, KNOWN_GAP, 1)
    return LargeAgeResult(lab, EXACT, 0)
