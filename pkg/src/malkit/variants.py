"""Directed/undirected conversion and the multi-terminal (MSL) labeling."""
from __future__ import annotations

import heapq
from typing import Iterable

from .errors import DisconnectedError, GraphError, InfeasibleError
from .folklore import label_tree
from .graph import INF, Graph, bfs_spt, distances, is_connected, shortest_path
from .temporal import Labeling, TemporalGraph, is_temporally_connected


def bidirect(g: Graph) -> Graph:
    if g.directed:
        raise GraphError("graph is already directed")
    arcs = [(u, v) for u, v in g.edges] + [(v, u) for u, v in g.edges]
    return Graph(g.n, arcs, directed=True)


def undirect_labeling(g: Graph, dlab: Labeling, age: int | None = None) -> Labeling:
    """Merge the two arc label sets of every edge; directed paths stay valid."""
    if g.directed:
        raise GraphError("expected the undirected base graph")
    verdict = is_temporally_connected(TemporalGraph(bidirect(g), dlab), age)
    if not verdict:
        raise InfeasibleError(f"directed labeling is infeasible: {verdict.describe()}")
    lab = Labeling()
    for (u, v), labels in dlab.items():
        lab.add(u, v, *labels)
    return lab


def steiner_tree(g: Graph, terminals: Iterable[int]) -> Graph:
    """Metric-closure MST heuristic, at most twice the optimal Steiner tree."""
    terms = sorted(set(terminals))
    if not terms:
        raise ValueError("terminal set is empty")
    for t in terms:
        if not 0 <= t < g.n:
            raise GraphError(f"terminal {t} out of range")
    if not is_connected(g):
        raise DisconnectedError("Steiner tree needs a connected graph")
    dist = {t: distances(g, t) for t in terms}

    # Prim on the closure; ties go to the lowest (distance, vertex, parent)
    in_tree = {terms[0]}
    heap = [(dist[terms[0]][t], t, terms[0]) for t in terms[1:]]
    heapq.heapify(heap)
    chosen = set()
    while heap:
        _, t, p = heapq.heappop(heap)
        if t in in_tree:
            continue
        in_tree.add(t)
        path = shortest_path(g, p, t)
        chosen.update(g.key(a, b) for a, b in zip(path, path[1:]))
        for s in terms:
            if s not in in_tree:
                heapq.heappush(heap, (dist[t][s], s, t))

    # the union of paths may close cycles: take a BFS spanning tree of it
    touched = sorted({v for e in chosen for v in e} | {terms[0]})
    union = g.subgraph(chosen)
    spt = bfs_spt(union, terms[0])
    tree = {union.key(c, p) for c, p in spt.tree_edges()}
    if any(spt.dist[v] == INF for v in touched):
        raise AssertionError("path union must be connected")

    # strip non-terminal leaves
    term_set = set(terms)
    degree = {v: 0 for v in touched}
    for a, b in tree:
        degree[a] += 1
        degree[b] += 1
    leaves = [v for v in touched if degree[v] == 1 and v not in term_set]
    while leaves:
        v = leaves.pop()
        e = next(e for e in tree if v in e)
        tree.discard(e)
        degree[v] = 0
        other = e[0] if e[1] == v else e[1]
        degree[other] -= 1
        if degree[other] == 1 and other not in term_set:
            leaves.append(other)
    return g.subgraph(tree)


def label_msl(g: Graph, terminals: Iterable[int]) -> Labeling:
    """Two labels per edge of a Steiner tree, rooted at a center of that tree."""
    tree = steiner_tree(g, terminals)
    if tree.m == 0:
        return Labeling()
    used = sorted({v for e in tree.edges for v in e})
    ecc = {}
    for v in used:
        d = distances(tree, v)
        ecc[v] = max(d[u] for u in used)
    radius = min(ecc.values())
    root = min(v for v in used if ecc[v] == radius)
    spt = bfs_spt(tree, root)
    triples = [(c, p, int(spt.dist[c])) for c, p in spt.tree_edges()]
    return label_tree(triples, int(radius))
