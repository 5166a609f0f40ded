"""Deliberately naive reference implementations.

Nothing here imports the algorithms under test; these only share the Graph
container. Each routine favors obviousness over speed.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations, permutations


def temporal_reach(n, arcs_with_labels, source):
    """Vertices reachable from source by strictly increasing label sequences.

    arcs_with_labels: iterable of (u, v, label) meaning u->v may be crossed at label.
    Explores states (vertex, time of arrival) breadth first.
    """
    out = [[] for _ in range(n)]
    for u, v, t in arcs_with_labels:
        out[u].append((v, t))
    seen_state = {(source, 0)}
    queue = deque([(source, 0)])
    reached = {source}
    while queue:
        v, t = queue.popleft()
        for w, lab in out[v]:
            if lab > t and (w, lab) not in seen_state:
                seen_state.add((w, lab))
                reached.add(w)
                queue.append((w, lab))
    return reached


def arcs_of(edge_labels, directed=False):
    arcs = []
    for (u, v), labels in edge_labels.items():
        for t in labels:
            arcs.append((u, v, t))
            if not directed:
                arcs.append((v, u, t))
    return arcs


def naive_connected(n, edge_labels, directed=False, max_age=None):
    if max_age is not None and any(t > max_age for ls in edge_labels.values() for t in ls):
        return False
    arcs = arcs_of(edge_labels, directed)
    return all(len(temporal_reach(n, arcs, s)) == n for s in range(n))


def naive_pairs(n, edge_labels, pairs, directed=False):
    arcs = arcs_of(edge_labels, directed)
    return all(b in temporal_reach(n, arcs, a) for a, b in pairs)


def bfs_dist(n, edges, s):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    dist = [None] * n
    dist[s] = 0
    q = deque([s])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def naive_diameter(n, edges):
    worst = 0
    for s in range(n):
        d = bfs_dist(n, edges, s)
        if None in d:
            return None
        worst = max(worst, max(d))
    return worst


def brute_mal(n, edges, a, cap=None):
    """Fewest labels by trying every subset of the (edge, label) slots."""
    slots = [(e, t) for e in edges for t in range(1, a + 1)]
    for k in range(0, len(slots) + 1):
        if cap is not None and k > cap:
            return None
        for combo in combinations(slots, k):
            labels = {}
            for e, t in combo:
                labels.setdefault(e, set()).add(t)
            if naive_connected(n, labels):
                return k
    return None


def brute_dcss(n, edges, d):
    for k in range(0, len(edges) + 1):
        for combo in combinations(edges, k):
            diam = naive_diameter(n, combo)
            if diam is not None and diam <= d:
                return k
    return None


def brute_steiner(n, edges, terminals):
    terminals = list(terminals)
    for k in range(0, len(edges) + 1):
        for combo in combinations(edges, k):
            dist = bfs_dist(n, combo, terminals[0])
            if all(dist[t] is not None for t in terminals):
                return k
    return None


def connected_graphs(n):
    """All connected simple graphs on n vertices, one per isomorphism class."""
    pairs = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    seen = set()
    out = []
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if n > 1 and naive_diameter(n, edges) is None:
            continue
        canon = min(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges)) for p in perms)
        if canon in seen:
            continue
        seen.add(canon)
        out.append(edges)
    return out


def has_four_cycle(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for a, b, c, d in permutations(range(n), 4):
        if b in adj[a] and c in adj[b] and d in adj[c] and a in adj[d]:
            return True
    return False
