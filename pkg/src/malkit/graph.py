"""Static graphs on vertices 0..n-1 and the BFS machinery everything else sits on.

Adjacency lists are kept sorted so every traversal visits the lowest-numbered
neighbor first; that single rule makes all trees and forests reproducible.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import DisconnectedError, GraphError, ParseError

INF = math.inf

Edge = tuple[int, int]


class Graph:
    """Immutable simple graph. Undirected edges are stored as (u, v) with u < v."""

    __slots__ = ("n", "edges", "directed", "adj", "radj", "_edge_set")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), directed: bool = False):
        if n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        self.n = n
        self.directed = directed
        seen: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (u, v) if directed or u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self._edge_set = frozenset(seen)
        out: list[list[int]] = [[] for _ in range(n)]
        inc: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            out[u].append(v)
            if directed:
                inc[v].append(u)
            else:
                out[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in out)
        self.radj = tuple(tuple(sorted(a)) for a in inc) if directed else self.adj

    @property
    def m(self) -> int:
        return len(self.edges)

    def key(self, u: int, v: int) -> Edge:
        """Canonical dictionary key for the edge or arc between u and v."""
        if self.directed or u < v:
            return (u, v)
        return (v, u)

    def has_edge(self, u: int, v: int) -> bool:
        return self.key(u, v) in self._edge_set

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def subgraph(self, edges: Iterable[Sequence[int]]) -> "Graph":
        """Spanning subgraph on the same vertex set; every edge must belong to self."""
        h = Graph(self.n, edges, self.directed)
        for e in h.edges:
            if e not in self._edge_set:
                raise GraphError(f"edge {e} is not an edge of the host graph")
        return h

    def is_subgraph_of(self, other: "Graph") -> bool:
        return (self.n == other.n and self.directed == other.directed
                and self._edge_set <= other._edge_set)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.directed, self.edges) == (other.n, other.directed, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.directed, self.edges))

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"Graph(n={self.n}, m={self.m}, {kind})"


@dataclass(frozen=True)
class SptResult:
    root: int
    parent: tuple[int | None, ...]
    dist: tuple[float, ...]

    def tree_edges(self) -> list[Edge]:
        """(child, parent) pairs, in BFS discovery order."""
        order = sorted((d, v) for v, d in enumerate(self.dist) if d != INF)
        return [(v, self.parent[v]) for _, v in order if self.parent[v] is not None]


@dataclass(frozen=True)
class SpfResult:
    roots: frozenset[int]
    parent: tuple[int | None, ...]
    dist: tuple[float, ...]
    root_of: tuple[int | None, ...]

    def tree_edges(self) -> list[Edge]:
        order = sorted((d, v) for v, d in enumerate(self.dist) if d != INF)
        return [(v, self.parent[v]) for _, v in order if self.parent[v] is not None]


class Metrics(NamedTuple):
    diameter: int
    radius: int
    center: int
    ecc: tuple[int, ...]


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside [0, {g.n})")


def _bfs(g: Graph, sources: Sequence[int]):
    n = g.n
    dist: list[float] = [INF] * n
    parent: list[int | None] = [None] * n
    origin: list[int | None] = [None] * n
    queue = deque()
    for s in sources:
        if dist[s] == INF:
            dist[s] = 0
            origin[s] = s
            queue.append(s)
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] == INF:
                dist[v] = du
                parent[v] = u
                origin[v] = origin[u]
                queue.append(v)
    return dist, parent, origin


def bfs_spt(g: Graph, root: int) -> SptResult:
    _check_vertex(g, root)
    dist, parent, _ = _bfs(g, [root])
    return SptResult(root, tuple(parent), tuple(dist))


def bfs_spf(g: Graph, roots: Iterable[int]) -> SpfResult:
    roots = sorted(set(roots))
    if not roots:
        raise GraphError("shortest path forest needs at least one root")
    for r in roots:
        _check_vertex(g, r)
    dist, parent, origin = _bfs(g, roots)
    return SpfResult(frozenset(roots), tuple(parent), tuple(dist), tuple(origin))


def distances(g: Graph, source: int) -> list[float]:
    """Hop distances from source (INF where unreachable)."""
    n = g.n
    dist: list[float] = [INF] * n
    dist[source] = 0
    frontier = [source]
    adj = g.adj
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if dist[v] == INF:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    return dist


def all_pairs_distances(g: Graph) -> list[list[float]]:
    return [distances(g, s) for s in range(g.n)]


def eccentricities(g: Graph) -> list[float]:
    return [max(distances(g, s)) for s in range(g.n)]


def is_connected(g: Graph) -> bool:
    """Connected (strongly connected when directed)."""
    if INF in distances(g, 0):
        return False
    if g.directed:
        rev = Graph(g.n, [(v, u) for u, v in g.edges], directed=True)
        return INF not in distances(rev, 0)
    return True


def metrics(g: Graph) -> Metrics:
    ecc = eccentricities(g)
    if INF in ecc:
        raise DisconnectedError("metrics need a connected graph")
    ecc_int = tuple(int(e) for e in ecc)
    radius = min(ecc_int)
    return Metrics(max(ecc_int), radius, ecc_int.index(radius), ecc_int)


def diameter(g: Graph) -> float:
    """Diameter, or INF for a disconnected graph (no exception)."""
    return max(eccentricities(g))


def shortest_path(g: Graph, s: int, t: int) -> list[int]:
    """Vertices of the BFS shortest path s..t (lowest-neighbor tie-break)."""
    spt = bfs_spt(g, s)
    if spt.dist[t] == INF:
        raise DisconnectedError(f"no path from {s} to {t}")
    path = [t]
    while path[-1] != s:
        path.append(spt.parent[path[-1]])
    path.reverse()
    return path


def has_c4(g: Graph) -> bool:
    """True when the undirected graph contains a 4-cycle as a subgraph."""
    nbr = [set(a) for a in g.adj]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if len(nbr[u] & nbr[v]) >= 2:
                return True
    return False


# ---------------------------------------------------------------- text format

def parse_graph(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty graph file")
    lineno, head = rows[0]
    if len(head) not in (2, 3) or (len(head) == 3 and head[2] != "directed"):
        raise ParseError(f"line {lineno}: expected 'n m [directed]', got {' '.join(head)!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParseError(f"line {lineno}: {exc}") from None
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for lineno, tok in body:
        if len(tok) != 2:
            raise ParseError(f"line {lineno}: expected 'u v'")
        try:
            edges.append((int(tok[0]), int(tok[1])))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    try:
        return Graph(n, edges, directed=len(head) == 3)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_graph(g: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}" + (" directed" if g.directed else ""))
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path, comments: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g, comments))


# ---------------------------------------------------------------- small families

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Hub 0 joined to leaves 1..n-1 (n vertices in total)."""
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
