"""Gadget graphs built from Set Cover and MIN-REP instances.

Each builder returns the graph together with a role per vertex and the
parameters used, and each has a matching witness construction that turns a
known cover into a feasible labeling or subgraph of predictable size. That
makes the families useful as adversarial test inputs with a certified upper
bound on the optimum.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GraphError, ParseError
from .graph import Graph, metrics
from .temporal import Labeling


@dataclass(frozen=True)
class SetCoverInstance:
    universe_size: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.universe_size < 1:
            raise ValueError("universe must be non-empty")
        if not self.sets:
            raise ValueError("need at least one set")
        covered = set()
        for j, s in enumerate(self.sets):
            if not s:
                raise ValueError(f"set {j} is empty")
            if min(s) < 0 or max(s) >= self.universe_size:
                raise ValueError(f"set {j} has elements outside [0, {self.universe_size})")
            covered |= s
        if len(covered) != self.universe_size:
            missing = sorted(set(range(self.universe_size)) - covered)
            raise ValueError(f"elements {missing} are covered by no set")

    @classmethod
    def of(cls, universe_size: int, sets: Iterable[Iterable[int]]) -> "SetCoverInstance":
        return cls(universe_size, tuple(frozenset(s) for s in sets))

    def check_cover(self, cover: Iterable[int]) -> list[int]:
        cover = sorted(set(cover))
        for j in cover:
            if not 0 <= j < len(self.sets):
                raise ValueError(f"set index {j} out of range")
        covered = set().union(*(self.sets[j] for j in cover)) if cover else set()
        if len(covered) != self.universe_size:
            missing = sorted(set(range(self.universe_size)) - covered)
            raise ValueError(f"cover misses elements {missing}")
        return cover

    def to_json(self) -> str:
        return json.dumps({"universeSize": self.universe_size,
                           "sets": [sorted(s) for s in self.sets]})

    @classmethod
    def from_json(cls, text: str) -> "SetCoverInstance":
        try:
            doc = json.loads(text)
            return cls.of(int(doc["universeSize"]), doc["sets"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad set cover file: {exc}") from None


def optimal_cover(sc: SetCoverInstance) -> list[int]:
    """Smallest cover by enumeration; only for small collections."""
    for k in range(1, len(sc.sets) + 1):
        for combo in combinations(range(len(sc.sets)), k):
            if len(set().union(*(sc.sets[j] for j in combo))) == sc.universe_size:
                return list(combo)
    raise AssertionError("validated instances always have a cover")


@dataclass(frozen=True)
class MinRepInstance:
    groups_a: tuple[tuple[int, ...], ...]
    groups_b: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        r = len(self.groups_a)
        if r < 1 or len(self.groups_b) != r:
            raise ValueError("A and B need the same positive number of groups")
        sigma = len(self.groups_a[0])
        seen = set()
        for grp in self.groups_a + self.groups_b:
            if len(grp) != sigma or sigma < 1:
                raise ValueError(f"every group must have size {sigma}")
            for v in grp:
                if v in seen:
                    raise ValueError(f"vertex {v} appears in two groups")
                seen.add(v)
        side_a = {v for g in self.groups_a for v in g}
        for a, b in self.edges:
            if a not in side_a or b not in seen or b in side_a:
                raise ValueError(f"edge ({a}, {b}) must join A to B")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("duplicate bipartite edge")

    @classmethod
    def of(cls, groups_a, groups_b, edges) -> "MinRepInstance":
        return cls(tuple(tuple(g) for g in groups_a), tuple(tuple(g) for g in groups_b),
                   tuple((int(a), int(b)) for a, b in edges))

    @property
    def r(self) -> int:
        return len(self.groups_a)

    @property
    def sigma(self) -> int:
        return len(self.groups_a[0])

    def group_of(self) -> dict[int, tuple[str, int]]:
        out = {}
        for i, grp in enumerate(self.groups_a):
            for v in grp:
                out[v] = ("a", i)
        for j, grp in enumerate(self.groups_b):
            for v in grp:
                out[v] = ("b", j)
        return out

    def condensed_edges(self) -> set[tuple[int, int]]:
        """(i, j) pairs of A-group i and B-group j joined by some edge."""
        grp = self.group_of()
        return {(grp[a][1], grp[b][1]) for a, b in self.edges}

    def check_rep_cover(self, cover: Iterable[int]) -> dict[tuple[str, int], int]:
        """Validate a one-vertex-per-group REP-cover; return group -> representative."""
        grp = self.group_of()
        reps: dict[tuple[str, int], int] = {}
        for v in set(cover):
            if v not in grp:
                raise ValueError(f"vertex {v} belongs to no group")
            if grp[v] in reps:
                raise ValueError(f"group {grp[v]} has more than one representative")
            reps[grp[v]] = v
        if len(reps) != 2 * self.r:
            raise ValueError("every group needs exactly one representative")
        edges = set(self.edges)
        for i, j in self.condensed_edges():
            if (reps[("a", i)], reps[("b", j)]) not in edges:
                raise ValueError(f"condensed edge (a{i + 1}, b{j + 1}) is not covered")
        return reps

    def to_json(self) -> str:
        return json.dumps({"groupsA": [list(g) for g in self.groups_a],
                           "groupsB": [list(g) for g in self.groups_b],
                           "edges": [list(e) for e in self.edges]})

    @classmethod
    def from_json(cls, text: str) -> "MinRepInstance":
        try:
            doc = json.loads(text)
            return cls.of(doc["groupsA"], doc["groupsB"], doc["edges"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad MIN-REP file: {exc}") from None


@dataclass(frozen=True)
class ReductionArtifacts:
    graph: Graph
    roles: tuple[str, ...]
    params: dict = field(default_factory=dict)
    instance: object = None

    def vertex(self, role: str) -> int:
        return self.roles.index(role)

    def roles_json(self) -> str:
        return json.dumps({"roles": list(self.roles), "params": self.params})


class _Builder:
    def __init__(self):
        self.roles: list[str] = []
        self.index: dict[str, int] = {}
        self.edges: set[tuple[int, int]] = set()

    def vertex(self, role: str) -> int:
        self.index[role] = len(self.roles)
        self.roles.append(role)
        return self.index[role]

    def edge(self, a: str, b: str) -> None:
        u, v = self.index[a], self.index[b]
        self.edges.add((min(u, v), max(u, v)))

    def graph(self) -> Graph:
        return Graph(len(self.roles), self.edges)


def _assert_diameter(g: Graph, expected: int) -> None:
    got = metrics(g).diameter
    if got != expected:
        raise AssertionError(f"gadget graph has diameter {got}, construction promises {expected}")


# ---------------------------------------------------------------- Set Cover -> MAL, a = 2

def sc_to_mal2(sc: SetCoverInstance, x: int | None = None) -> ReductionArtifacts:
    """Blocks in order: u_1..u_eta, s_1..s_mu, t_1..t_3, w_1..w_x."""
    eta, mu = sc.universe_size, len(sc.sets)
    if x is None:
        x = eta + mu + 1
    b = _Builder()
    us = [b.vertex(f"u_{i + 1}") for i in range(eta)]
    ss = [b.vertex(f"s_{j + 1}") for j in range(mu)]
    for k in (1, 2, 3):
        b.vertex(f"t_{k}")
    for l in range(x):
        b.vertex(f"w_{l + 1}")
    for j, s in enumerate(sc.sets):
        for i in s:
            b.edge(f"u_{i + 1}", f"s_{j + 1}")
    for z in [f"u_{i + 1}" for i in range(eta)] + [f"s_{j + 1}" for j in range(mu)] + ["t_2"]:
        b.edge("t_1", z)
    for z in [f"w_{l + 1}" for l in range(x)] + [f"s_{j + 1}" for j in range(mu)] + ["t_2"]:
        b.edge("t_3", z)
    for l in range(x):
        for j in range(mu):
            b.edge(f"w_{l + 1}", f"s_{j + 1}")
    del us, ss
    g = b.graph()
    _assert_diameter(g, 2)
    return ReductionArtifacts(g, tuple(b.roles), {"x": x, "a": 2, "eta": eta, "mu": mu}, sc)


def witness_mal2(art: ReductionArtifacts, cover: Iterable[int]) -> Labeling:
    """Labels {1, 2} on the t-edges, one covering edge per element, and W-to-cover edges."""
    sc: SetCoverInstance = art.instance
    cover = sc.check_cover(cover)
    x, eta, mu = art.params["x"], sc.universe_size, len(sc.sets)
    v = art.vertex
    lab = Labeling()
    for z in [f"u_{i + 1}" for i in range(eta)] + [f"s_{j + 1}" for j in range(mu)] + ["t_2"]:
        lab.add(v("t_1"), v(z), 1, 2)
    for z in [f"w_{l + 1}" for l in range(x)] + [f"s_{j + 1}" for j in range(mu)] + ["t_2"]:
        lab.add(v("t_3"), v(z), 1, 2)
    for i in range(eta):
        j = next(j for j in cover if i in sc.sets[j])
        lab.add(v(f"u_{i + 1}"), v(f"s_{j + 1}"), 1, 2)
    for l in range(x):
        for j in cover:
            lab.add(v(f"w_{l + 1}"), v(f"s_{j + 1}"), 1, 2)
    return lab


def witness_mal2_size(eta: int, mu: int, x: int, k: int) -> int:
    return 4 * (eta + mu + 1) + 2 * x + 2 * x * k


# ---------------------------------------------------------------- Set Cover -> DCSS, d >= 3

def sc_to_dcss(sc: SetCoverInstance, d: int, x: int | None = None) -> ReductionArtifacts:
    """Blocks: u_{i,0}.. u_{i,d-2} (copy-major), s_j, t_1..t_x, z_0..z_{d-2}, w."""
    if d < 3:
        raise ValueError(f"the construction needs d >= 3, got {d}")
    if d % 2 == 0:
        raise ValueError(f"only odd d is supported, got {d}")
    eta, mu = sc.universe_size, len(sc.sets)
    if x is None:
        x = eta * d + mu
    mid = (d - 2) // 2
    b = _Builder()
    for q in range(d - 1):
        for i in range(eta):
            b.vertex(f"copy(u,{i + 1},{q})")
    for j in range(mu):
        b.vertex(f"s_{j + 1}")
    for l in range(x):
        b.vertex(f"t_{l + 1}")
    for q in range(d - 1):
        b.vertex(f"z_{q}")
    b.vertex("w")
    for e in _sc_dcss_fixed_edges(eta, mu, d):
        b.edge(*e)
    for j, s in enumerate(sc.sets):
        for i in s:
            b.edge(f"s_{j + 1}", f"copy(u,{i + 1},0)")
    for l in range(x):
        for j in range(mu):
            b.edge(f"t_{l + 1}", f"s_{j + 1}")
    g = b.graph()
    _assert_diameter(g, d)
    params = {"x": x, "d": d, "eta": eta, "mu": mu, "mid": mid}
    return ReductionArtifacts(g, tuple(b.roles), params, sc)


def _sc_dcss_fixed_edges(eta: int, mu: int, d: int):
    """E_p, E_zu, E_zs, E_zz and E_w: the part every witness keeps."""
    mid = (d - 2) // 2
    for i in range(eta):
        for q in range(d - 2):
            yield f"copy(u,{i + 1},{q})", f"copy(u,{i + 1},{q + 1})"
        yield f"z_{d - 2}", f"copy(u,{i + 1},{d - 2})"
        yield "w", f"copy(u,{i + 1},{mid})"
    for j in range(mu):
        yield "z_0", f"s_{j + 1}"
    for q in range(d - 2):
        yield f"z_{q}", f"z_{q + 1}"
    yield "w", f"z_{mid}"


def witness_dcss(art: ReductionArtifacts, cover: Iterable[int]) -> Graph:
    sc: SetCoverInstance = art.instance
    cover = sc.check_cover(cover)
    eta, mu, d, x = sc.universe_size, len(sc.sets), art.params["d"], art.params["x"]
    v = art.vertex
    edges = [(v(a), v(b)) for a, b in _sc_dcss_fixed_edges(eta, mu, d)]
    for l in range(x):
        for j in cover:
            edges.append((v(f"t_{l + 1}"), v(f"s_{j + 1}")))
    for i in range(eta):
        j = next(j for j in cover if i in sc.sets[j])
        edges.append((v(f"s_{j + 1}"), v(f"copy(u,{i + 1},0)")))
    return art.graph.subgraph(edges)


def witness_dcss_bound(eta: int, mu: int, x: int, d: int, k: int) -> int:
    return eta * (d + 1) + x * k + mu + d - 2


# ---------------------------------------------------------------- MIN-REP -> DCSS, d = 3

def minrep_to_dcss3(mr: MinRepInstance, x: int | None = None) -> ReductionArtifacts:
    """Blocks: A (group order), B, copies of a_i, copies of b_j, s(a_i), s(b_j), t."""
    r, sigma = mr.r, mr.sigma
    if x is None:
        x = r * sigma
    cond = [f"a{i + 1}" for i in range(r)] + [f"b{j + 1}" for j in range(r)]
    members = {f"a{i + 1}": mr.groups_a[i] for i in range(r)}
    members.update({f"b{j + 1}": mr.groups_b[j] for j in range(r)})
    cedges = {(f"a{i + 1}", f"b{j + 1}") for i, j in mr.condensed_edges()}

    b = _Builder()
    for c in cond:
        for v in members[c]:
            b.vertex(f"{c}:{v}")
    for c in cond:
        for k in range(x):
            b.vertex(f"copy({c},{k + 1})")
    for c in cond:
        b.vertex(f"s({c})")
    b.vertex("t")

    name = {v: f"{c}:{v}" for c in cond for v in members[c]}
    for a, bb in mr.edges:
        b.edge(name[a], name[bb])
    for c in cond:
        for k in range(x):
            for v in members[c]:
                b.edge(f"copy({c},{k + 1})", name[v])
            b.edge(f"copy({c},{k + 1})", f"s({c})")
    for c1, c2 in combinations(cond, 2):
        if (c1, c2) not in cedges:
            b.edge(f"s({c1})", f"s({c2})")
    for c in cond:
        for v in members[c]:
            b.edge("t", name[v])
        b.edge("t", f"s({c})")
    g = b.graph()
    _assert_diameter(g, 3)
    return ReductionArtifacts(g, tuple(b.roles), {"x": x, "d": 3, "r": r, "sigma": sigma}, mr)


def witness_minrep(art: ReductionArtifacts, rep_cover: Iterable[int]) -> Graph:
    mr: MinRepInstance = art.instance
    reps = mr.check_rep_cover(rep_cover)
    r, x = mr.r, art.params["x"]
    cond = [f"a{i + 1}" for i in range(r)] + [f"b{j + 1}" for j in range(r)]
    rep_of = {f"a{i + 1}": reps[("a", i)] for i in range(r)}
    rep_of.update({f"b{j + 1}": reps[("b", j)] for j in range(r)})
    g, v = art.graph, art.vertex
    t = v("t")
    keep = []
    for c in cond:
        s = v(f"s({c})")
        for k in range(x):
            cp = v(f"copy({c},{k + 1})")
            keep.append((cp, s))
            keep.append((cp, v(f"{c}:{rep_of[c]}")))
    cover_vertices = {v(f"{c}:{rep_of[c]}") for c in cond}
    for u, w in g.edges:
        if t in (u, w) or (art.roles[u].startswith("s(") and art.roles[w].startswith("s(")):
            keep.append((u, w))
        elif u in cover_vertices and w in cover_vertices:
            keep.append((u, w))
    return g.subgraph(keep)


def witness_minrep_bound(r: int, sigma: int, x: int) -> int:
    return 4 * r * x + 5 * r * r * sigma
