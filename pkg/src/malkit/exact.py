"""Exact MAL and DCSS solvers for tiny instances.

These are the ground truth the heuristics are checked against, so they favour
obvious correctness over speed and refuse anything above their budget.

exact_mal deepens on the total label count. For a given count it searches
labelings time step by time step: the state after step t is, for each vertex,
the set of sources that already reached it. Two reductions keep this exact:

* used label values can be renumbered 1..k without breaking any strict path,
  so every step is non-empty and at most min(a, count) steps are needed;
* an (edge, step) pair whose removal leaves the post-step state unchanged can
  be dropped, giving a cheaper labeling, so such choices are skipped.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceeded, DisconnectedError, InfeasibleError
from .graph import INF, Graph, diameter, is_connected
from .temporal import Labeling


@dataclass(frozen=True)
class ExactBudget:
    max_edge_label_slots: int = 64
    max_edges: int = 40
    time_limit: float = 120.0

    def __post_init__(self):
        if min(self.max_edge_label_slots, self.max_edges, self.time_limit) <= 0:
            raise ValueError("budget caps must be positive")


class _MalSearch:
    def __init__(self, g: Graph, deadline: float):
        self.g = g
        self.edges = g.edges
        self.full = (1 << g.n) - 1
        self.deadline = deadline
        self.failed: dict[tuple, int] = {}
        self.nodes = 0

    def solve(self, steps: int, budget: int):
        start = tuple(1 << v for v in range(self.g.n))
        return self._dfs(start, steps, budget)

    def _step(self, state, combo):
        new = list(state)
        directed = self.g.directed
        for i in combo:
            u, v = self.edges[i]
            new[v] |= state[u]
            if not directed:
                new[u] |= state[v]
        return new

    def _redundant(self, state, combo) -> bool:
        incoming: dict[int, list[tuple[int, int]]] = {}
        directed = self.g.directed
        for i in combo:
            u, v = self.edges[i]
            incoming.setdefault(v, []).append((i, state[u] & ~state[v]))
            if not directed:
                incoming.setdefault(u, []).append((i, state[v] & ~state[u]))
        useful = set()
        for contribs in incoming.values():
            for j, (i, bits) in enumerate(contribs):
                if not bits:
                    continue
                others = 0
                for k, (_, b) in enumerate(contribs):
                    if k != j:
                        others |= b
                if bits & ~others:
                    useful.add(i)
        return len(useful) < len(combo)

    def _dfs(self, state, steps_left, budget):
        full = self.full
        nonfull = sum(1 for bits in state if bits != full)
        if nonfull == 0:
            return []
        if steps_left == 0 or (nonfull + 1) // 2 > budget:
            return None
        key = (state, steps_left)
        if self.failed.get(key, -1) >= budget:
            return None
        self.nodes += 1
        if self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("exact MAL search ran out of time")
        if self.g.directed:
            cand = [i for i, (u, v) in enumerate(self.edges) if state[u] & ~state[v]]
        else:
            cand = [i for i, (u, v) in enumerate(self.edges) if state[u] != state[v]]
        for k in range(1, min(budget, len(cand)) + 1):
            for combo in combinations(cand, k):
                if k > 1 and self._redundant(state, combo):
                    continue
                rest = self._dfs(tuple(self._step(state, combo)), steps_left - 1, budget - k)
                if rest is not None:
                    return [combo] + rest
        self.failed[key] = budget
        return None


def mal_lower_bound(n: int) -> int:
    return max(2 * n - 4, n - 1)


def exact_mal(g: Graph, a: int, budget: ExactBudget = ExactBudget(), start: int | None = None) -> Labeling:
    """Minimum-size labeling with lifetime <= a making g temporally connected.

    ``start`` overrides the first label count tried (default max(2n-4, n-1)).
    """
    if not is_connected(g):
        raise InfeasibleError("graph is not connected")
    d = diameter(g)
    if a < d:
        raise InfeasibleError(f"age {a} is below the diameter {d}")
    if g.m * a > budget.max_edge_label_slots:
        raise BudgetExceeded(f"m*a = {g.m * a} exceeds the slot cap {budget.max_edge_label_slots}")
    search = _MalSearch(g, time.monotonic() + budget.time_limit)
    lo = mal_lower_bound(g.n) if start is None else start
    for total in range(lo, g.m * a + 1):
        steps = search.solve(min(a, total), total)
        if steps is not None:
            lab = Labeling(directed=g.directed)
            for t, combo in enumerate(steps, 1):
                for i in combo:
                    lab.add(*g.edges[i], t)
            return lab
    raise InfeasibleError(f"no labeling with lifetime <= {a} exists")


def _diameter_at_most(n: int, adj_masks: list[int], d: int) -> bool:
    full = (1 << n) - 1
    for s in range(n):
        seen = 1 << s
        frontier = seen
        for _ in range(d):
            if seen == full:
                break
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj_masks[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
        if seen != full:
            return False
    return True


def exact_dcss(g: Graph, d: int, budget: ExactBudget = ExactBudget()) -> Graph:
    """Spanning subgraph with diameter <= d and the fewest edges, by enumeration."""
    if g.directed:
        raise ValueError("exact_dcss handles undirected graphs only")
    if not is_connected(g):
        raise InfeasibleError("graph is not connected")
    if diameter(g) > d:
        raise InfeasibleError(f"required diameter {d} is below the diameter of the graph")
    if g.m > budget.max_edges:
        raise BudgetExceeded(f"m = {g.m} exceeds the edge cap {budget.max_edges}")
    deadline = time.monotonic() + budget.time_limit
    n = g.n
    checked = 0
    for k in range(n - 1, g.m + 1):
        for subset in combinations(g.edges, k):
            checked += 1
            if checked & 4095 == 0 and time.monotonic() > deadline:
                raise BudgetExceeded("exact DCSS search ran out of time")
            masks = [0] * n
            for u, v in subset:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            if _diameter_at_most(n, masks, d):
                return Graph(n, subset)
    raise InfeasibleError("no spanning subgraph meets the diameter bound")  # unreachable for d >= D_G
