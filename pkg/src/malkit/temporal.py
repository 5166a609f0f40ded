"""Labelings, temporal graphs and strict temporal reachability.

A label t on edge {u, v} means the edge can be crossed (either way, or along
the arc direction for directed graphs) at time t. Paths must use strictly
increasing times, so two crossings at the same time never chain.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Iterator, Mapping

from .errors import GraphError, ParseError
from .graph import INF, Edge, Graph


class Labeling:
    """Map from edge to a set of positive integer labels.

    Keys are normalized (u < v) unless ``directed`` is set. Empty label sets
    are never stored.
    """

    __slots__ = ("directed", "_labels", "_occ")

    def __init__(self, entries: Mapping[Edge, Iterable[int]] | None = None, directed: bool = False):
        self.directed = directed
        self._labels: dict[Edge, set[int]] = {}
        self._occ = None
        if entries:
            for (u, v), labels in entries.items():
                self.add(u, v, *labels)

    def _key(self, u: int, v: int) -> Edge:
        if u == v:
            raise GraphError(f"cannot label a self-loop at {u}")
        return (u, v) if self.directed or u < v else (v, u)

    def add(self, u: int, v: int, *labels: int) -> None:
        for t in labels:
            if isinstance(t, bool) or not isinstance(t, int) or t < 1:
                raise ValueError(f"labels must be positive integers, got {t!r}")
        if not labels:
            return
        self._labels.setdefault(self._key(u, v), set()).update(labels)
        self._occ = None

    def labels(self, u: int, v: int) -> tuple[int, ...]:
        return tuple(sorted(self._labels.get(self._key(u, v), ())))

    def edges(self) -> list[Edge]:
        """Edges carrying at least one label, sorted."""
        return sorted(self._labels)

    def items(self) -> Iterator[tuple[Edge, tuple[int, ...]]]:
        for e in sorted(self._labels):
            yield e, tuple(sorted(self._labels[e]))

    @property
    def total(self) -> int:
        return sum(len(s) for s in self._labels.values())

    @property
    def lifetime(self) -> int:
        return max((max(s) for s in self._labels.values()), default=0)

    def occurrences(self) -> list[tuple[int, int, int]]:
        """(label, u, v) triples sorted by label, then edge."""
        if self._occ is None:
            self._occ = sorted((t, u, v) for (u, v), s in self._labels.items() for t in s)
        return self._occ

    def union(self, other: "Labeling") -> "Labeling":
        out = self.copy()
        for (u, v), labels in other.items():
            out.add(u, v, *labels)
        return out

    def copy(self) -> "Labeling":
        out = Labeling(directed=self.directed)
        out._labels = {e: set(s) for e, s in self._labels.items()}
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Labeling):
            return NotImplemented
        return self.directed == other.directed and self._labels == other._labels

    def __repr__(self) -> str:
        return f"Labeling(total={self.total}, lifetime={self.lifetime}, edges={len(self._labels)})"


@dataclass(frozen=True)
class TemporalGraph:
    graph: Graph
    labeling: Labeling

    def __post_init__(self):
        if self.labeling.directed != self.graph.directed:
            raise GraphError("labeling and graph disagree on directedness")
        for u, v in self.labeling.edges():
            if not self.graph.has_edge(u, v):
                raise GraphError(f"labeled edge ({u}, {v}) is not in the graph")


@dataclass(frozen=True)
class Verdict:
    """Outcome of a connectivity check. Truthy iff connected within the age bound."""

    connected: bool
    pair: tuple[int, int] | None = None
    offending_label: int | None = None

    def __bool__(self) -> bool:
        return self.connected

    def describe(self) -> str:
        if self.connected:
            return "temporally connected"
        if self.offending_label is not None:
            return f"label {self.offending_label} exceeds the age bound"
        s, v = self.pair
        return f"vertex {v} is not temporally reachable from vertex {s}"


def count_labels(tg: TemporalGraph) -> int:
    return tg.labeling.total


def lifetime(tg: TemporalGraph) -> int:
    return tg.labeling.lifetime


def earliest_arrival(tg: TemporalGraph, source: int) -> list[float]:
    """Earliest arrival time at every vertex over strict temporal paths from source."""
    g = tg.graph
    if not 0 <= source < g.n:
        raise GraphError(f"vertex {source} outside [0, {g.n})")
    arrival: list[float] = [INF] * g.n
    arrival[source] = 0
    directed = g.directed
    # an update at time t writes t, which never satisfies "< t", so same-time moves cannot chain
    for t, u, v in tg.labeling.occurrences():
        if arrival[u] < t and t < arrival[v]:
            arrival[v] = t
        if not directed and arrival[v] < t and t < arrival[u]:
            arrival[u] = t
    return arrival


def reach_masks(g: Graph, labeling: Labeling) -> list[int]:
    """Bitmask per vertex v of the sources that temporally reach v."""
    reach = [1 << v for v in range(g.n)]
    directed = g.directed
    for _, group in groupby(labeling.occurrences(), key=lambda occ: occ[0]):
        updates = []
        for _, u, v in group:
            updates.append((v, reach[u]))
            if not directed:
                updates.append((u, reach[v]))
        for v, bits in updates:
            reach[v] |= bits
    return reach


def is_temporally_connected(tg: TemporalGraph, max_age: int | None = None) -> Verdict:
    if max_age is not None and tg.labeling.lifetime > max_age:
        return Verdict(False, offending_label=tg.labeling.lifetime)
    n = tg.graph.n
    full = (1 << n) - 1
    reach = reach_masks(tg.graph, tg.labeling)
    missing_any = 0
    for bits in reach:
        missing_any |= full & ~bits
    if not missing_any:
        return Verdict(True)
    source = (missing_any & -missing_any).bit_length() - 1
    target = next(v for v in range(n) if not reach[v] >> source & 1)
    return Verdict(False, pair=(source, target))


# ---------------------------------------------------------------- file format

def format_labeling(labeling: Labeling) -> str:
    rows = [f'  {{"u": {u}, "v": {v}, "labels": {json.dumps(list(labels))}}}'
            for (u, v), labels in labeling.items()]
    if not rows:
        return f'{{"age": {labeling.lifetime}, "edges": []}}\n'
    return f'{{"age": {labeling.lifetime}, "edges": [\n' + ",\n".join(rows) + "\n]}\n"


def parse_labeling(text: str, directed: bool = False) -> Labeling:
    try:
        doc = json.loads(text)
        lab = Labeling(directed=directed)
        for entry in doc["edges"]:
            labels = entry["labels"]
            if list(labels) != sorted(set(labels)):
                raise ParseError(f"labels of edge ({entry['u']}, {entry['v']}) are not strictly increasing")
            lab.add(int(entry["u"]), int(entry["v"]), *labels)
    except (KeyError, TypeError, json.JSONDecodeError, ValueError, GraphError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"bad labeling file: {exc}") from None
    if "age" in doc and doc["age"] != lab.lifetime:
        raise ParseError(f"declared age {doc['age']} differs from lifetime {lab.lifetime}")
    return lab


def read_labeling(path, directed: bool = False) -> Labeling:
    with open(path, encoding="utf-8") as fh:
        return parse_labeling(fh.read(), directed)


def write_labeling(labeling: Labeling, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_labeling(labeling))
