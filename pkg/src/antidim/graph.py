"""Simple undirected graphs, edge-list parsing and hop distances."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, TextIO

import numpy as np


class GraphFormatError(ValueError):
    """Malformed edge-list input."""


class DisconnectedGraphError(ValueError):
    """Raised when distances are requested on a disconnected graph."""

    def __init__(self, component_sizes: list[int]):
        self.component_sizes = component_sizes
        super().__init__(
            f"graph is disconnected: {len(component_sizes)} components "
            f"of sizes {component_sizes}"
        )


@dataclass(frozen=True)
class Graph:
    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.labels) != len(self.adjacency):
            raise ValueError("labels and adjacency differ in length")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate node labels")
        arcs = set()
        for i, nbrs in enumerate(self.adjacency):
            if i in nbrs:
                raise ValueError(f"self-loop at node {self.labels[i]!r}")
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError("adjacency lists must be sorted and duplicate-free")
            arcs.update((i, j) for j in nbrs)
        if any((j, i) not in arcs for i, j in arcs):
            raise ValueError("adjacency is not symmetric")
        object.__setattr__(self, "index", {lab: i for i, lab in enumerate(self.labels)})

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, nbrs in enumerate(self.adjacency) for j in nbrs if i < j]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]], labels: Iterable[str] = ()) -> Graph:
        """Build from labelled edges; labels get indices in first-appearance order.

        Extra ``labels`` (e.g. isolated nodes) are registered before the edges.
        Duplicate edges collapse, self-loops raise ``ValueError``.
        """
        index: dict[str, int] = {}
        for lab in labels:
            index.setdefault(lab, len(index))
        nbrs: list[set[int]] = [set() for _ in index]
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at node {a!r}")
            for lab in (a, b):
                if lab not in index:
                    index[lab] = len(index)
                    nbrs.append(set())
            i, j = index[a], index[b]
            nbrs[i].add(j)
            nbrs[j].add(i)
        return cls(tuple(index), tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def from_index_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Nodes ``0..n-1`` labelled by their decimal index."""
        return cls.from_edges(((str(i), str(j)) for i, j in edges), labels=map(str, range(n)))


def parse_edge_list(stream: TextIO | str) -> Graph:
    text = stream if isinstance(stream, str) else stream.read()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected 2 tokens, got {len(tokens)}")
        if tokens[0] == tokens[1]:
            raise GraphFormatError(f"line {lineno}: self-loop on {tokens[0]!r}")
        edges.append((tokens[0], tokens[1]))
    if not edges:
        raise GraphFormatError("edge list contains no edges")
    return Graph.from_edges(edges)


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh)


def format_edge_list(g: Graph) -> str:
    return "".join(f"{g.labels[i]} {g.labels[j]}\n" for i, j in g.edges())


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances of a connected graph (read-only int array)."""

    dist: np.ndarray

    def __post_init__(self):
        self.dist.setflags(write=False)

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    @property
    def diameter(self) -> int:
        return int(self.dist.max()) if self.n else 0

    def __getitem__(self, ij):
        return self.dist[ij]


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distance from ``source`` to every node, -1 where unreachable."""
    out = [-1] * g.n
    out[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = out[u] + 1
        for w in g.adjacency[u]:
            if out[w] < 0:
                out[w] = du
                queue.append(w)
    return out


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    if g.n == 0:
        raise ValueError("graph has no nodes")
    comps = connected_components(g)
    if len(comps) > 1:
        raise DisconnectedGraphError(sorted((len(c) for c in comps), reverse=True))
    # BFS from every source at once: one frontier-expansion product per level.
    n = g.n
    adj = adjacency_matrix(g).astype(np.float32)
    dist = np.full((n, n), -1, dtype=np.int16 if n < 2**15 else np.int32)
    np.fill_diagonal(dist, 0)
    frontier = np.eye(n, dtype=np.float32)
    level = 0
    while frontier.any():
        level += 1
        nxt = (frontier @ adj > 0) & (dist < 0)
        dist[nxt] = level
        frontier = nxt.astype(np.float32)
    return DistanceMatrix(dist)


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=bool)
    for i, nbrs in enumerate(g.adjacency):
        a[i, list(nbrs)] = True
    return a


def neighborhood(g: Graph, v: int) -> frozenset[int]:
    return frozenset(g.adjacency[v])


def degree_one_node(g: Graph) -> int | None:
    for v, nbrs in enumerate(g.adjacency):
        if len(nbrs) == 1:
            return v
    return None


def has_four_cycle(g: Graph) -> bool:
    # A C4 exists iff two distinct nodes share >= 2 neighbours. Walking the
    # wedges (u, centre, w) hits a repeated pair after O(n^2) steps at most.
    seen: set[tuple[int, int]] = set()
    for nbrs in g.adjacency:
        for pair in combinations(nbrs, 2):
            if pair in seen:
                return True
            seen.add(pair)
    return False
