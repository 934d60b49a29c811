"""Graph families used by the tests and experiment scripts."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph


def path(n: int) -> Graph:
    return Graph.from_index_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_index_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_index_edges(n, combinations(range(n), 2))


def star(leaves: int) -> Graph:
    """Centre is node 0."""
    return Graph.from_index_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_connected(n: int, rng: random.Random, p: float | None = None) -> Graph:
    """Random spanning tree (random attachment) plus each other pair with prob ``p``.

    Default ``p`` gives about 2 extra edges per node.
    """
    if p is None:
        p = min(1.0, 4.0 / n) if n > 1 else 0.0
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for i, j in combinations(range(n), 2):
        if (i, j) not in edges and rng.random() < p:
            edges.add((i, j))
    return Graph.from_index_edges(n, sorted(edges))


def random_tree(n: int, rng: random.Random) -> Graph:
    return random_connected(n, rng, p=0.0)


def connected_atlas(max_n: int, min_n: int = 2) -> list[Graph]:
    """All connected graphs with min_n..max_n nodes up to isomorphism (max_n <= 7).

    Uses the networkx graph atlas.
    """
    import networkx as nx

    if max_n > 7:
        raise ValueError("the graph atlas stops at 7 nodes")
    out = []
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if min_n <= n <= max_n and nx.is_connected(G):
            out.append(Graph.from_index_edges(n, G.edges()))
    return out


def random_corpus(count: int, n_range: tuple[int, int], seed: int) -> list[Graph]:
    """``count`` random connected graphs with n drawn from ``n_range`` (inclusive)
    and edge density drawn from [0, 0.6]."""
    rng = random.Random(seed)
    return [
        random_connected(rng.randint(*n_range), rng, p=rng.uniform(0.0, 0.6))
        for _ in range(count)
    ]
