import io
import random
from itertools import combinations

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from antidim.corpus import complete, cycle, random_connected, random_tree, star
from antidim.graph import (
    DisconnectedGraphError,
    Graph,
    GraphFormatError,
    all_pairs_distances,
    bfs_distances,
    degree_one_node,
    format_edge_list,
    has_four_cycle,
    neighborhood,
    parse_edge_list,
)

from conftest import C4, K4, P3, PAPER_EXAMPLE, STAR4, connected_graphs


def test_parse_path():
    g = parse_edge_list("a b\nb c")
    assert (g.n, g.m) == (3, 2)
    assert g.labels == ("a", "b", "c")
    assert g.adjacency == ((1,), (0, 2), (1,))


def test_parse_duplicates_collapse():
    g = parse_edge_list("a b\nb a\na b")
    assert (g.n, g.m) == (2, 1)


def test_parse_self_loop_names_line():
    with pytest.raises(GraphFormatError, match="line 2.*self-loop"):
        parse_edge_list("a b\nc c\n")


@pytest.mark.parametrize("text", ["a b c\n", "a\n", "a b\nx\n"])
def test_parse_token_count(text):
    with pytest.raises(GraphFormatError, match="expected 2 tokens"):
        parse_edge_list(text)


def test_parse_comments_blank_lines_and_stream():
    g = parse_edge_list(io.StringIO("# header\n\n  a b  \n# c d\nb\tc\n"))
    assert g.labels == ("a", "b", "c")
    assert g.m == 2


def test_edge_list_round_trip():
    g = parse_edge_list(PAPER_EXAMPLE)
    h = parse_edge_list(format_edge_list(g))

    def labelled(x):
        return {frozenset((x.labels[i], x.labels[j])) for i, j in x.edges()}

    assert labelled(h) == labelled(g)


def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError, match="symmetric"):
        Graph(("a", "b"), ((1,), ()))


def test_distances_path():
    d = all_pairs_distances(parse_edge_list(P3))
    assert d.dist[0, 2] == 2
    assert d.diameter == 2


def test_distances_complete():
    d = all_pairs_distances(parse_edge_list(K4))
    assert (d.dist == 1 - np.eye(4, dtype=int)).all()
    assert d.diameter == 1


def test_distances_c5():
    d = all_pairs_distances(cycle(5))
    for row in d.dist:
        assert sorted(row.tolist()) == [0, 1, 1, 2, 2]


def test_distances_paper_example():
    d = all_pairs_distances(parse_edge_list(PAPER_EXAMPLE))
    assert d.dist[1].tolist() == [1, 0, 2, 1, 2]
    assert d.diameter == 3


def test_distance_matrix_is_read_only():
    d = all_pairs_distances(parse_edge_list(P3))
    with pytest.raises(ValueError):
        d.dist[0, 1] = 5


def test_disconnected_lists_component_sizes():
    g = parse_edge_list("a b\nb c\nx y\n")
    with pytest.raises(DisconnectedGraphError) as info:
        all_pairs_distances(g)
    assert info.value.component_sizes == [3, 2]


def test_neighborhood_paper_example():
    g = parse_edge_list(PAPER_EXAMPLE)
    assert {g.labels[v] for v in neighborhood(g, g.index["v2"])} == {"v1", "v4"}


def test_neighborhood_complete_and_leaf():
    assert neighborhood(complete(4), 2) == {0, 1, 3}
    g = parse_edge_list(P3)
    assert neighborhood(g, 0) == {1}


def test_degree_one_node():
    assert degree_one_node(parse_edge_list(P3)) == 0
    assert degree_one_node(parse_edge_list(C4)) is None
    g = parse_edge_list(STAR4)
    assert g.labels[degree_one_node(g)] == "l1"


def test_four_cycle_examples():
    assert has_four_cycle(parse_edge_list(C4))
    assert has_four_cycle(complete(4))
    assert not has_four_cycle(star(5))
    assert not has_four_cycle(cycle(5))
    rng = random.Random(3)
    for _ in range(20):
        assert not has_four_cycle(random_tree(rng.randint(1, 30), rng))


def _c4_by_subsets(G: nx.Graph) -> bool:
    for a, b, c, d in combinations(G.nodes, 4):
        for w, x, y, z in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            if G.has_edge(w, x) and G.has_edge(x, y) and G.has_edge(y, z) and G.has_edge(z, w):
                return True
    return False


def test_four_cycle_matches_subset_enumeration_all_graphs_up_to_7():
    for G in nx.graph_atlas_g():
        g = Graph.from_index_edges(G.number_of_nodes(), G.edges())
        assert has_four_cycle(g) == _c4_by_subsets(G), list(G.edges())


def test_distances_match_independent_bfs():
    rng = random.Random(7)
    for _ in range(500):
        n = rng.randint(1, 64)
        g = random_connected(n, rng, p=rng.uniform(0.0, 0.3))
        d = all_pairs_distances(g)
        G = nx.Graph(g.edges())
        G.add_nodes_from(range(n))
        for s, lengths in nx.all_pairs_shortest_path_length(G):
            assert [lengths[t] for t in range(n)] == d.dist[s].tolist()
        assert bfs_distances(g, 0) == d.dist[0].tolist()


@settings(max_examples=200, deadline=None)
@given(connected_graphs())
def test_distance_matrix_metric_properties(g):
    d = all_pairs_distances(g).dist.astype(int)
    n = g.n
    assert (np.diag(d) == 0).all()
    assert (d == d.T).all()
    adj = np.zeros((n, n), dtype=bool)
    for i, j in g.edges():
        adj[i, j] = adj[j, i] = True
    assert ((d == 1) == adj).all()
    # d[i, j] <= d[i, k] + d[k, j] for every triple
    assert (d[:, None, :] <= d[:, :, None] + d[None, :, :]).all()
