import random

import pytest
from hypothesis import strategies as st

from antidim.corpus import connected_atlas, random_corpus
from antidim.graph import Graph, all_pairs_distances, parse_edge_list

# Nodes v1..v5 of the five-node worked example: d(v2) = (1,0,2,1,2), diameter 3.
PAPER_EXAMPLE = "v1 v2\nv3 v4\nv3 v5\nv2 v4\nv4 v5\n"


def graph_from(text: str) -> Graph:
    return parse_edge_list(text)


def dist_of(text: str):
    return all_pairs_distances(parse_edge_list(text))


P3 = "a b\nb c\n"
P4 = "a b\nb c\nc d\n"
C4 = "a b\nb c\nc d\nd a\n"
C5 = "a b\nb c\nc d\nd e\ne a\n"
K3 = "a b\nb c\na c\n"
K4 = "a b\na c\na d\nb c\nb d\nc d\n"
STAR4 = "center l1\ncenter l2\ncenter l3\ncenter l4\n"
STAR3 = "center l1\ncenter l2\ncenter l3\n"


@pytest.fixture(scope="session")
def atlas6():
    return connected_atlas(6)


@pytest.fixture(scope="session")
def atlas7():
    return connected_atlas(7)


@pytest.fixture(scope="session")
def corpus():
    """Acceptance corpus: connected graphs n <= 6 up to isomorphism + 200 random n in [7, 8]."""
    return connected_atlas(6) + random_corpus(200, (7, 8), seed=2024)


@pytest.fixture
def rng():
    return random.Random(12345)


@st.composite
def connected_graphs(draw, max_n=14):
    n = draw(st.integers(1, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    edges = [(i, p) for i, p in zip(range(1, n), parents)] + [(a, b) for a, b in extra if a != b]
    return Graph.from_index_edges(n, edges)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
