import random

from hypothesis import strategies as st

from forcekit.graphs import Graph, graph_from_edges


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Decode an edge subset of K_n (pairs in lexicographic order)."""
    edges = []
    bit = 1
    for i in range(n):
        for j in range(i + 1, n):
            if mask & bit:
                edges.append((i, j))
            bit <<= 1
    return graph_from_edges(n, edges)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return graph_from_edge_mask(n, mask)


@st.composite
def graph_with_subset(draw, min_n: int = 1, max_n: int = 7):
    g = draw(graphs(min_n, max_n))
    sub = draw(st.integers(0, g.full_mask))
    return g, sub


def seeded_random_graph(seed: int, n: int) -> Graph:
    rng = random.Random(seed)
    p = rng.uniform(0.1, 0.9)
    return graph_from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)
            if rng.random() < p])
