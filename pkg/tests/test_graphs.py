import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from forcekit.graphs import (
    FamilyError,
    Graph,
    GraphFormatError,
    bits,
    build_family,
    components_within,
    connected_components,
    disjoint_union,
    find_modules_order2,
    graph_from_edges,
    has_adjacent_module_order2,
    is_connected,
    is_cycle_graph,
    is_path_graph,
    is_tree,
    mask_of,
    parse_family,
    parse_graph,
    serialize_graph,
)

from conftest import graph_from_edge_mask, graphs


def fam(text):
    return build_family(parse_family(text))


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


class TestGraphInvariants:
    def test_rejects_loop(self):
        with pytest.raises(ValueError, match="loop"):
            Graph(2, (0b01, 0b10))

    def test_rejects_asymmetry(self):
        with pytest.raises(ValueError, match="asymmetric"):
            Graph(2, (0b10, 0b00))

    def test_rejects_stray_bits(self):
        with pytest.raises(ValueError):
            Graph(2, (0b100, 0b000))

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            Graph(0, ())
        with pytest.raises(ValueError):
            Graph(64, (0,) * 64)

    def test_edges_sorted(self):
        g = fam("cycle:4")
        assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]


class TestFamilies:
    def test_cycle4_degrees(self):
        g = fam("cycle:4")
        assert g.n == 4
        assert all(g.degree(v) == 2 for v in range(4))

    def test_hypercube3(self):
        g = fam("hypercube:3")
        assert (g.n, g.edge_count()) == (8, 12)
        assert all(g.degree(v) == 3 for v in range(8))
        # adjacency iff labels differ in exactly one bit
        for u in range(8):
            for v in range(u + 1, 8):
                expect = (u ^ v).bit_count() == 1
                assert bool(g.adj[u] & (1 << v)) == expect

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_hypercube_regular(self, d):
        g = fam(f"hypercube:{d}")
        assert all(g.degree(v) == d for v in range(g.n))

    def test_halfgraph2_is_p4(self):
        g = fam("halfgraph:2")
        assert g.n == 4 and is_path_graph(g)

    @pytest.mark.parametrize("s", [1, 2, 3, 4, 5])
    def test_halfgraph_degrees(self, s):
        g = fam(f"halfgraph:{s}")
        # part one vertex i (0-based) has degree s - i, part two vertex
        # s + j has degree j + 1
        for i in range(s):
            assert g.degree(i) == s - i
            assert g.degree(s + i) == i + 1

    @pytest.mark.parametrize("n", range(4, 13))
    def test_wheel_labeling(self, n):
        g = fam(f"wheel:{n}")
        hub = n - 1
        assert g.degree(hub) == n - 1
        if n >= 5:
            assert all(g.degree(v) == 3 for v in range(n - 1))
        # rim is the consecutive cycle
        for v in range(n - 1):
            assert g.adj[v] & (1 << ((v + 1) % (n - 1)))

    def test_biclique(self):
        g = fam("biclique:3,2")
        assert g.n == 5 and g.edge_count() == 6
        assert all(g.degree(v) == 2 for v in range(3))
        assert all(g.degree(v) == 3 for v in range(3, 5))

    @pytest.mark.parametrize("m,n", [(2, 7), (2, 13), (3, 10)])
    def test_marytree_is_tree(self, m, n):
        assert is_tree(fam(f"marytree:{m},{n}"))

    def test_marytree_level_fill(self):
        g = fam("marytree:2,7")
        assert sorted(bits(g.adj[0])) == [1, 2]
        assert sorted(bits(g.adj[1])) == [0, 3, 4]
        assert sorted(bits(g.adj[2])) == [0, 5, 6]

    def test_empty(self):
        g = fam("empty:3")
        assert g.edge_count() == 0 and g.n == 3

    @pytest.mark.parametrize("text", [
        "cycle:2", "wheel:3", "biclique:0,2", "marytree:1,5", "path:0",
        "hypercube:6", "halfgraph:32", "empty:64", "path:70",
    ])
    def test_parameter_bounds(self, text):
        with pytest.raises(FamilyError):
            parse_family(text)

    @pytest.mark.parametrize("text", ["wheel", "wheel:x", "biclique:3",
                                      "frob:3", "path:4+path:70"])
    def test_bad_syntax(self, text):
        with pytest.raises(FamilyError):
            parse_family(text)

    def test_union_label_roundtrip(self):
        spec = parse_family("cycle:3+path:2")
        assert spec.label() == "cycle:3+path:2"
        assert spec.order() == 5


class TestDisjointUnion:
    def test_p2_p2(self):
        g = disjoint_union(fam("path:2"), fam("path:2"))
        assert (g.n, g.edge_count()) == (4, 2)
        assert len(connected_components(g)) == 2

    def test_two_singletons(self):
        g = disjoint_union(fam("complete:1"), fam("complete:1"))
        assert g.edge_count() == 0 and g.n == 2

    def test_c3_p2(self):
        g = fam("cycle:3+path:2")
        assert (g.n, g.edge_count()) == (5, 4)

    def test_overflow(self):
        with pytest.raises(FamilyError):
            disjoint_union(fam("empty:40"), fam("empty:30"))


class TestComponents:
    def test_c5_one_block(self):
        assert connected_components(fam("cycle:5")) == [0b11111]

    def test_empty3_singletons(self):
        assert connected_components(fam("empty:3")) == [1, 2, 4]

    def test_c3_p2_blocks(self):
        blocks = connected_components(fam("cycle:3+path:2"))
        assert sorted(b.bit_count() for b in blocks) == [2, 3]

    def test_within_c4(self):
        assert components_within(fam("cycle:4"), 0b0101) == [0b0001, 0b0100]

    def test_within_p4_all(self):
        g = fam("path:4")
        assert components_within(g, g.full_mask) == [0b1111]

    def test_within_k4(self):
        assert components_within(fam("complete:4"), 0b1110) == [0b1110]

    @settings(max_examples=60)
    @given(graphs())
    def test_blocks_partition_and_separate(self, g):
        blocks = connected_components(g)
        assert sum(blocks) == g.full_mask  # disjoint cover
        for a, b in itertools.combinations(blocks, 2):
            assert a & b == 0
            for u in bits(a):
                assert g.adj[u] & b == 0

    @settings(max_examples=40)
    @given(graphs())
    def test_matches_networkx(self, g):
        want = sorted(mask_of(c) for c in nx.connected_components(to_networkx(g)))
        assert sorted(connected_components(g)) == want


class TestModules:
    def test_k3_all_adjacent_pairs(self):
        mods = find_modules_order2(fam("complete:3"))
        assert mods == [(0, 1, True), (0, 2, True), (1, 2, True)]

    def test_k22_two_similar_pairs(self):
        mods = find_modules_order2(fam("biclique:2,2"))
        assert mods == [(0, 1, False), (2, 3, False)]
        assert not has_adjacent_module_order2(fam("biclique:2,2"))

    def test_p4_none(self):
        assert find_modules_order2(fam("path:4")) == []

    def test_brute_force_all_graphs_up_to_6(self):
        for n in range(1, 7):
            for mask in range(1 << (n * (n - 1) // 2)):
                g = graph_from_edge_mask(n, mask)
                nbrs = [set(bits(row)) for row in g.adj]
                want = [(u, v, v in nbrs[u])
                        for u in range(n) for v in range(u + 1, n)
                        if nbrs[u] - {v} == nbrs[v] - {u}]
                assert find_modules_order2(g) == want


class TestPredicates:
    @pytest.mark.parametrize("text,expect", [
        ("path:5", True), ("cycle:4", False), ("marytree:2,7", True),
        ("complete:1", True), ("biclique:4,1", True), ("cycle:3+path:2", False),
    ])
    def test_is_tree(self, text, expect):
        assert is_tree(fam(text)) == expect

    @settings(max_examples=40)
    @given(graphs())
    def test_is_tree_matches_networkx(self, g):
        assert is_tree(g) == nx.is_tree(to_networkx(g))

    def test_cycle_and_path_shapes(self):
        assert is_cycle_graph(fam("cycle:7"))
        assert not is_cycle_graph(fam("path:7"))
        assert is_path_graph(fam("path:1"))
        assert is_path_graph(fam("path:2"))
        assert not is_path_graph(fam("biclique:3,1"))
        assert not is_cycle_graph(fam("cycle:3+cycle:4"))

    def test_connected(self):
        assert is_connected(fam("wheel:6"))
        assert not is_connected(fam("empty:2"))


class TestEdgeListFormat:
    def test_p2(self):
        g = parse_graph("2 1\n0 1")
        assert g.edges() == [(0, 1)]

    def test_k3(self):
        g = parse_graph("3 3\n0 1\n1 2\n0 2")
        assert g.edge_count() == 3

    @pytest.mark.parametrize("text,fragment", [
        ("2 1\n0 0", "loop"),
        ("2 2\n0 1\n1 0", "duplicate"),
        ("2 1\n0 2", "out of range"),
        ("2", "header"),
        ("x y\n", "header"),
        ("2 2\n0 1", "promises"),
        ("", "empty"),
        ("70 0", "outside"),
    ])
    def test_rejects(self, text, fragment):
        with pytest.raises(GraphFormatError, match=fragment):
            parse_graph(text)

    @settings(max_examples=80)
    @given(graphs())
    def test_roundtrip(self, g):
        assert parse_graph(serialize_graph(g)) == g

    def test_isolated_vertices_survive(self):
        g = graph_from_edges(4, [(1, 2)])
        assert parse_graph(serialize_graph(g)) == g
