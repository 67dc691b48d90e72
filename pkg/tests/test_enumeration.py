import networkx as nx
import pytest

from locdist.enumeration import enumerate_connected_graphs, enumerate_trees
from locdist.graph import SizeCapError, write_graph6
from locdist.symmetry import canonical_form
from oracles import brute_connected_graph_count, brute_tree_count, to_nx

GRAPH_COUNTS = [1, 1, 2, 6, 21, 112, 853]
TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47]


@pytest.mark.parametrize("n", range(1, 6))
def test_graph_counts_match_mask_enumeration(n):
    assert sum(1 for _ in enumerate_connected_graphs(n)) == brute_connected_graph_count(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_tree_counts_match_prufer_enumeration(n):
    assert sum(1 for _ in enumerate_trees(n)) == brute_tree_count(n)


def test_counts_match_known_sequences():
    assert [sum(1 for _ in enumerate_connected_graphs(n)) for n in range(1, 8)] == GRAPH_COUNTS
    assert [sum(1 for _ in enumerate_trees(n)) for n in range(1, 10)] == TREE_COUNTS


def test_examples():
    assert [write_graph6(g) for g in enumerate_connected_graphs(1)] == ["@"]
    assert sum(1 for _ in enumerate_trees(2)) == 1
    trees4 = [to_nx(t) for t in enumerate_trees(4)]
    assert sorted(max(d for _, d in t.degree()) for t in trees4) == [2, 3]


def test_six_vertex_graphs_pairwise_non_isomorphic():
    graphs = [to_nx(g) for g in enumerate_connected_graphs(6)]
    for i, a in enumerate(graphs):
        for b in graphs[i + 1:]:
            if sorted(d for _, d in a.degree()) == sorted(d for _, d in b.degree()):
                assert not nx.is_isomorphic(a, b)


def test_streams_are_canonical_and_sorted():
    for gen, n in [(enumerate_connected_graphs, 6), (enumerate_trees, 8)]:
        graphs = list(gen(n))
        keys = [write_graph6(g) for g in graphs]
        assert keys == sorted(keys)
        assert all(canonical_form(g).decode() == k for g, k in zip(graphs, keys))
        assert [write_graph6(g) for g in gen(n)] == keys


def test_trees_are_trees():
    for n in range(1, 10):
        for t in enumerate_trees(n):
            assert t.is_tree()


def test_size_limits():
    with pytest.raises(SizeCapError):
        next(enumerate_connected_graphs(8))
    with pytest.raises(SizeCapError):
        next(enumerate_trees(11))
    with pytest.raises(SizeCapError):
        next(enumerate_trees(0))
