import random

import pytest
from hypothesis import given, settings, strategies as st

from locdist.chromatics import (
    ColorPartition,
    all_partitions,
    chromatic_number,
    color_code,
    distinguishing_chromatic_number,
    distinguishing_colorings,
    invariant_report,
    is_distinguishing,
    is_locating,
    is_proper,
    is_resolving,
    locating_chromatic_number,
    locating_colorings,
    metric_dimension,
    metric_representation,
    proper_colorings,
)
from locdist.enumeration import enumerate_connected_graphs
from locdist.graph import SizeCapError, complete, complete_multipartite, cycle, path, spider
from locdist.symmetry import automorphisms
from oracles import (
    brute_chi,
    brute_chi_D,
    brute_chi_L,
    brute_dim,
    brute_distinguishing,
    brute_locating,
    surjective_colorings,
)
from test_graph import connected_graphs

P7_CLASSES = [(0, 4), (1, 3, 5), (2, 6)]


@pytest.fixture
def p7_partition():
    return ColorPartition.from_classes(P7_CLASSES, 7)


def test_partition_validation():
    with pytest.raises(ValueError):
        ColorPartition((1, 3, 3))
    with pytest.raises(ValueError):
        ColorPartition.from_classes([(0, 1), (1, 2)])
    c = ColorPartition((2, 1, 2))
    assert c.k == 2 and c.classes == ((1,), (0, 2)) and c.canonical().assignment == (1, 2, 1)


def test_p7_codes(p7_partition):
    g = path(7)
    assert color_code(g, p7_partition, 1) == (1, 0, 1)
    assert color_code(g, p7_partition, 3) == (1, 0, 1)


def test_own_color_entry_is_zero():
    rng = random.Random(1)
    for g in [path(6), cycle(5), complete(4), spider(3, 4)]:
        for _ in range(10):
            colors = [rng.randint(1, 3) for _ in range(g.n)]
            colors[0], colors[1], colors[2] = 1, 2, 3
            for v in range(g.n):
                assert color_code(g, colors, v)[colors[v] - 1] == 0


def test_proper_examples(p7_partition):
    assert is_proper(path(4), [1, 2, 1, 2])
    assert not is_proper(complete(3), [1, 1, 2])
    assert is_proper(path(7), p7_partition)


def test_locating_examples(p7_partition):
    assert not is_locating(path(7), p7_partition)
    assert is_locating(complete(3), [1, 2, 3])
    # the two colour-1 vertices of P4 under 1,2,1,2 have codes (0,1) and (0,1)
    assert brute_locating(path(4), (1, 2, 1, 2)) is False
    assert not is_locating(path(4), [1, 2, 1, 2])


def test_distinguishing_examples(p7_partition):
    assert is_distinguishing(path(7), p7_partition)
    # brute force over Aut(P4) = {id, reversal} decides the truth value
    assert brute_distinguishing(path(4), (1, 2, 1, 2)) is True
    assert is_distinguishing(path(4), [1, 2, 1, 2])
    rigid = next(g for g in enumerate_connected_graphs(6) if automorphisms(g).order == 1)
    for k in (3, 4):
        for c in proper_colorings(rigid, k):
            assert is_distinguishing(rigid, c)


def test_predicates_match_oracles(small_graphs):
    for g in small_graphs:
        for k in range(1, min(g.n, 4) + 1):
            for a in surjective_colorings(g.n, k):
                assert is_locating(g, a) == brute_locating(g, a)
                assert is_distinguishing(g, a) == brute_distinguishing(g, a)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_solver_values_small(k):
    assert chromatic_number(path(2 * k + 1))[0] == 2
    assert locating_chromatic_number(path(2 * k + 1))[0] == 3
    assert metric_dimension(path(2 * k + 1))[0] == 1


def test_solver_examples():
    assert chromatic_number(complete(4))[0] == 4
    assert chromatic_number(cycle(5))[0] == 3
    assert locating_chromatic_number(path(7))[0] == 3
    assert locating_chromatic_number(complete_multipartite([1, 2]))[0] == 3
    assert locating_chromatic_number(cycle(4))[0] == brute_chi_L(cycle(4)) == 4
    assert distinguishing_chromatic_number(path(7))[0] == 3
    assert distinguishing_chromatic_number(complete_multipartite([1, 2]))[0] == 3
    assert distinguishing_chromatic_number(path(4))[0] == brute_chi_D(path(4)) == 2
    assert metric_dimension(complete(4))[0] == brute_dim(complete(4)) == 3
    assert metric_dimension(cycle(5))[0] == brute_dim(cycle(5)) == 2


def test_solvers_match_brute_force(small_graphs):
    for g in small_graphs:
        assert chromatic_number(g)[0] == brute_chi(g)
        assert locating_chromatic_number(g)[0] == brute_chi_L(g)
        assert distinguishing_chromatic_number(g)[0] == brute_chi_D(g)
        assert metric_dimension(g)[0] == brute_dim(g)


def test_six_vertex_spot_check():
    rng = random.Random(6)
    graphs = list(enumerate_connected_graphs(6))
    for g in rng.sample(graphs, 12):
        assert locating_chromatic_number(g)[0] == brute_chi_L(g)
        assert distinguishing_chromatic_number(g)[0] == brute_chi_D(g)


def test_witnesses_revalidate(graphs_upto_6):
    for g in graphs_upto_6:
        r = invariant_report(g)
        w = r.witnesses
        assert is_proper(g, w["chi"]) and max(w["chi"]) == r.chi
        assert is_locating(g, w["chi_L"]) and max(w["chi_L"]) == r.chi_L
        assert is_distinguishing(g, w["chi_D"]) and max(w["chi_D"]) == r.chi_D
        assert is_resolving(g, w["dim"]) and len(w["dim"]) == r.dim
        assert r.chi <= r.chi_D <= r.chi_L <= r.n and r.dim <= r.n - 1


def test_witness_is_lexicographically_least():
    for g in list(enumerate_connected_graphs(5))[:10]:
        k, w = locating_chromatic_number(g)
        least = min(a for a in surjective_colorings(g.n, k) if brute_locating(g, a) and
                    ColorPartition(a).canonical().assignment == a)
        assert w.assignment == least


def test_generators_agree_with_filters(small_graphs):
    for g in small_graphs[:15]:
        for k in range(1, g.n + 1):
            proper = list(proper_colorings(g, k))
            assert [c for c in proper if is_locating(g, c)] == list(locating_colorings(g, k))
            assert [c for c in proper if is_distinguishing(g, c)] == list(distinguishing_colorings(g, k))


def test_all_partitions_counts_bell_numbers():
    assert [sum(1 for _ in all_partitions(n)) for n in range(1, 7)] == [1, 2, 5, 15, 52, 203]


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=7), st.randoms(use_true_random=False))
def test_predicates_invariant_under_color_relabeling(g, rnd):
    colors = [rnd.randint(1, 3) for _ in range(g.n)]
    used = sorted(set(colors))
    compact = [used.index(c) + 1 for c in colors]
    perm = list(range(1, len(used) + 1))
    rnd.shuffle(perm)
    relabeled = [perm[c - 1] for c in compact]
    assert is_locating(g, compact) == is_locating(g, relabeled)
    assert is_distinguishing(g, compact) == is_distinguishing(g, relabeled)


@settings(max_examples=30, deadline=None)
@given(connected_graphs(max_n=8))
def test_locating_implies_distinguishing_on_random_graphs(g):
    k, w = locating_chromatic_number(g)
    assert is_distinguishing(g, w)
    assert distinguishing_chromatic_number(g)[0] <= k


def test_metric_representation_examples():
    assert metric_representation(path(4), [0], 3) == (3,)
    assert metric_representation(cycle(5), [0, 1], 3) == (2, 2)
    g = spider(3, 4)
    W = [2, 5, 7]
    for i, w in enumerate(W):
        assert metric_representation(g, W, w)[i] == 0


def test_resolving_examples():
    assert is_resolving(path(7), [0])
    assert not is_resolving(cycle(5), [0])
    for g in [cycle(6), complete(4), spider(3, 3)]:
        assert is_resolving(g, list(range(g.n)))


def test_size_cap():
    big = path(17)
    for solver in (chromatic_number, locating_chromatic_number, distinguishing_chromatic_number,
                   metric_dimension):
        with pytest.raises(SizeCapError):
            solver(big)
    assert locating_chromatic_number(big, cap=17)[0] == 3
