import random
from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest
from corpus import random_graphs

from steinerwiener import (
    GuardExceeded,
    OracleLimits,
    betweenness_bruteforce,
    complete_graph,
    cycle_graph,
    enumerate_steiner_trees,
    n_k,
    path_graph,
    random_block_graph,
    spanning_tree_count,
    star_graph,
    steiner_distance,
    steiner_distance_table,
    sw_bruteforce,
    triangle_bridge_k4,
    windmill_graph,
)
from steinerwiener.decompositions import vertex_deletion_profile
from steinerwiener.graph import decompose, geodesic_distance
from steinerwiener.oracle import betweenness_all_bruteforce, iter_steiner_trees


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_steiner_distance_examples():
    assert steiner_distance(complete_graph(3), {0, 1, 2}) == 2
    assert steiner_distance(triangle_bridge_k4(), {0, 1, 4, 5}) == 5
    assert steiner_distance(path_graph(4), {0, 3}) == 3
    assert steiner_distance(path_graph(4), {2}) == 0


def test_steiner_distance_guards():
    with pytest.raises(GuardExceeded):
        steiner_distance(path_graph(12), range(10), OracleLimits(max_terminals=8))
    with pytest.raises(GuardExceeded):
        steiner_distance(path_graph(25), {0, 1})
    with pytest.raises(ValueError):
        steiner_distance(path_graph(3), set())


def test_sw_bruteforce_examples():
    assert sw_bruteforce(path_graph(3), 3) == 2
    assert sw_bruteforce(windmill_graph(3, 2), 2) == 14
    assert sw_bruteforce(path_graph(4), 3) == 10
    assert sw_bruteforce(triangle_bridge_k4(), 2) == 38


def test_sw_bruteforce_methods_agree_on_non_block_graphs():
    # the oracle is graph-agnostic
    for g in (cycle_graph(5), cycle_graph(6)):
        for k in range(2, g.n + 1):
            assert sw_bruteforce(g, k, method="table") == sw_bruteforce(g, k, method="dreyfus-wagner")


def test_sw_bruteforce_guard():
    with pytest.raises(GuardExceeded):
        sw_bruteforce(path_graph(10), 5, OracleLimits(max_subsets=100))
    with pytest.raises(ValueError):
        sw_bruteforce(path_graph(4), 1)


def test_enumerate_steiner_trees_examples():
    r = enumerate_steiner_trees(complete_graph(3), {0, 1, 2})
    assert (r.distance, r.tree_count, r.inner_counts) == (2, 3, (0, 0, 0))
    r = enumerate_steiner_trees(path_graph(3), {0, 2})
    assert (r.distance, r.tree_count, r.inner_counts[1]) == (2, 1, 1)
    bowtie = windmill_graph(3, 2)  # center 0, triangles {0,1,2} and {0,3,4}
    r = enumerate_steiner_trees(bowtie, {1, 2, 3})
    assert r.distance == 3 and r.inner_counts[0] == r.tree_count


def test_tree_counts_match_explicit_enumeration():
    rng = random.Random(3)
    graphs = [cycle_graph(5), complete_graph(5)] + [random_block_graph(rng, max_n=7) for _ in range(15)]
    for g in graphs:
        for k in (2, 3, 4):
            for s in combinations(range(g.n), k):
                r = enumerate_steiner_trees(g, s)
                trees = list(iter_steiner_trees(g, s))
                assert len(trees) == r.tree_count
                assert all(len(t) == r.distance for t in trees)
                for v in range(g.n):
                    inner = sum(any(v in e for e in t) for t in trees) if v not in s else 0
                    assert inner == r.inner_counts[v]


def test_spanning_tree_count_matches_networkx():
    for g in (complete_graph(5), cycle_graph(6), windmill_graph(3, 3), triangle_bridge_k4()):
        expected = round(nx.number_of_spanning_trees(_nx(g)))
        assert spanning_tree_count(g, range(g.n)) == expected
    assert spanning_tree_count(complete_graph(6), range(6)) == 6**4


def test_steiner_distance_table_matches_dreyfus_wagner():
    g = triangle_bridge_k4()
    table = steiner_distance_table(g)
    for k in range(1, 6):
        for s in combinations(range(g.n), k):
            mask = sum(1 << v for v in s)
            assert table[mask] == steiner_distance(g, s)


def test_betweenness_examples():
    assert betweenness_bruteforce(path_graph(3), 1, 2) == 1
    for k in (2, 3, 4):
        assert betweenness_bruteforce(triangle_bridge_k4(), 0, k) == 0
    assert betweenness_bruteforce(windmill_graph(3, 2), 0, 2) == 4


def test_betweenness_non_block_graph_is_fractional():
    # on C4 each antipodal pair has two geodesics
    assert betweenness_bruteforce(cycle_graph(4), 0, 2) == Fraction(1, 2)
    assert betweenness_all_bruteforce(cycle_graph(4), 2) == [Fraction(1, 2)] * 4


def test_pairs_equal_geodesic_and_lower_bound():
    for g in random_graphs()[:40]:
        for u, v in combinations(range(g.n), 2):
            assert steiner_distance(g, {u, v}) == geodesic_distance(g, u, v)
        for s in combinations(range(g.n), min(3, g.n)):
            r = enumerate_steiner_trees(g, s)
            assert r.distance >= len(s) - 1
            assert (r.distance == len(s) - 1) == (sum(r.inner_counts) == 0)


def test_cut_vertex_membership_is_all_or_nothing():
    for g in random_graphs()[:60]:
        cuts = decompose(g).cut_vertices
        for k in range(2, min(g.n, 4) + 1):
            for s in combinations(range(g.n), k):
                r = enumerate_steiner_trees(g, s)
                for v in cuts:
                    assert r.inner_counts[v] in (0, r.tree_count)


def test_betweenness_is_n_k_of_vertex_deletion():
    for g in random_graphs()[:60]:
        for v in decompose(g).cut_vertices:
            for k in range(2, min(5, g.n - 1) + 1):
                assert betweenness_bruteforce(g, v, k) == n_k(vertex_deletion_profile(g, v), k)


def test_adding_a_terminal_never_shrinks_the_tree():
    for g in random_graphs()[:30]:
        for s in combinations(range(g.n), min(3, g.n - 1)):
            d = steiner_distance(g, s)
            for w in set(range(g.n)) - set(s):
                assert steiner_distance(g, set(s) | {w}) >= d


def test_star_oracle():
    assert sw_bruteforce(star_graph(5), 3) == 24
