import random

import networkx as nx
from corpus import family_graphs

from steinerwiener import (
    all_trees,
    canonical_form,
    complete_graph,
    enumerate_family,
    is_isomorphic,
    path_graph,
    random_block_graph,
    star_graph,
    trees_with_degree_sequence,
)
from steinerwiener.graph import relabel


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_tree_counts():
    # number of unlabeled trees on n vertices
    assert [len(all_trees(n)) for n in range(1, 10)] == [1, 1, 1, 2, 3, 6, 11, 23, 47]


def test_small_cases():
    assert canonical_form(complete_graph(1)) == canonical_form(complete_graph(1))
    assert canonical_form(complete_graph(4)) != canonical_form(star_graph(4))
    assert is_isomorphic(path_graph(4), relabel(path_graph(4), [2, 0, 3, 1]))
    assert not is_isomorphic(path_graph(4), star_graph(4))


def test_canonical_form_invariant_under_relabeling():
    rng = random.Random(11)
    for _ in range(100):
        g = random_block_graph(rng, max_n=10)
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(relabel(g, perm)) == canonical_form(g)


def test_canonical_form_agrees_with_networkx_isomorphism():
    graphs = list(family_graphs())
    by_form = {}
    for g in graphs:
        by_form.setdefault(canonical_form(g), []).append(g)
    # every family member is its own class
    assert len(by_form) == len(graphs)
    rng = random.Random(5)
    pairs = [(rng.choice(graphs), rng.choice(graphs)) for _ in range(400)]
    for g, h in pairs:
        same = g.n == h.n and nx.is_isomorphic(_nx(g), _nx(h))
        assert is_isomorphic(g, h) == same


def test_family_counts_match_networkx_dedupe():
    for seq in [(2, 2, 2, 2, 2), (3, 2, 2, 2), (3, 3, 2), (4, 3, 2)]:
        fam = enumerate_family(seq)
        for i, g in enumerate(fam):
            for h in fam[i + 1 :]:
                assert not nx.is_isomorphic(_nx(g), _nx(h))


def test_trees_with_degree_sequence():
    trees = trees_with_degree_sequence([3, 2, 2, 1, 1, 1])
    assert len(trees) == 2
    assert all(sorted(t.degrees(), reverse=True) == [3, 2, 2, 1, 1, 1] for t in trees)
