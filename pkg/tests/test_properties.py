from hypothesis import given, settings
from hypothesis import strategies as st

from steinerwiener import (
    attach_block,
    binomial,
    canonical_form,
    complete_graph,
    decompose,
    hamming_labeling,
    steiner_betweenness_blockgraph,
    steiner_distance,
    steiner_distance_hamming,
    sw3_edge,
    sw_block_decomposition,
    sw_bruteforce,
    sw_hamming,
    sw_vertex_decomposition,
    wiener_edge,
)
from steinerwiener.graph import relabel


@st.composite
def block_graphs(draw, max_n=9, max_block=5):
    g = complete_graph(draw(st.integers(2, max_block)))
    while g.n < max_n and draw(st.booleans()):
        order = draw(st.integers(2, min(max_block, max_n - g.n + 1)))
        g = attach_block(g, draw(st.integers(0, g.n - 1)), order)
    return g


@settings(max_examples=60, deadline=None)
@given(block_graphs())
def test_four_way_agreement(g):
    for k in range(2, min(g.n, 6) + 1):
        ref = sw_bruteforce(g, k)
        assert sw_block_decomposition(g, k) == ref
        assert sw_vertex_decomposition(g, k) == ref
        assert sw_hamming(g, k) == ref


@settings(max_examples=60, deadline=None)
@given(block_graphs())
def test_edge_formulas(g):
    assert wiener_edge(g) == sw_bruteforce(g, 2)
    if g.n >= 3:
        assert sw3_edge(g) == sw_bruteforce(g, 3)


@settings(max_examples=40, deadline=None)
@given(block_graphs(max_n=8), st.data())
def test_hamming_distance_matches_oracle(g, data):
    lab = hamming_labeling(g)
    s = data.draw(st.sets(st.integers(0, g.n - 1), min_size=2, max_size=min(5, g.n)))
    assert steiner_distance_hamming(lab, s) == steiner_distance(g, s)


@settings(max_examples=40, deadline=None)
@given(block_graphs(), st.randoms(use_true_random=False))
def test_invariant_under_relabeling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert canonical_form(h) == canonical_form(g)
    for k in range(2, g.n + 1):
        assert sw_vertex_decomposition(h, k) == sw_vertex_decomposition(g, k)


@settings(max_examples=40, deadline=None)
@given(block_graphs())
def test_betweenness_sums_to_inner_count(g):
    # sum of B_k over cut vertices is the inner-vertex part of SW_k
    for k in range(2, g.n):
        total = sum(steiner_betweenness_blockgraph(g, v, k) for v in decompose(g).cut_vertices)
        assert total == sw_vertex_decomposition(g, k) - (k - 1) * binomial(g.n, k)
