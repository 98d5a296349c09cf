from itertools import combinations_with_replacement, permutations, product

import pytest
from corpus import corpus

from steinerwiener import (
    BlockOrderSequence,
    binomial,
    complete_graph,
    decompose,
    path_graph,
    path_like_graph,
    star_graph,
    star_like_graph,
    sw_bruteforce,
    sw_full,
    sw_n_minus_1,
    sw_path_like,
    sw_star,
    sw_star_like,
    sw_windmill,
    triangle_bridge_k4,
    windmill_graph,
)
from steinerwiener.closed_forms import path_like_betweenness


def _sequences(max_n, max_b=6):
    for t in range(1, max_n):
        for seq in combinations_with_replacement(range(max_b, 1, -1), t):
            if sum(b - 1 for b in seq) + 1 <= max_n:
                yield seq


def test_sequence_validation():
    assert BlockOrderSequence([2, 4, 3]).orders == (4, 3, 2)
    assert BlockOrderSequence([3, 3]).n_implied == 5
    with pytest.raises(ValueError):
        BlockOrderSequence([3, 1])
    with pytest.raises(ValueError):
        BlockOrderSequence([])


def test_star_like_examples():
    assert sw_star_like([3, 3], 2) == 14
    assert sw_star_like([2, 2, 2, 2], 3) == 24
    assert sw_star_like([4], 3) == 8
    with pytest.raises(ValueError):
        sw_star_like([3, 3], 6)


def test_windmill_examples():
    assert sw_windmill(3, 2, 2) == 14 == sw_bruteforce(windmill_graph(3, 2), 2)
    assert sw_windmill(3, 2, 3) == 24 == sw_bruteforce(windmill_graph(3, 2), 3)
    for t in range(2, 6):
        n = t + 1
        for k in range(2, n + 1):
            assert sw_windmill(2, t, k) == (n - 1) * binomial(n - 1, k - 1) == sw_star(n, k)
    with pytest.raises(ValueError):
        sw_windmill(1, 3, 2)


def test_path_like_examples():
    assert sw_path_like([2, 2], 2) == 4 == sw_bruteforce(path_graph(3), 2)
    assert sw_path_like([3, 3], 2) == 14
    assert sw_path_like([3, 3], 2, variant="literal") == 12
    assert sw_path_like([2, 2, 2], 2) == 10
    with pytest.raises(ValueError):
        sw_path_like([3], 2)
    with pytest.raises(ValueError):
        sw_path_like([3, 3], 5)
    with pytest.raises(ValueError):
        path_like_betweenness([3, 3], 1, 2, variant="other")


def test_n_minus_1_examples():
    assert sw_n_minus_1(5, 4) == 16 == sw_bruteforce(windmill_graph(3, 2), 4)
    assert sw_n_minus_1(4, 2) == 10 == sw_bruteforce(path_graph(4), 3)
    assert sw_n_minus_1(4, 4) == 8 == sw_bruteforce(complete_graph(4), 3)


def test_full_examples():
    assert sw_full(1) == 0
    assert sw_full(5) == 4
    assert sw_full(7) == 6 == sw_bruteforce(triangle_bridge_k4(), 7)


def test_star_like_matches_oracle():
    for seq in _sequences(10):
        g = star_like_graph(seq)
        for k in range(2, min(6, g.n) + 1):
            assert sw_star_like(seq, k) == sw_bruteforce(g, k)


def test_star_formula():
    for n in range(2, 9):
        for k in range(2, n + 1):
            assert sw_star(n, k) == sw_bruteforce(star_graph(n), k)


def test_windmill_equals_star_like_grid():
    for r, t in product(range(2, 6), range(2, 5)):
        n = t * (r - 1) + 1
        for k in range(2, n + 1):
            assert sw_windmill(r, t, k) == sw_star_like([r] * t, k)


def test_path_like_matches_oracle_in_every_order():
    seen = 0
    for seq in _sequences(10):
        if len(seq) < 2:
            continue
        for orders in set(permutations(seq)):
            g = path_like_graph(orders)
            for k in range(2, g.n):
                assert sw_path_like(orders, k) == sw_bruteforce(g, k)
                seen += 1
    assert seen > 500


def test_literal_path_like_differs_exactly_by_two_on_bowtie():
    assert sw_path_like([3, 3], 2) - sw_path_like([3, 3], 2, variant="literal") == 2


def test_n_minus_1_on_corpus():
    for g in corpus():
        if g.n >= 3:
            p = len(decompose(g).pendant_vertices)
            assert sw_n_minus_1(g.n, p) == sw_bruteforce(g, g.n - 1)


def test_binomial_identity_chain():
    # (n-1) C(n-1, k-1) = C(n-1, k) + (k-1) C(n, k): every k-set either avoids
    # the universal vertex or contains it
    for n in range(2, 31):
        for k in range(2, n + 1):
            assert (n - 1) * binomial(n - 1, k - 1) == binomial(n - 1, k) + (k - 1) * binomial(n, k)
