from itertools import combinations_with_replacement

import pytest
from hypothesis import given
from hypothesis import strategies as st

from steinerwiener import (
    ComponentProfile,
    binomial,
    compositions,
    n_k,
    n_k_direct,
    n_prime_k,
    n_prime_k_direct,
)


def test_binomial_examples():
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    assert binomial(0, 0) == 1
    assert binomial(200, 100) == 90548514656103281165404177077484163874504589675413336841320
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_n_k_examples():
    assert n_k([1, 1], 2) == 1
    assert n_k([1, 1], 3) == 0
    assert n_k([2, 3], 2) == 6 == n_k_direct([2, 3], 2)


def test_n_prime_k_examples():
    assert n_prime_k([1, 2], 3) == 1 == n_prime_k_direct([1, 2], 3)
    assert n_prime_k([2, 3], 2) == 6 == n_prime_k_direct([2, 3], 2)
    assert n_prime_k([5], 3) == 0


@pytest.mark.parametrize("fn", [n_k, n_prime_k, n_k_direct, n_prime_k_direct])
def test_k_below_two_rejected(fn):
    with pytest.raises(ValueError):
        fn([2, 2], 1)


def test_profile_normalisation():
    assert ComponentProfile([1, 0, 3, 0]).sizes == (3, 1)
    with pytest.raises(ValueError):
        ComponentProfile([0])
    with pytest.raises(ValueError):
        ComponentProfile([2, -1])


def test_compositions_bounded_by_sizes():
    comps = list(compositions(3, (2, 1)))
    assert sorted(comps) == [(2, 1)]
    assert all(sum(c) == 4 for c in compositions(4, (3, 3, 3)))


def _profiles(max_total):
    for p in range(1, max_total + 1):
        for sizes in combinations_with_replacement(range(1, max_total + 1), p):
            if sum(sizes) <= max_total:
                yield sizes


def test_identities_match_enumeration_exhaustively():
    count = 0
    for sizes in _profiles(14):
        total = sum(sizes)
        for k in range(2, total + 1):
            assert n_k(sizes, k) == n_k_direct(sizes, k)
            assert n_prime_k(sizes, k) == n_prime_k_direct(sizes, k)
            count += 1
    assert count > 1000


profiles = st.lists(st.integers(min_value=1, max_value=8), min_size=1, max_size=6)


@given(profiles, st.integers(min_value=2, max_value=12))
def test_n_prime_bounds(sizes, k):
    p = len(sizes)
    assert 0 <= n_prime_k(sizes, k) <= (p - 1) * n_k(sizes, k)


@given(profiles, st.integers(min_value=2, max_value=12))
def test_zero_component_is_a_no_op(sizes, k):
    assert n_k(sizes + [0], k) == n_k(sizes, k)
    assert n_prime_k(sizes + [0], k) == n_prime_k(sizes, k)


@given(st.lists(st.integers(min_value=1, max_value=8), min_size=2, max_size=6), st.integers(min_value=2, max_value=12))
def test_merging_never_increases_n_k(sizes, k):
    merged = [sizes[0] + sizes[1]] + sizes[2:]
    assert n_k(merged, k) <= n_k(sizes, k)
