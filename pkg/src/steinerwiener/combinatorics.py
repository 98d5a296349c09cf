"""Exact binomials and the component-profile sums N_k and N'_k.

For a disconnected graph with component orders ``n_1..n_p``, ``N_k`` counts
the k-subsets of vertices that meet at least two components, and ``N'_k``
weights each such subset by (number of components met - 1). Both are given
twice: as the literal sum over compositions of ``k`` and by a closed identity
that is cheap to evaluate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact integer, with C(n, 0) = 1 and C(n, k) = 0 for k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial({n}, {k}) needs nonnegative arguments")
    return math.comb(n, k)


@dataclass(frozen=True)
class ComponentProfile:
    """Multiset of component orders, stored non-increasing.

    Zero entries are dropped on construction, so padding a profile with empty
    components does not change it.
    """

    sizes: tuple[int, ...]

    def __init__(self, sizes: Iterable[int]):
        vals = [int(s) for s in sizes]
        if any(s < 0 for s in vals):
            raise ValueError("component sizes must be nonnegative")
        vals = sorted((s for s in vals if s), reverse=True)
        if not vals:
            raise ValueError("a profile needs at least one nonempty component")
        object.__setattr__(self, "sizes", tuple(vals))

    @property
    def p(self) -> int:
        return len(self.sizes)

    @property
    def total(self) -> int:
        return sum(self.sizes)


def _as_profile(profile: ComponentProfile | Iterable[int]) -> ComponentProfile:
    return profile if isinstance(profile, ComponentProfile) else ComponentProfile(profile)


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")


def compositions(k: int, sizes: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All ``(l_1..l_p)`` with ``sum == k`` and ``0 <= l_i <= min(sizes[i], k-1)``.

    Parts exceeding a component's order are skipped since their binomial
    factor vanishes.
    """
    p = len(sizes)
    suffix = [0] * (p + 1)
    for i in range(p - 1, -1, -1):
        suffix[i] = suffix[i + 1] + min(sizes[i], k - 1)
    parts = [0] * p

    def rec(i: int, left: int) -> Iterator[tuple[int, ...]]:
        if i == p:
            if left == 0:
                yield tuple(parts)
            return
        if left > suffix[i]:
            return
        for li in range(min(left, sizes[i], k - 1) + 1):
            parts[i] = li
            yield from rec(i + 1, left - li)
        parts[i] = 0

    yield from rec(0, k)


def _weighted_sum(profile: ComponentProfile, k: int, weighted: bool) -> int:
    total = 0
    for parts in compositions(k, profile.sizes):
        term = 1
        for s, li in zip(profile.sizes, parts):
            term *= binomial(s, li)
        if weighted:
            term *= sum(1 for li in parts if li) - 1
        total += term
    return total


def n_k_direct(profile: ComponentProfile | Iterable[int], k: int) -> int:
    """N_k by enumerating compositions of ``k`` over the components."""
    _check_k(k)
    return _weighted_sum(_as_profile(profile), k, weighted=False)


def n_k(profile: ComponentProfile | Iterable[int], k: int) -> int:
    """N_k = C(total, k) - sum_i C(n_i, k)."""
    _check_k(k)
    prof = _as_profile(profile)
    return binomial(prof.total, k) - sum(binomial(s, k) for s in prof.sizes)


def n_prime_k_direct(profile: ComponentProfile | Iterable[int], k: int) -> int:
    """N'_k by enumerating compositions, each weighted by (#nonzero parts - 1)."""
    _check_k(k)
    prof = _as_profile(profile)
    if prof.p == 1:
        return 0
    return _weighted_sum(prof, k, weighted=True)


def n_prime_k(profile: ComponentProfile | Iterable[int], k: int) -> int:
    """N'_k = sum_i [C(T, k) - C(T - n_i, k)] - C(T, k) with T the total order.

    The bracket counts k-subsets meeting component i; summing over i counts
    every subset once per component it meets.
    """
    _check_k(k)
    prof = _as_profile(profile)
    if prof.p == 1:
        return 0
    whole = binomial(prof.total, k)
    return sum(whole - binomial(prof.total - s, k) for s in prof.sizes) - whole
