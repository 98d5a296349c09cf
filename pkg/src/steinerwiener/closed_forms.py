"""Closed-form Steiner k-Wiener indices for star-like, windmill, path-like and
near-complete cases."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .combinatorics import binomial


@dataclass(frozen=True)
class BlockOrderSequence:
    """Block orders b_1 >= ... >= b_t, each at least 2."""

    orders: tuple[int, ...]

    def __init__(self, orders: Iterable[int]):
        vals = tuple(sorted((int(b) for b in orders), reverse=True))
        if not vals or vals[-1] < 2:
            raise ValueError("block orders must be at least 2")
        object.__setattr__(self, "orders", vals)

    @property
    def t(self) -> int:
        return len(self.orders)

    @property
    def n_implied(self) -> int:
        return sum(b - 1 for b in self.orders) + 1


def _as_sequence(seq: BlockOrderSequence | Iterable[int]) -> BlockOrderSequence:
    return seq if isinstance(seq, BlockOrderSequence) else BlockOrderSequence(seq)


def _check_range(k: int, lo: int, hi: int) -> None:
    if not lo <= k <= hi:
        raise ValueError(f"k must lie in {lo}..{hi}, got {k}")


def sw_star_like(seq: BlockOrderSequence | Iterable[int], k: int) -> int:
    """(n-1) C(n-1, k-1) - sum_i C(b_i - 1, k)."""
    s = _as_sequence(seq)
    n = s.n_implied
    _check_range(k, 2, n)
    return (n - 1) * binomial(n - 1, k - 1) - sum(binomial(b - 1, k) for b in s.orders)


def sw_windmill(r: int, t: int, k: int) -> int:
    """(n-1) C(n-1, k-1) - t C(r-1, k) for Wd(r, t), n = t(r-1) + 1."""
    if r < 2 or t < 2:
        raise ValueError("windmill needs r >= 2 and t >= 2")
    n = t * (r - 1) + 1
    _check_range(k, 2, n)
    return (n - 1) * binomial(n - 1, k - 1) - t * binomial(r - 1, k)


def sw_star(n: int, k: int) -> int:
    """Star on n vertices: (n-1) C(n-1, k-1)."""
    _check_range(k, 2, n)
    return (n - 1) * binomial(n - 1, k - 1)


def path_like_betweenness(orders_end_to_end: Sequence[int], i: int, k: int, variant: str = "corrected") -> int:
    """Betweenness of the i-th cut vertex (1-based) of a path-like block graph.

    The cut vertex v_i is inner exactly when S fits neither on its left
    (sum_{j<=i} b_j - i vertices besides v_i) nor on its right
    (n + i - 1 - sum_{j<=i} b_j vertices besides v_i). ``variant="literal"``
    keeps v_i in the right-hand count, which overcounts.
    """
    orders = list(orders_end_to_end)
    n = sum(b - 1 for b in orders) + 1
    prefix = sum(orders[:i])
    left = prefix - i
    if variant == "corrected":
        right = n + i - 1 - prefix
    elif variant == "literal":
        right = n + i - prefix
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return binomial(n - 1, k) - binomial(left, k) - binomial(right, k)


def sw_path_like(orders_end_to_end: Sequence[int], k: int, variant: str = "corrected") -> int:
    """SW_k of the path-like block graph with blocks in the given end-to-end order.

    ``variant="corrected"`` is the true value; ``"literal"`` reproduces the
    published formula, which counts the cut vertex on the right side too
    (it gives 12 instead of 14 for two triangles, k = 2).
    """
    orders = list(orders_end_to_end)
    if len(orders) < 2 or min(orders) < 2:
        raise ValueError("path-like graphs need at least two blocks of order >= 2")
    n = sum(b - 1 for b in orders) + 1
    _check_range(k, 2, n - 1)
    t = len(orders)
    inner = sum(path_like_betweenness(orders, i, k, variant) for i in range(1, t))
    return (k - 1) * binomial(n, k) + inner


def sw_n_minus_1(n: int, p: int) -> int:
    """SW_{n-1} of a block graph of order n with p pendant vertices: n^2 - n - p."""
    if n < 2 or not 0 <= p <= n:
        raise ValueError("need n >= 2 and 0 <= p <= n")
    return n * n - n - p


def sw_full(n: int) -> int:
    """SW_n = n - 1 for any connected graph."""
    if n < 1:
        raise ValueError("n must be positive")
    return n - 1
