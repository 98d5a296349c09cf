"""Exact Steiner distances by brute force, for checking everything else.

Nothing here knows about blocks: distances come from a Dreyfus-Wagner dynamic
program (one terminal set at a time) or from a table of all connected vertex
subsets (every terminal set at once), and Steiner trees are counted over the
minimum connected supersets of the terminals. All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .combinatorics import binomial
from .graph import Graph, all_pairs_distances, require_connected

INF = float("inf")


class GuardExceeded(RuntimeError):
    """The requested brute-force computation is larger than the configured limits."""


@dataclass(frozen=True)
class OracleLimits:
    max_terminals: int = 8
    max_dw_vertices: int = 20
    max_enum_vertices: int = 14
    max_subsets: int = 10**6
    table_max_vertices: int = 16


DEFAULT_LIMITS = OracleLimits()


@lru_cache(maxsize=256)
def _distances(g: Graph) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in all_pairs_distances(g))


def _terminals(g: Graph, s: Iterable[int]) -> list[int]:
    terms = sorted(set(s))
    if not terms:
        raise ValueError("terminal set is empty")
    if terms[0] < 0 or terms[-1] >= g.n:
        raise ValueError(f"terminal outside 0..{g.n - 1}")
    return terms


def _bitset(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def steiner_distance(g: Graph, s: Iterable[int], limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Steiner distance d(S) by the Dreyfus-Wagner dynamic program.

    ``dp[mask][v]`` is the size of a smallest tree spanning the terminals in
    ``mask`` together with ``v``; trees are merged at a common vertex and then
    extended along shortest paths.
    """
    require_connected(g)
    terms = _terminals(g, s)
    k = len(terms)
    if k > limits.max_terminals or g.n > limits.max_dw_vertices:
        raise GuardExceeded(
            f"Dreyfus-Wagner limited to {limits.max_terminals} terminals "
            f"and {limits.max_dw_vertices} vertices (got {k}, {g.n})"
        )
    if k == 1:
        return 0
    dist = _distances(g)
    n = g.n
    verts = range(n)
    full = (1 << k) - 1
    dp: list[list[float]] = [[]] * (full + 1)
    for i, t in enumerate(terms):
        dp[1 << i] = list(dist[t])
    for mask in range(3, full + 1):
        if mask & (mask - 1) == 0:
            continue
        low = mask & -mask
        row = [INF] * n
        sub = (mask - 1) & mask
        while sub:
            # visit each unordered split once: the part holding the lowest bit
            if sub & low:
                a, b = dp[sub], dp[mask ^ sub]
                for v in verts:
                    c = a[v] + b[v]
                    if c < row[v]:
                        row[v] = c
            sub = (sub - 1) & mask
        dp[mask] = [min(row[u] + dist[u][v] for u in verts) for v in verts]
    return int(dp[full][terms[0]])


@lru_cache(maxsize=64)
def _connected_subsets(g: Graph) -> bytearray:
    """``conn[U]`` is 1 iff the vertex bitset U induces a connected subgraph."""
    size = 1 << g.n
    conn = bytearray(size)
    masks = g.masks
    for u in range(1, size):
        if u & (u - 1) == 0:
            conn[u] = 1
            continue
        # a connected set always has a vertex whose removal keeps it connected
        rest = u
        while rest:
            bit = rest & -rest
            rest ^= bit
            smaller = u ^ bit
            if conn[smaller] and masks[bit.bit_length() - 1] & smaller:
                conn[u] = 1
                break
    return conn


@lru_cache(maxsize=64)
def _distance_table(g: Graph) -> tuple[int, ...]:
    n = g.n
    size = 1 << n
    conn = _connected_subsets(g)
    big = n + 1
    best = [bin(u).count("1") - 1 if conn[u] else big for u in range(size)]
    best[0] = 0
    for i in range(n):
        bit = 1 << i
        for u in range(size):
            if not u & bit:
                other = best[u | bit]
                if other < best[u]:
                    best[u] = other
    return tuple(best)


def steiner_distance_table(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> tuple[int, ...]:
    """d(S) for every vertex bitset S at once.

    d(S) + 1 is the order of a smallest connected vertex set containing S, so
    the table is a superset-minimum over the connected subsets of V.
    """
    require_connected(g)
    if g.n > limits.table_max_vertices:
        raise GuardExceeded(f"distance table limited to {limits.table_max_vertices} vertices")
    return _distance_table(g)


def _check_subset_guard(n: int, k: int, limits: OracleLimits) -> None:
    if binomial(n, k) > limits.max_subsets:
        raise GuardExceeded(f"C({n}, {k}) exceeds {limits.max_subsets} subsets")


def sw_bruteforce(
    g: Graph, k: int, limits: OracleLimits = DEFAULT_LIMITS, method: str = "auto"
) -> int:
    """Steiner k-Wiener index as the sum of d(S) over all k-subsets.

    ``method`` is ``"table"``, ``"dreyfus-wagner"`` or ``"auto"`` (table when
    the graph is small enough for it).
    """
    require_connected(g)
    if not 2 <= k <= g.n:
        raise ValueError(f"k must lie in 2..{g.n}, got {k}")
    _check_subset_guard(g.n, k, limits)
    if method == "auto":
        method = "table" if g.n <= limits.table_max_vertices else "dreyfus-wagner"
    if method == "table":
        table = steiner_distance_table(g, limits)
        return sum(table[_bitset(s)] for s in combinations(range(g.n), k))
    if method == "dreyfus-wagner":
        return sum(steiner_distance(g, s, limits) for s in combinations(range(g.n), k))
    raise ValueError(f"unknown method {method!r}")


def spanning_tree_count(g: Graph, vertices: Iterable[int]) -> int:
    """Number of spanning trees of the induced subgraph (matrix-tree theorem).

    The reduced Laplacian determinant is taken with Bareiss elimination so
    everything stays in integers.
    """
    vs = sorted(vertices)
    m = len(vs) - 1
    if m <= 0:
        return 1
    index = {v: i for i, v in enumerate(vs)}
    lap = [[0] * m for _ in range(m)]
    for v in vs[1:]:
        i = index[v] - 1
        for w in g.adj[v]:
            if w in index:
                lap[i][i] += 1
                j = index[w] - 1
                if j >= 0:
                    lap[i][j] -= 1
    prev = 1
    sign = 1
    for c in range(m - 1):
        if lap[c][c] == 0:
            swap = next((r for r in range(c + 1, m) if lap[r][c]), None)
            if swap is None:
                return 0
            lap[c], lap[swap] = lap[swap], lap[c]
            sign = -sign
        for r in range(c + 1, m):
            for j in range(c + 1, m):
                lap[r][j] = (lap[r][j] * lap[c][c] - lap[r][c] * lap[c][j]) // prev
        prev = lap[c][c]
    return sign * lap[m - 1][m - 1]


@dataclass(frozen=True)
class SteinerResult:
    """Minimum Steiner trees of a terminal set, counted as labelled subtrees of G."""

    terminals: frozenset[int]
    distance: int
    tree_count: int
    inner_counts: tuple[int, ...]


def _optimal_vertex_sets(g: Graph, terms: list[int], distance: int) -> Iterator[list[int]]:
    conn = _connected_subsets(g)
    base = _bitset(terms)
    others = [v for v in range(g.n) if not base >> v & 1]
    for extra in combinations(others, distance + 1 - len(terms)):
        if conn[base | _bitset(extra)]:
            yield sorted(terms + list(extra))


@lru_cache(maxsize=1 << 16)
def _steiner_result(g: Graph, terms: tuple[int, ...]) -> SteinerResult:
    distance = _distance_table(g)[_bitset(terms)]
    tree_count = 0
    inner = [0] * g.n
    tset = set(terms)
    for u in _optimal_vertex_sets(g, list(terms), distance):
        tau = spanning_tree_count(g, u)
        tree_count += tau
        for v in u:
            if v not in tset:
                inner[v] += tau
    return SteinerResult(frozenset(terms), distance, tree_count, tuple(inner))


def _check_enum_guard(g: Graph, limits: OracleLimits) -> None:
    if g.n > min(limits.max_enum_vertices, limits.table_max_vertices):
        raise GuardExceeded(f"Steiner tree enumeration limited to {limits.max_enum_vertices} vertices")


def enumerate_steiner_trees(
    g: Graph, s: Iterable[int], limits: OracleLimits = DEFAULT_LIMITS
) -> SteinerResult:
    """Count all minimum Steiner trees for ``s`` and how often each vertex is inner.

    A minimum Steiner tree spans some connected vertex set U of order d(S)+1
    containing S, and every spanning tree of G[U] is such a tree (a leaf
    outside S could be dropped). So the count is the sum of spanning-tree
    counts over those sets.
    """
    require_connected(g)
    _check_enum_guard(g, limits)
    return _steiner_result(g, tuple(_terminals(g, s)))


def iter_steiner_trees(g: Graph, s: Iterable[int]) -> Iterator[tuple[tuple[int, int], ...]]:
    """Yield every minimum Steiner tree as an explicit edge tuple.

    Slow; meant for cross-checking :func:`enumerate_steiner_trees` on small graphs.
    """
    require_connected(g)
    terms = _terminals(g, s)
    distance = _distance_table(g)[_bitset(terms)]
    for u in _optimal_vertex_sets(g, terms, distance):
        inside = set(u)
        edges = [e for e in g.edges if e[0] in inside and e[1] in inside]
        for chosen in combinations(edges, len(u) - 1):
            parent = {v: v for v in u}

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for a, b in chosen:
                ra, rb = find(a), find(b)
                if ra == rb:
                    break
                parent[ra] = rb
            else:
                yield chosen


def betweenness_bruteforce(
    g: Graph, v: int, k: int, limits: OracleLimits = DEFAULT_LIMITS
) -> Fraction:
    """k-Steiner betweenness: sum over k-sets A avoiding v of sigma_A(v) / sigma_A."""
    require_connected(g)
    _check_enum_guard(g, limits)
    _check_subset_guard(g.n - 1, k, limits)
    others = [w for w in range(g.n) if w != v]
    total = Fraction(0)
    for a in combinations(others, k):
        res = _steiner_result(g, a)
        if res.inner_counts[v]:
            total += Fraction(res.inner_counts[v], res.tree_count)
    return total


def betweenness_all_bruteforce(
    g: Graph, k: int, limits: OracleLimits = DEFAULT_LIMITS
) -> list[Fraction]:
    """k-Steiner betweenness of every vertex, visiting each k-set once."""
    require_connected(g)
    _check_enum_guard(g, limits)
    _check_subset_guard(g.n, k, limits)
    totals = [Fraction(0)] * g.n
    for a in combinations(range(g.n), k):
        res = _steiner_result(g, a)
        for v, c in enumerate(res.inner_counts):
            if c:
                totals[v] += Fraction(c, res.tree_count)
    return totals
