"""Named block graphs, line graphs of trees, greedy trees, caterpillars and
small exhaustive tree generators."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .canonical import canonical_form
from .graph import Graph, GraphError, NotATreeError, build_graph, is_tree


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return build_graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1}, center 0."""
    return build_graph(n, ((0, i) for i in range(1, n)))


def attach_block(g: Graph, vertex: int, order: int) -> Graph:
    """Glue a clique of the given order onto ``vertex`` (new vertices get the next ids)."""
    if order < 2:
        raise GraphError("blocks have order at least 2")
    new = [vertex] + list(range(g.n, g.n + order - 1))
    return build_graph(g.n + order - 1, list(g.edges) + list(combinations(new, 2)))


def star_like_graph(orders: Sequence[int]) -> Graph:
    """Cliques of the given orders glued at the universal vertex 0."""
    g = complete_graph(1)
    for b in orders:
        g = attach_block(g, 0, b)
    return g


def windmill_graph(r: int, t: int) -> Graph:
    """Wd(r, t): t copies of K_r sharing one vertex."""
    if r < 2 or t < 1:
        raise GraphError("windmill needs r >= 2 and t >= 1")
    return star_like_graph([r] * t)


def path_like_graph(orders: Sequence[int]) -> Graph:
    """Chain of cliques, consecutive ones sharing one vertex, in the given order.

    ``orders`` runs from one pendant block to the other.
    """
    if not orders:
        raise GraphError("need at least one block")
    g = complete_graph(orders[0])
    tip = orders[0] - 1
    for b in orders[1:]:
        g = attach_block(g, tip, b)
        tip = g.n - 1
    return g


def triangle_bridge_k4() -> Graph:
    """Seven-vertex block graph: triangle {0,1,2}, bridge 2-3, K4 on {3,4,5,6}."""
    edges = [(0, 1), (0, 2), (1, 2), (2, 3)] + list(combinations(range(3, 7), 2))
    return build_graph(7, edges)


def random_block_graph(rng: random.Random, max_n: int = 9, max_block: int = 4) -> Graph:
    """Random connected block graph on 2..max_n vertices built by clique attachment."""
    target = rng.randint(2, max_n)
    g = complete_graph(rng.randint(2, min(max_block, target)))
    while g.n < target:
        order = rng.randint(2, min(max_block, target - g.n + 1))
        g = attach_block(g, rng.randrange(g.n), order)
    return g


def line_graph(t: Graph) -> Graph:
    """L(T): one vertex per edge of T (in ``T.edges`` order), adjacent iff the edges meet."""
    if not is_tree(t):
        raise NotATreeError("line_graph expects a tree")
    edges = t.edges
    at: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(edges):
        at.setdefault(u, []).append(i)
        at.setdefault(v, []).append(i)
    pairs = {pair for ix in at.values() for pair in combinations(ix, 2)}
    return build_graph(len(edges), sorted(pairs))


@dataclass(frozen=True)
class DegreeSequence:
    """Degrees sorted non-increasingly."""

    degrees: tuple[int, ...]

    def __init__(self, degrees: Iterable[int]):
        ds = tuple(sorted((int(d) for d in degrees), reverse=True))
        if not ds or ds[-1] < 1:
            raise GraphError("degrees must be positive")
        object.__setattr__(self, "degrees", ds)

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def is_tree_realizable(self) -> bool:
        return self.n >= 2 and sum(self.degrees) == 2 * (self.n - 1)


def _require_tree_sequence(ds: DegreeSequence) -> None:
    if not ds.is_tree_realizable:
        raise GraphError(f"{ds.degrees} is not the degree sequence of a tree")


def greedy_tree_levels(ds: DegreeSequence | Iterable[int]) -> list[list[int]]:
    """Vertices of :func:`greedy_tree` grouped by distance from the root."""
    g = greedy_tree(ds)
    depth = [0] * g.n
    for v in range(1, g.n):
        depth[v] = depth[min(g.adj[v])] + 1
    levels: list[list[int]] = [[] for _ in range(max(depth) + 1)]
    for v in range(g.n):
        levels[depth[v]].append(v)
    return levels


def greedy_tree(ds: DegreeSequence | Iterable[int]) -> Graph:
    """Greedy tree of a degree sequence.

    Vertex ids follow the planted drawing: 0 is the root (largest degree),
    then each level left to right. Vertices are filled breadth-first with
    degrees in non-increasing order, so every level carries the largest
    degrees still unused and left slots get them first.
    """
    seq = ds if isinstance(ds, DegreeSequence) else DegreeSequence(ds)
    _require_tree_sequence(seq)
    degs = seq.degrees
    edges = []
    nxt = 1
    for u in range(seq.n):
        need = degs[u] - (0 if u == 0 else 1)
        for _ in range(need):
            edges.append((u, nxt))
            nxt += 1
    return build_graph(seq.n, edges)


def caterpillar(backbone_degrees: Sequence[int]) -> Graph:
    """Caterpillar whose backbone path has the given degrees, in order.

    Backbone vertices are ``0..len-1``; leaves follow.
    """
    spine = list(backbone_degrees)
    if not spine or min(spine) < 2:
        raise GraphError("backbone degrees must all be at least 2")
    m = len(spine)
    edges = [(i, i + 1) for i in range(m - 1)]
    nxt = m
    for i, d in enumerate(spine):
        on_spine = (i > 0) + (i < m - 1)
        for _ in range(d - on_spine):
            edges.append((i, nxt))
            nxt += 1
    return build_graph(nxt, edges)


def is_caterpillar(t: Graph) -> bool:
    if not is_tree(t):
        return False
    inner = [v for v in range(t.n) if t.degree(v) > 1]
    inner_set = set(inner)
    return all(sum(w in inner_set for w in t.adj[v]) <= 2 for v in inner)


def tree_degree_sequences(n: int) -> list[DegreeSequence]:
    """All degree sequences of trees on ``n >= 2`` vertices."""
    out = []

    def rec(prefix: list[int], left: int, slots: int, cap: int) -> None:
        if slots == 0:
            if left == 0:
                out.append(DegreeSequence(prefix))
            return
        for d in range(min(cap, left - (slots - 1)), 0, -1):
            rec(prefix + [d], left - d, slots - 1, d)

    rec([], 2 * (n - 1), n, n - 1)
    return out


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n <= 2:
        return (path_graph(n),)
    seen: dict[str, Graph] = {}
    for t in _trees(n - 1):
        for v in range(t.n):
            bigger = build_graph(n, list(t.edges) + [(v, n - 1)])
            seen.setdefault(canonical_form(bigger), bigger)
    return tuple(seen[key] for key in sorted(seen))


def all_trees(n: int, max_n: int = 12) -> list[Graph]:
    """One representative per isomorphism class of trees on ``n`` vertices."""
    if n < 1:
        raise GraphError("trees need at least one vertex")
    if n > max_n:
        from .oracle import GuardExceeded

        raise GuardExceeded(f"tree enumeration limited to {max_n} vertices")
    return list(_trees(n))


def trees_with_degree_sequence(ds: DegreeSequence | Iterable[int], max_n: int = 12) -> list[Graph]:
    seq = ds if isinstance(ds, DegreeSequence) else DegreeSequence(ds)
    _require_tree_sequence(seq)
    return [t for t in all_trees(seq.n, max_n) if sorted(t.degrees(), reverse=True) == list(seq.degrees)]
