"""Simple undirected graphs on dense vertex ids, block/cut decomposition and
structural classification of block graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid graph input."""


class DisconnectedGraphError(GraphError):
    pass


class NotBlockGraphError(GraphError):
    def __init__(self, block: Iterable[int]):
        self.block = tuple(sorted(block))
        super().__init__(f"block {set(self.block)} is not a clique")


class NotATreeError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``. Use
    :func:`build_graph` to construct one from an edge list.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length must equal n")
        for v, nbrs in enumerate(self.adj):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbours of {v} must be sorted and distinct")
            for w in nbrs:
                if w == v:
                    raise GraphError(f"loop at vertex {v}")
                if not 0 <= w < self.n or v not in self.adj[w]:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitsets."""
        out = []
        for nbrs in self.adj:
            bits = 0
            for w in nbrs:
                bits |= 1 << w
            out.append(bits)
        return tuple(out)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a :class:`Graph`, rejecting loops, duplicates and bad vertex ids."""
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = (int(x) for x in e)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        if v in nbrs[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def bfs_distances(g: Graph, source: int, removed: int = 0) -> list[int]:
    """Breadth-first distances from ``source``; -1 marks unreachable vertices.

    ``removed`` is a bitset of vertices treated as deleted.
    """
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0 and not removed >> w & 1:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return g.n > 0 and min(bfs_distances(g, 0)) >= 0


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")


def geodesic_distance(g: Graph, u: int, v: int) -> int:
    d = bfs_distances(g, u)[v]
    if d < 0:
        raise DisconnectedGraphError(f"no path between {u} and {v}")
    return d


def all_pairs_distances(g: Graph) -> list[list[int]]:
    require_connected(g)
    return [bfs_distances(g, s) for s in range(g.n)]


def shortest_path(g: Graph, u: int, v: int) -> list[int]:
    """One shortest ``u``-``v`` path (unique in a block graph)."""
    parent = {u: -1}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        if a == v:
            break
        for w in g.adj[a]:
            if w not in parent:
                parent[w] = a
                queue.append(w)
    if v not in parent:
        raise DisconnectedGraphError(f"no path between {u} and {v}")
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return path[::-1]


def components(
    g: Graph,
    removed_vertices: Iterable[int] = (),
    removed_edges: Iterable[tuple[int, int]] = (),
) -> list[list[int]]:
    """Connected components after deleting some vertices and/or edges.

    Deleted vertices do not appear in the output; deleting edges never deletes
    vertices, so isolated vertices come back as singleton components.
    """
    gone = set(removed_vertices)
    cut = {frozenset(e) for e in removed_edges}
    seen = set(gone)
    out = []
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in seen and (not cut or frozenset((u, w)) not in cut):
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def _biconnected_components(g: Graph) -> list[frozenset[int]]:
    # iterative Hopcroft-Tarjan lowpoint DFS with an edge stack
    disc = [-1] * g.n
    low = [0] * g.n
    disc[0] = 0
    clock = 1
    blocks: list[frozenset[int]] = []
    edge_stack: list[tuple[int, int]] = []
    stack = [(0, -1, iter(g.adj[0]))]
    while stack:
        u, parent, it = stack[-1]
        descended = False
        for w in it:
            if w == parent:
                continue
            if disc[w] < 0:
                disc[w] = low[w] = clock
                clock += 1
                edge_stack.append((u, w))
                stack.append((w, u, iter(g.adj[w])))
                descended = True
                break
            if disc[w] < disc[u]:
                low[u] = min(low[u], disc[w])
                edge_stack.append((u, w))
        if descended:
            continue
        stack.pop()
        if not stack:
            break
        p = stack[-1][0]
        low[p] = min(low[p], low[u])
        if low[u] >= disc[p]:
            comp: set[int] = set()
            while True:
                e = edge_stack.pop()
                comp.update(e)
                if e == (p, u):
                    break
            blocks.append(frozenset(comp))
    return blocks


@dataclass(frozen=True)
class BlockCutDecomposition:
    """Blocks, cut vertices and block-cut tree of a connected graph.

    Blocks are ordered canonically: by size descending, then by their sorted
    vertex lists. ``block_cut_tree`` lists (block index, cut vertex) incidences.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    pendant_vertices: frozenset[int]
    block_cut_tree: tuple[tuple[int, int], ...]

    @property
    def t(self) -> int:
        return len(self.blocks)

    @property
    def block_order_sequence(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @cached_property
    def blocks_of(self) -> dict[int, tuple[int, ...]]:
        """Vertex -> indices of the blocks containing it."""
        out: dict[int, list[int]] = {}
        for i, b in enumerate(self.blocks):
            for v in b:
                out.setdefault(v, []).append(i)
        return {v: tuple(ix) for v, ix in out.items()}

    def block_of_edge(self, u: int, v: int) -> int:
        common = set(self.blocks_of[u]) & set(self.blocks_of[v])
        if len(common) != 1:
            raise GraphError(f"({u}, {v}) is not an edge of exactly one block")
        return common.pop()


def decompose(g: Graph) -> BlockCutDecomposition:
    """Block/cut decomposition of a connected graph."""
    require_connected(g)
    if g.n == 1:
        raw = [frozenset({0})]
    else:
        raw = _biconnected_components(g)
    blocks = tuple(sorted(raw, key=lambda b: (-len(b), sorted(b))))
    count = [0] * g.n
    for b in blocks:
        for v in b:
            count[v] += 1
    cut = frozenset(v for v in range(g.n) if count[v] >= 2)
    pendant = frozenset(v for v in range(g.n) if count[v] == 1)
    tree = tuple((i, v) for i, b in enumerate(blocks) for v in sorted(b) if v in cut)
    return BlockCutDecomposition(blocks, cut, pendant, tree)


def _non_clique_block(g: Graph, d: BlockCutDecomposition) -> frozenset[int] | None:
    for b in d.blocks:
        for v in b:
            if len(b) > 1 and not (b - {v}) <= set(g.adj[v]):
                return b
    return None


def is_block_graph(g: Graph) -> bool:
    """True iff every block of the connected graph ``g`` is a clique."""
    return _non_clique_block(g, decompose(g)) is None


def require_block_graph(g: Graph) -> BlockCutDecomposition:
    """Decompose ``g`` and raise :class:`NotBlockGraphError` on a non-clique block."""
    d = decompose(g)
    bad = _non_clique_block(g, d)
    if bad is not None:
        raise NotBlockGraphError(bad)
    return d


@dataclass(frozen=True)
class Classification:
    is_star_like: bool
    is_path_like: bool
    is_claw_free: bool
    pendant_blocks: tuple[int, ...]


def pendant_blocks(d: BlockCutDecomposition) -> tuple[int, ...]:
    """Indices of blocks holding exactly one cut vertex (leaves of the block-cut tree)."""
    return tuple(i for i, b in enumerate(d.blocks) if len(b & d.cut_vertices) == 1)


def classify(g: Graph, d: BlockCutDecomposition | None = None) -> Classification:
    if d is None:
        d = require_block_graph(g)
    pend = pendant_blocks(d)
    return Classification(
        is_star_like=any(g.degree(v) == g.n - 1 for v in range(g.n)),
        is_path_like=len(pend) == 2,
        is_claw_free=all(len(d.blocks_of[v]) == 2 for v in d.cut_vertices),
        pendant_blocks=pend,
    )


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``."""
    return build_graph(g.n, ((perm[u], perm[v]) for u, v in g.edges))


def wiener_index(g: Graph) -> int:
    """Sum of geodesic distances over unordered vertex pairs."""
    return sum(map(sum, all_pairs_distances(g))) // 2


def path_like_orders(g: Graph, d: BlockCutDecomposition | None = None) -> tuple[int, ...]:
    """Block orders of a path-like block graph read from one pendant block to the other.

    Of the two readings the lexicographically smaller one is returned.
    """
    if d is None:
        d = require_block_graph(g)
    if d.t == 1:
        return d.block_order_sequence
    if not classify(g, d).is_path_like:
        raise GraphError("graph is not path-like")
    start = pendant_blocks(d)[0]
    order = [start]
    prev_cut = -1
    while len(order) < d.t:
        block = d.blocks[order[-1]]
        cut = next(v for v in block & d.cut_vertices if v != prev_cut)
        order.append(next(j for j in d.blocks_of[cut] if j != order[-1]))
        prev_cut = cut
    forward = tuple(len(d.blocks[i]) for i in order)
    return min(forward, forward[::-1])
