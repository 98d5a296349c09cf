"""Generalized block shifts, the block graph families G(b_1, ..., b_t), extremal
scans, Buckley's line-graph identity and the greedy-tree / caterpillar
experiments on trees with a fixed degree sequence."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .canonical import canonical_form
from .closed_forms import BlockOrderSequence, sw_star_like
from .combinatorics import binomial
from .constructions import (
    DegreeSequence,
    attach_block,
    caterpillar,
    complete_graph,
    greedy_tree,
    line_graph,
    trees_with_degree_sequence,
)
from .decompositions import sw_vertex_decomposition
from .graph import (
    Graph,
    GraphError,
    NotATreeError,
    build_graph,
    classify,
    components,
    is_tree,
    require_block_graph,
    shortest_path,
    wiener_index,
)
from .oracle import GuardExceeded


class InvalidMoveError(GraphError):
    """The requested generalized block shift is not defined on this graph."""


@dataclass(frozen=True)
class GbsMove:
    """A generalized block shift of a block graph.

    ``path`` is the shortest path from the beneficiary x to the candidate y;
    its vertices are the cut vertices c_1 = x, ..., c_q = y when both ends
    are cut vertices. ``set_a`` hangs off x away from y, ``set_b`` hangs off
    y away from x, and ``moved`` = N(y) & B are the neighbours handed to x.
    """

    beneficiary: int
    candidate: int
    path: tuple[int, ...]
    set_a: frozenset[int]
    set_b: frozenset[int]
    moved: frozenset[int]
    proper: bool

    @property
    def q(self) -> int:
        return len(self.path)

    @property
    def z(self) -> int:
        return self.path[-2]


def gbs_move(g: Graph, x: int, y: int) -> GbsMove:
    """Validate and describe the shift with beneficiary ``x`` and candidate ``y``.

    Every interior path vertex must lie in exactly two blocks and every block
    containing a path edge may have no cut vertex off the path. The move
    hands each block at y that is not on the path over to x.
    """
    d = require_block_graph(g)
    if x == y:
        raise InvalidMoveError("beneficiary and candidate must differ")
    path = shortest_path(g, x, y)
    for c in path[1:-1]:
        if len(d.blocks_of[c]) != 2:
            raise InvalidMoveError(f"path vertex {c} does not lie in exactly two blocks")
    on_path = set(path)
    for a, b in zip(path, path[1:]):
        block = d.blocks[d.block_of_edge(a, b)]
        extra = (block & d.cut_vertices) - on_path
        if extra:
            raise InvalidMoveError(f"path block {sorted(block)} has extra cut vertices {sorted(extra)}")
    set_a = frozenset(v for comp in components(g, removed_vertices=[x]) if y not in comp for v in comp)
    set_b = frozenset(v for comp in components(g, removed_vertices=[y]) if x not in comp for v in comp)
    moved = frozenset(set(g.adj[y]) & set_b)
    return GbsMove(x, y, tuple(path), set_a, set_b, moved, bool(set_a) and bool(set_b))


def gbs_apply(g: Graph, move: GbsMove) -> Graph:
    """Rewire the candidate's off-path neighbours onto the beneficiary."""
    if gbs_move(g, move.beneficiary, move.candidate) != move:
        raise InvalidMoveError("move was not built for this graph")
    x, y = move.beneficiary, move.candidate
    edges = [e for e in g.edges if not (y in e and (e[0] in move.moved or e[1] in move.moved))]
    edges += [(x, w) for w in sorted(move.moved)]
    out = build_graph(g.n, edges)
    before = require_block_graph(g).block_order_sequence
    after = require_block_graph(out).block_order_sequence
    if before != after:
        raise InvalidMoveError(f"shift changed the block orders {before} -> {after}")
    return out


def gbs_difference(a_size: int, b_size: int, q: int, k: int) -> int:
    """(q - 1) * sum over l1 + l2 = k, 0 < l1, l2 < k, of C(|A|, l1) C(|B|, l2).

    The claimed drop SW_k(G_2) - SW_k(G_1) for a proper shift. It is the
    exact drop for k = 2 on trees, but it ignores terminal sets that mix
    path vertices with A and B, so for k >= 3 the real drop can be larger
    (P5 shifted to a spider: 3 at k = 3 where this gives 0).
    """
    if q < 2 or k < 2:
        raise ValueError("need q >= 2 and k >= 2")
    return (q - 1) * sum(binomial(a_size, l1) * binomial(b_size, k - l1) for l1 in range(1, k))


def proper_moves(g: Graph) -> Iterator[GbsMove]:
    """All valid proper shifts of ``g``, in (x, y) order."""
    d = require_block_graph(g)
    cuts = sorted(d.cut_vertices)
    for x in cuts:
        for y in cuts:
            if x == y:
                continue
            try:
                move = gbs_move(g, x, y)
            except InvalidMoveError:
                continue
            if move.proper:
                yield move


def gbs_preimage_exists(g: Graph) -> tuple[Graph, GbsMove] | None:
    """Find (G', move) with gbs_apply(G', move) == g, or None for path-like graphs.

    Follows the classical construction: take a leaf v and a cut vertex w in
    at least three blocks, move one of w's off-path blocks over to v; shifting
    it back is a proper shift. Candidates are tried in a fixed order.
    """
    d = require_block_graph(g)
    heavy = sorted(v for v in d.cut_vertices if len(d.blocks_of[v]) >= 3)
    if not heavy:
        return None
    pend = classify(g, d).pendant_blocks
    leaves = sorted(v for i in pend for v in d.blocks[i] if v in d.pendant_vertices)
    for v in leaves:
        for w in heavy:
            path = shortest_path(g, v, w)
            last = d.block_of_edge(path[-2], path[-1])
            for bi in d.blocks_of[w]:
                if bi == last:
                    continue
                handed = d.blocks[bi] - {w}
                edges = [e for e in g.edges if not (w in e and (e[0] in handed or e[1] in handed))]
                edges += [(v, u) for u in sorted(handed)]
                source = build_graph(g.n, edges)
                try:
                    move = gbs_move(source, w, v)
                    if move.proper and gbs_apply(source, move) == g:
                        return source, move
                except InvalidMoveError:
                    continue
    return None


def enumerate_family(
    seq: BlockOrderSequence | Iterable[int], limit: int = 100_000, max_n: int = 14
) -> list[Graph]:
    """All connected block graphs with the given block orders, up to isomorphism.

    Blocks are glued on one at a time at any existing vertex, trying every
    remaining order at each step; partial graphs are deduplicated by
    canonical form. Output is sorted by canonical form.
    """
    s = seq if isinstance(seq, BlockOrderSequence) else BlockOrderSequence(seq)
    if s.n_implied > max_n:
        raise GuardExceeded(f"family enumeration limited to {max_n} vertices")

    def remove_one(rest: tuple[int, ...], b: int) -> tuple[int, ...]:
        ix = rest.index(b)
        return rest[:ix] + rest[ix + 1 :]

    layer: dict[tuple[str, tuple[int, ...]], Graph] = {}
    for b in sorted(set(s.orders)):
        g = complete_graph(b)
        layer[(canonical_form(g), remove_one(s.orders, b))] = g
    for _ in range(s.t - 1):
        nxt: dict[tuple[str, tuple[int, ...]], Graph] = {}
        for (_, rest), g in layer.items():
            for b in sorted(set(rest)):
                left = remove_one(rest, b)
                for v in range(g.n):
                    h = attach_block(g, v, b)
                    nxt.setdefault((canonical_form(h), left), h)
                    if len(nxt) > limit:
                        raise GuardExceeded(f"more than {limit} partial graphs")
        layer = nxt
    return [layer[key] for key in sorted(layer)]


@dataclass
class ExtremalReport:
    sequence: tuple[int, ...]
    k: int
    values: list[tuple[Graph, int]]
    min_value: int
    min_graphs: list[Graph]
    max_value: int
    max_graphs: list[Graph]
    lower_bound: int
    min_is_star_like: bool
    max_has_path_like: bool


def extremal_scan(seq: BlockOrderSequence | Iterable[int], k: int, **family_kw) -> ExtremalReport:
    """Minimum and maximum SW_k over the family, with the star-like lower bound."""
    s = seq if isinstance(seq, BlockOrderSequence) else BlockOrderSequence(seq)
    family = enumerate_family(s, **family_kw)
    values = [(g, sw_vertex_decomposition(g, k)) for g in family]
    lo = min(v for _, v in values)
    hi = max(v for _, v in values)
    mins = [g for g, v in values if v == lo]
    maxs = [g for g, v in values if v == hi]
    # a single block is the complete graph: star-like, and path-like only vacuously
    return ExtremalReport(
        sequence=s.orders,
        k=k,
        values=values,
        min_value=lo,
        min_graphs=mins,
        max_value=hi,
        max_graphs=maxs,
        lower_bound=sw_star_like(s, k),
        min_is_star_like=any(classify(g).is_star_like for g in mins),
        max_has_path_like=s.t == 1 or any(classify(g).is_path_like for g in maxs),
    )


@dataclass(frozen=True)
class BuckleyCheck:
    w_tree: int
    w_line_graph: int
    identity_holds: bool


def buckley_check(t: Graph) -> BuckleyCheck:
    """Compare W(L(T)) with W(T) - C(n, 2), both sides by breadth-first search."""
    if not is_tree(t) or t.n < 2:
        raise NotATreeError("buckley_check expects a tree with at least one edge")
    w_tree = wiener_index(t)
    w_line = wiener_index(line_graph(t))
    return BuckleyCheck(w_tree, w_line, w_line == w_tree - binomial(t.n, 2))


def _multiset_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    counts: dict[int, int] = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts, reverse=True)
    out: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(out) == len(items):
            yield tuple(out)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                out.append(key)
                yield from rec()
                out.pop()
                counts[key] += 1

    yield from rec()


def caterpillars_with_degree_sequence(ds: DegreeSequence | Iterable[int]) -> list[Graph]:
    """Caterpillars realizing ``ds``, one per backbone order (mirror images skipped)."""
    seq = ds if isinstance(ds, DegreeSequence) else DegreeSequence(ds)
    inner = [d for d in seq.degrees if d >= 2]
    if not inner:
        return [build_graph(2, [(0, 1)])]
    out = []
    for order in _multiset_permutations(inner):
        if order <= order[::-1]:
            out.append(caterpillar(order))
    return out


@dataclass
class ProblemReport:
    degrees: tuple[int, ...]
    k: int
    mode: str
    values: list[tuple[Graph, int]]
    min_value: int
    max_value: int
    min_graph: Graph
    max_graph: Graph
    greedy_value: int
    greedy_is_min: bool
    caterpillar_value: int
    best_caterpillar: Graph
    caterpillar_is_max: bool
    counterexamples: list[Graph] = field(default_factory=list)


def problem_scan(
    ds: DegreeSequence | Iterable[int], k: int, mode: str = "trees", max_n: int = 10
) -> ProblemReport:
    """Exhaustively test the greedy tree (min) and best caterpillar (max).

    ``mode="trees"`` scores the trees with degree sequence ``ds``;
    ``mode="line_graphs"`` scores their line graphs. Graphs that beat the
    greedy tree or the best caterpillar are returned in ``counterexamples``
    and announced with a warning.
    """
    seq = ds if isinstance(ds, DegreeSequence) else DegreeSequence(ds)
    if seq.n > max_n:
        raise GuardExceeded(f"problem scan limited to {max_n} vertices")
    if mode == "trees":
        transform = lambda t: t  # noqa: E731
    elif mode == "line_graphs":
        transform = line_graph
    else:
        raise ValueError(f"unknown mode {mode!r}")
    trees = trees_with_degree_sequence(seq, max_n=max_n)
    values = [(transform(t), sw_vertex_decomposition(transform(t), k)) for t in trees]
    min_graph, lo = min(values, key=lambda gv: gv[1])
    max_graph, hi = max(values, key=lambda gv: gv[1])
    greedy = transform(greedy_tree(seq))
    greedy_value = sw_vertex_decomposition(greedy, k)
    cats = [(transform(c), sw_vertex_decomposition(transform(c), k)) for c in caterpillars_with_degree_sequence(seq)]
    best_cat, cat_value = max(cats, key=lambda gv: gv[1])
    counter = [g for g, v in values if v < greedy_value or v > cat_value]
    if counter:
        warnings.warn(
            f"degree sequence {seq.degrees}, k={k}, {mode}: {len(counter)} graph(s) beat "
            "the greedy tree or the best caterpillar",
            stacklevel=2,
        )
    return ProblemReport(
        degrees=seq.degrees,
        k=k,
        mode=mode,
        values=values,
        min_value=lo,
        max_value=hi,
        min_graph=min_graph,
        max_graph=max_graph,
        greedy_value=greedy_value,
        greedy_is_min=greedy_value == lo,
        caterpillar_value=cat_value,
        best_caterpillar=best_cat,
        caterpillar_is_max=cat_value == hi,
        counterexamples=counter,
    )
