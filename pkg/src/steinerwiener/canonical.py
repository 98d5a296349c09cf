"""Isomorphism-invariant string for block graphs.

A block graph is fixed up to isomorphism by its block-cut tree with each block
node labelled by its order (which vertices of a clique carry the attachments
does not matter). The canonical string is the AHU encoding of that labelled
tree rooted at its center; with two centers the smaller encoding wins.
"""

from __future__ import annotations

from .graph import Graph, require_block_graph


def canonical_form(g: Graph) -> str:
    d = require_block_graph(g)
    if d.t == 1:
        return f"B{len(d.blocks[0])}()"
    nbrs: dict[tuple[str, int], list[tuple[str, int]]] = {}
    for i, v in d.block_cut_tree:
        nbrs.setdefault(("b", i), []).append(("c", v))
        nbrs.setdefault(("c", v), []).append(("b", i))
    centers = _tree_centers(nbrs)

    def encode(node: tuple[str, int], parent: tuple[str, int] | None) -> str:
        inner = "".join(sorted(encode(c, node) for c in nbrs[node] if c != parent))
        if node[0] == "b":
            return f"B{len(d.blocks[node[1]])}({inner})"
        return f"C({inner})"

    return min(encode(c, None) for c in centers)


def _tree_centers(nbrs: dict) -> list:
    degree = {u: len(vs) for u, vs in nbrs.items()}
    layer = [u for u, deg in degree.items() if deg <= 1]
    remaining = len(degree)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for u in layer:
            for w in nbrs[u]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
            degree[u] = 0
        layer = nxt
    return layer


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism test for connected block graphs."""
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)
