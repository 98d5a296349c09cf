"""Reading and writing graphs as JSON ({"n": ..., "edges": [[u, v], ...]}) or as
a plain edge list whose first line is "n m"."""

from __future__ import annotations

import json
from pathlib import Path

from .graph import Graph, GraphError, build_graph


class GraphParseError(GraphError):
    pass


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_dict(data: dict) -> Graph:
    try:
        n = data["n"]
        edges = data["edges"]
    except (KeyError, TypeError) as exc:
        raise GraphParseError("expected an object with 'n' and 'edges'") from exc
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphParseError("'n' must be an integer")
    if any(not isinstance(e, (list, tuple)) or len(e) != 2 for e in edges):
        raise GraphParseError("every edge must be a pair of vertex ids")
    return build_graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    rows = [line.split("#", 1)[0].split() for line in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or len(rows[0]) != 2:
        raise GraphParseError("first line must be 'n m'")
    try:
        n, m = map(int, rows[0])
        edges = [tuple(map(int, r)) for r in rows[1:]]
    except ValueError as exc:
        raise GraphParseError(f"non-integer token: {exc}") from exc
    if any(len(e) != 2 for e in edges):
        raise GraphParseError("edge lines must hold exactly two vertex ids")
    if len(edges) != m:
        raise GraphParseError(f"header announces {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    return "".join([f"{g.n} {g.m}\n"] + [f"{u} {v}\n" for u, v in g.edges])


def loads(text: str) -> Graph:
    """Parse either format; JSON is recognised by a leading '{'."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphParseError(f"invalid JSON: {exc}") from exc
        return graph_from_dict(data)
    return parse_edge_list(text)


def read_graph(path: str | Path) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphParseError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def write_graph(g: Graph, path: str | Path, fmt: str | None = None) -> None:
    """Write ``g``; the format defaults to JSON unless the suffix is .txt or .edges."""
    p = Path(path)
    if fmt is None:
        fmt = "edges" if p.suffix in {".txt", ".edges"} else "json"
    if fmt == "json":
        p.write_text(json.dumps(graph_to_dict(g)) + "\n")
    elif fmt == "edges":
        p.write_text(format_edge_list(g))
    else:
        raise ValueError(f"unknown format {fmt!r}")
