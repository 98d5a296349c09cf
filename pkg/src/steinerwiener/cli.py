"""Command-line front end.

Subcommands::

    compute  GRAPH --k K [--method M]     one value of SW_k
    compare  GRAPH --kmax K               every applicable method for k = 2..K
    scan     --orders 3,2,2 --k K         extremal scan over a block graph family
    problems --degrees 3,2,1,1,1 --k K    greedy tree / caterpillar experiment

GRAPH is a JSON file {"n": 4, "edges": [[0, 1], ...]} or an edge list whose
first line is "n m"; ``--random N`` draws a block graph on at most N vertices
from ``--seed`` instead.

CSV columns for scan and problems: canonical_id, sw_k, is_star_like,
is_path_like. compare writes one row per k with the method values, an
agreement flag and the literal-formula discrepancy columns. All values are
exact decimal integers.

Exit codes: 0 success, 1 invalid input, 2 guard exceeded, 3 agreement failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

from .canonical import canonical_form
from .closed_forms import BlockOrderSequence, sw_path_like
from .combinatorics import binomial
from .constructions import DegreeSequence, random_block_graph
from .decompositions import (
    sw3_edge,
    sw3_edge_literal,
    sw_block_decomposition,
    sw_hamming,
    sw_vertex_decomposition,
    wiener_edge,
)
from .extremal import extremal_scan, problem_scan
from .graph import Graph, GraphError, classify, path_like_orders, require_block_graph
from .graphio import graph_to_dict, read_graph
from .oracle import GuardExceeded, OracleLimits, sw_bruteforce

EXIT_OK, EXIT_INPUT, EXIT_GUARD, EXIT_DISAGREE = 0, 1, 2, 3
METHODS = ("block", "vertex", "hamming", "edge3", "oracle", "auto")
CSV_COLUMNS = ("canonical_id", "sw_k", "is_star_like", "is_path_like")


class InputError(Exception):
    pass


@dataclass
class RunReport:
    input: str
    methods: list[str]
    k_range: list[int]
    values: dict[str, dict[int, int]] = field(default_factory=dict)
    agreement: dict[int, bool] = field(default_factory=dict)
    timing: dict[str, float] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def all_agree(self) -> bool:
        return all(self.agreement.values())

    def record(self, method: str, k: int, fn: Callable[[], int]) -> int:
        start = time.perf_counter()
        value = fn()
        self.timing[method] = self.timing.get(method, 0.0) + time.perf_counter() - start
        self.values.setdefault(method, {})[k] = value
        return value

    def close_k(self, k: int) -> None:
        vals = {v[k] for v in self.values.values() if k in v}
        self.agreement[k] = len(vals) <= 1

    def to_json(self, timing: bool) -> dict:
        out = asdict(self)
        out["values"] = {m: {str(k): v for k, v in vals.items()} for m, vals in self.values.items()}
        out["agreement"] = {str(k): ok for k, ok in self.agreement.items()}
        if not timing:
            out.pop("timing")
        return out


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def _load_graph(args: argparse.Namespace) -> tuple[Graph, str]:
    if args.random is not None:
        g = random_block_graph(random.Random(args.seed), max_n=args.random)
        return g, f"random(max_n={args.random}, seed={args.seed})"
    if args.graph is None:
        raise InputError("give a graph file or --random N")
    return read_graph(args.graph), args.graph


def _limits(args: argparse.Namespace) -> OracleLimits:
    return OracleLimits(max_subsets=args.oracle_guard)


def _under_guard(g: Graph, k: int, limits: OracleLimits) -> bool:
    return binomial(g.n, k) <= limits.max_subsets and g.n <= limits.table_max_vertices


def _write_json(path: str | None, payload: dict) -> None:
    if path:
        with open(path, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _write_csv(path: str | None, header: Sequence[str], rows: list[Sequence]) -> None:
    if path:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(header)
            w.writerows(rows)


def cmd_compute(args: argparse.Namespace) -> int:
    g, label = _load_graph(args)
    require_block_graph(g)
    k, method = args.k, args.method
    if not 2 <= k <= g.n:
        raise InputError(f"k must lie in 2..{g.n}")
    if method == "edge3" and k != 3:
        raise InputError("edge3 needs k = 3")
    limits = _limits(args)
    report = RunReport(label, [method], [k])
    fns = {
        "block": lambda: sw_block_decomposition(g, k),
        "vertex": lambda: sw_vertex_decomposition(g, k),
        "hamming": lambda: sw_hamming(g, k, limits),
        "edge3": lambda: sw3_edge(g),
        "oracle": lambda: sw_bruteforce(g, k, limits),
    }
    if method == "auto":
        value = report.record("vertex", k, fns["vertex"])
        if _under_guard(g, k, limits):
            report.record("oracle", k, fns["oracle"])
        else:
            report.notes.append("oracle cross-check skipped: over guard")
    else:
        value = report.record(method, k, fns[method])
    report.close_k(k)
    print(f"SW_{k} = {value}")
    if not report.all_agree:
        print(f"methods disagree: {report.values}", file=sys.stderr)
    _write_json(args.json, report.to_json(args.timing))
    return EXIT_OK if report.all_agree else EXIT_DISAGREE


def cmd_compare(args: argparse.Namespace) -> int:
    g, label = _load_graph(args)
    d = require_block_graph(g)
    kmax = min(args.kmax, g.n)
    if kmax < 2:
        raise InputError("kmax must be at least 2")
    limits = _limits(args)
    cls = classify(g, d)
    orders = path_like_orders(g, d) if cls.is_path_like else None
    report = RunReport(label, ["block", "vertex", "hamming", "oracle", "edge"], list(range(2, kmax + 1)))
    header = ["k", "block", "vertex", "hamming", "oracle", "edge", "agree",
              "sw3_literal", "sw3_literal_delta", "path_like_literal", "path_like_literal_delta"]
    rows = []
    for k in report.k_range:
        report.record("block", k, lambda: sw_block_decomposition(g, k))
        ref = report.record("vertex", k, lambda: sw_vertex_decomposition(g, k))
        if _under_guard(g, k, limits):
            report.record("hamming", k, lambda: sw_hamming(g, k, limits))
            report.record("oracle", k, lambda: sw_bruteforce(g, k, limits))
        if k == 2:
            report.record("edge", k, lambda: wiener_edge(g))
        elif k == 3:
            report.record("edge", k, lambda: sw3_edge(g))
        report.close_k(k)
        lit3 = lit3_delta = lit_path = lit_path_delta = ""
        if k == 3:
            try:
                lit3 = sw3_edge_literal(g)
                lit3_delta = lit3 - ref
            except ArithmeticError as exc:
                lit3 = "non-integer"
                report.notes.append(str(exc))
            if lit3_delta:
                report.notes.append(f"literal SW3 edge formula gives {lit3}, true value {ref}")
        if orders is not None and len(orders) >= 2 and k <= g.n - 1:
            lit_path = sw_path_like(orders, k, variant="literal")
            lit_path_delta = lit_path - ref
            if lit_path_delta:
                report.notes.append(f"literal path-like formula at k={k} gives {lit_path}, true value {ref}")
        rows.append([k] + [report.values.get(m, {}).get(k, "") for m in header[1:6]]
                    + [report.agreement[k], lit3, lit3_delta, lit_path, lit_path_delta])

    widths = [max(len(str(r[i])) for r in rows + [header]) for i in range(len(header))]
    for r in [header] + rows:
        print("  ".join(str(c).rjust(w) for c, w in zip(r, widths)))
    for note in report.notes:
        print(f"note: {note}")
    _write_csv(args.csv, header, rows)
    _write_json(args.json, report.to_json(args.timing))
    if not report.all_agree:
        print("methods disagree", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def _graph_rows(values: list[tuple[Graph, int]]) -> list[list]:
    rows = []
    for g, v in values:
        c = classify(g)
        rows.append([canonical_form(g), v, c.is_star_like, c.is_path_like])
    return rows


def cmd_scan(args: argparse.Namespace) -> int:
    seq = BlockOrderSequence(_int_list(args.orders))
    if not 2 <= args.k <= seq.n_implied:
        raise InputError(f"k must lie in 2..{seq.n_implied}")
    report = extremal_scan(seq, args.k, max_n=args.max_n)
    rows = _graph_rows(report.values)
    for r in rows:
        print(*r, sep="\t")
    ok = report.min_is_star_like and report.min_value == report.lower_bound and report.max_has_path_like
    summary = {
        "orders": list(seq.orders),
        "k": args.k,
        "count": len(rows),
        "min": report.min_value,
        "max": report.max_value,
        "lower_bound": report.lower_bound,
        "min_is_star_like": report.min_is_star_like,
        "max_has_path_like": report.max_has_path_like,
        "agreement": ok,
    }
    print(f"min={report.min_value} (star-like: {report.min_is_star_like}) "
          f"max={report.max_value} (path-like: {report.max_has_path_like}) "
          f"bound={report.lower_bound}")
    _write_csv(args.csv, CSV_COLUMNS, rows)
    _write_json(args.json, summary)
    return EXIT_OK if ok else EXIT_DISAGREE


def cmd_problems(args: argparse.Namespace) -> int:
    ds = DegreeSequence(_int_list(args.degrees))
    if not ds.is_tree_realizable:
        raise InputError(f"{ds.degrees} is not the degree sequence of a tree")
    n = ds.n if args.mode == "trees" else ds.n - 1
    if not 2 <= args.k <= n:
        raise InputError(f"k must lie in 2..{n}")
    report = problem_scan(ds, args.k, mode=args.mode, max_n=args.max_n)
    rows = _graph_rows(report.values)
    for r in rows:
        print(*r, sep="\t")
    summary = {
        "degrees": list(ds.degrees),
        "k": args.k,
        "mode": args.mode,
        "count": len(rows),
        "min": report.min_value,
        "max": report.max_value,
        "greedy_value": report.greedy_value,
        "greedy_is_min": report.greedy_is_min,
        "caterpillar_value": report.caterpillar_value,
        "caterpillar_is_max": report.caterpillar_is_max,
        "counterexamples": [graph_to_dict(g) for g in report.counterexamples],
    }
    print(f"greedy_is_min={report.greedy_is_min} caterpillar_is_max={report.caterpillar_is_max}")
    _write_csv(args.csv, CSV_COLUMNS, rows)
    _write_json(args.json, summary)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="steinerwiener", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write a JSON report")
    common.add_argument("--csv", metavar="PATH", help="write CSV rows")
    common.add_argument("--seed", type=int, default=0, help="seed for all random generation")
    common.add_argument("--oracle-guard", type=int, default=10**6, metavar="N",
                        help="largest C(n, k) the brute-force oracle may enumerate")
    common.add_argument("--timing", action="store_true", help="include per-method timings in the JSON report")

    graph_src = _Parser(add_help=False)
    graph_src.add_argument("graph", nargs="?", help="graph file (JSON or edge list)")
    graph_src.add_argument("--random", type=int, metavar="N", help="use a random block graph on at most N vertices")

    c = sub.add_parser("compute", parents=[common, graph_src], help="compute SW_k")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--method", choices=METHODS, default="auto")
    c.set_defaults(func=cmd_compute)

    c = sub.add_parser("compare", parents=[common, graph_src], help="cross-check all methods")
    c.add_argument("--kmax", type=int, required=True)
    c.set_defaults(func=cmd_compare)

    c = sub.add_parser("scan", parents=[common], help="extremal scan of a block graph family")
    c.add_argument("--orders", required=True, help="block orders, e.g. 3,2,2")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--max-n", type=int, default=14)
    c.set_defaults(func=cmd_scan)

    c = sub.add_parser("problems", parents=[common], help="greedy tree and caterpillar experiment")
    c.add_argument("--degrees", required=True, help="tree degree sequence, e.g. 3,2,1,1,1")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--mode", choices=("trees", "line_graphs"), default="trees")
    c.add_argument("--max-n", type=int, default=10)
    c.set_defaults(func=cmd_problems)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return args.func(args)
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (InputError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
