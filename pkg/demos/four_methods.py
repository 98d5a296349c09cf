"""SW_k of random block graphs by four independent routes, plus the edge formulas."""
import random
import time

from steinerwiener import (
    random_block_graph,
    sw3_edge,
    sw3_edge_literal,
    sw_block_decomposition,
    sw_bruteforce,
    sw_hamming,
    sw_vertex_decomposition,
    wiener_edge,
)

rng = random.Random(1)
graphs = [random_block_graph(rng, max_n=10) for _ in range(25)]

t0 = time.perf_counter()
for g in graphs:
    for k in range(2, min(g.n, 6) + 1):
        vals = {
            sw_bruteforce(g, k),
            sw_block_decomposition(g, k),
            sw_vertex_decomposition(g, k),
            sw_hamming(g, k),
        }
        assert len(vals) == 1
print(f"{len(graphs)} graphs, all methods agree ({time.perf_counter() - t0:.2f}s)")

# edge decomposition for k = 2, 3; the literal SW3 formula is usually off
off = 0
for g in graphs:
    if g.n < 3:
        continue
    assert wiener_edge(g) == sw_bruteforce(g, 2)
    assert sw3_edge(g) == sw_bruteforce(g, 3)
    off += sw3_edge_literal(g) != sw3_edge(g)
print(f"literal SW3 formula differs on {off} of {len(graphs)} graphs")
