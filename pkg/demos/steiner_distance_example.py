"""Steiner distance on a small block graph, three ways.

The graph: a triangle {0,1,2}, a bridge 2-3 and a K4 on {3,4,5,6}.
"""
from steinerwiener import (
    decompose,
    enumerate_steiner_trees,
    hamming_labeling,
    steiner_distance,
    steiner_distance_hamming,
    triangle_bridge_k4,
)

g = triangle_bridge_k4()
d = decompose(g)
print("blocks:", [sorted(b) for b in d.blocks])
print("cut vertices:", sorted(d.cut_vertices))

# Hamming coordinates: one per block, distances become Hamming distances
lab = hamming_labeling(g)
for v, c in enumerate(lab.coords):
    print(f"  vertex {v}: {c}")

S = {0, 1, 4, 5}
print("d(S) by Dreyfus-Wagner:", steiner_distance(g, S))
print("d(S) from the labels:  ", steiner_distance_hamming(lab, S))

r = enumerate_steiner_trees(g, S)
print(f"{r.tree_count} minimum Steiner trees; inner vertex counts {r.inner_counts}")
