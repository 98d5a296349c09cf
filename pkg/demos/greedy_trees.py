"""Greedy trees and caterpillars against every tree with the same degrees."""
from steinerwiener import problem_scan, tree_degree_sequences

print("degrees            mode         k  trees  greedy_min  caterpillar_max")
for n in (6, 7, 8):
    for ds in tree_degree_sequences(n):
        for mode in ("trees", "line_graphs"):
            for k in (2, 3, 4):
                r = problem_scan(ds, k, mode=mode)
                if len(r.values) > 1:
                    print(f"{str(ds.degrees):18} {mode:12} {k}  {len(r.values):5}  "
                          f"{str(r.greedy_is_min):10}  {r.caterpillar_is_max}")
