"""Walk a block graph family: min/max of SW_k, shifts and the lower bound."""
from steinerwiener import (
    canonical_form,
    classify,
    enumerate_family,
    extremal_scan,
    gbs_apply,
    gbs_difference,
    proper_moves,
    sw_vertex_decomposition,
)

seq = (3, 3, 2, 2)
family = enumerate_family(seq)
print(f"{len(family)} block graphs with block orders {seq}")

for k in (2, 3, 4):
    r = extremal_scan(seq, k)
    print(f"k={k}: min {r.min_value} (bound {r.lower_bound}), max {r.max_value}, "
          f"max at a path-like graph: {r.max_has_path_like}")

# every proper shift lowers SW_k or keeps it; the closed drop formula only
# tracks terminal sets split between A and B
for g in family[:4]:
    for move in list(proper_moves(g))[:1]:
        h = gbs_apply(g, move)
        for k in (2, 3):
            drop = sw_vertex_decomposition(g, k) - sw_vertex_decomposition(h, k)
            claimed = gbs_difference(len(move.set_a), len(move.set_b), move.q, k)
            print(f"{canonical_form(g)} -> {canonical_form(h)}  k={k} drop={drop} formula={claimed}")

print("path-like members:", sum(classify(g).is_path_like for g in family))
