"""Shared test corpora: exhaustive small block graph families plus seeded
random block graphs."""

import random
from functools import lru_cache
from itertools import combinations_with_replacement

from steinerwiener import enumerate_family, random_block_graph


def family_sequences(max_t=4, max_b=4, max_n=9):
    out = []
    for t in range(1, max_t + 1):
        for seq in combinations_with_replacement(range(max_b, 1, -1), t):
            if sum(b - 1 for b in seq) + 1 <= max_n:
                out.append(seq)
    return out


@lru_cache(maxsize=None)
def family_graphs():
    return tuple(g for seq in family_sequences() for g in enumerate_family(seq))


@lru_cache(maxsize=None)
def random_graphs(count=200, seed=20240611, max_n=9):
    rng = random.Random(seed)
    return tuple(random_block_graph(rng, max_n=max_n) for _ in range(count))


def corpus():
    return family_graphs() + random_graphs()
