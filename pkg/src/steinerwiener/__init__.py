"""Steiner k-Wiener index of block graphs: exact oracles, decomposition
formulas, closed forms and extremal experiments."""

from .canonical import canonical_form, is_isomorphic
from .closed_forms import (
    BlockOrderSequence,
    path_like_betweenness,
    sw_full,
    sw_n_minus_1,
    sw_path_like,
    sw_star,
    sw_star_like,
    sw_windmill,
)
from .combinatorics import (
    ComponentProfile,
    binomial,
    compositions,
    n_k,
    n_k_direct,
    n_prime_k,
    n_prime_k_direct,
)
from .constructions import (
    DegreeSequence,
    all_trees,
    attach_block,
    caterpillar,
    complete_graph,
    cycle_graph,
    greedy_tree,
    is_caterpillar,
    line_graph,
    path_graph,
    path_like_graph,
    random_block_graph,
    star_graph,
    star_like_graph,
    tree_degree_sequences,
    trees_with_degree_sequence,
    triangle_bridge_k4,
    windmill_graph,
)
from .decompositions import (
    EdgePartition,
    HammingLabeling,
    edge_partition,
    hamming_labeling,
    steiner_betweenness_blockgraph,
    steiner_distance_hamming,
    sw3_edge,
    sw3_edge_literal,
    sw_block_decomposition,
    sw_hamming,
    sw_vertex_decomposition,
    wiener_edge,
)
from .extremal import (
    GbsMove,
    InvalidMoveError,
    buckley_check,
    enumerate_family,
    extremal_scan,
    gbs_apply,
    gbs_difference,
    gbs_move,
    gbs_preimage_exists,
    problem_scan,
    proper_moves,
)
from .graph import (
    BlockCutDecomposition,
    Classification,
    DisconnectedGraphError,
    Graph,
    GraphError,
    NotATreeError,
    NotBlockGraphError,
    build_graph,
    classify,
    decompose,
    is_block_graph,
    path_like_orders,
    wiener_index,
)
from .graphio import GraphParseError, read_graph, write_graph
from .oracle import (
    DEFAULT_LIMITS,
    GuardExceeded,
    OracleLimits,
    betweenness_bruteforce,
    enumerate_steiner_trees,
    spanning_tree_count,
    steiner_distance,
    steiner_distance_table,
    sw_bruteforce,
)

__version__ = "0.1.0"
