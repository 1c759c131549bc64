"""Constructors for the graph families used by the coverers."""

from .basic import (NAMED, icosahedron, line_graph, named_graph, power_of_cycle, rotator_complement,
                    schlafli, schlafli_label, twister_complement)
from .circular import CircularIntervalRep, circular_interval_graph, power_of_cycle_rep
from .randomized import (RANDOM_KINDS, random_antiprismatic, random_circular, random_circular_rep,
                         random_instance, random_three_cliqued, random_tree, random_tree_line)
from .structured import (STRUCTURED, mantled, parallel_square, random_mantled_params, random_ring_params,
                         ring_of_five, skew_square, structured_graph)
from .thickening import ThickeningSpec, thicken
from .triangles import (ChainStructure, TriangleChainParams, build_triangle_chain, check_triangle_chain,
                        is_tripod, random_triangle_chain_params, triangle_chain_graph)
from .worn import ChainTerm, WornHexChain, triad_term, worn_hex_chain

__all__ = [
    "NAMED", "RANDOM_KINDS", "STRUCTURED", "ChainStructure", "ChainTerm", "CircularIntervalRep",
    "ThickeningSpec", "TriangleChainParams", "WornHexChain", "build_triangle_chain",
    "check_triangle_chain", "circular_interval_graph", "icosahedron", "is_tripod", "line_graph",
    "mantled", "named_graph", "parallel_square", "power_of_cycle", "power_of_cycle_rep",
    "random_antiprismatic", "random_circular", "random_circular_rep", "random_instance",
    "random_mantled_params", "random_ring_params", "random_three_cliqued", "random_tree",
    "random_tree_line", "random_triangle_chain_params", "ring_of_five", "rotator_complement",
    "schlafli", "schlafli_label", "skew_square", "structured_graph", "thicken", "triad_term",
    "triangle_chain_graph", "twister_complement", "worn_hex_chain",
]
