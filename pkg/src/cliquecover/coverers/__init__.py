"""Covering constructions, each returning a verified, bound-checked cover."""

from .antilog import antilog_bound, cover_antiprismatic_log, matching_complement_cliques
from .base import BoundedCover, SplittingCover, emit, make_splitting
from .circ import cover_circular_interval, normalized_runs
from .menagerie import (MENAGERIE, cover_cycle_of_triangles, cover_mantled, cover_menagerie,
                        cover_path_of_triangles, cover_ring)
from .rotator import (RotatorDecomposition, canonical_rho, hard_edges, p_extra_edges,
                      random_schlafli_subset, rotator_collections, rotator_decompose,
                      schlafli_collections, uncovered_edges, verified_mu)
from .simple import cover_named, cover_power_of_cycle, power_of_cycle_cliques
from .stripe import cover_simplicial
from .tc1 import cover_three_cliqued
from .thickening import lift_thickening
from .worn import lift_worn_hex_chain, normalize_chain

__all__ = [
    "BoundedCover", "MENAGERIE", "RotatorDecomposition", "SplittingCover", "antilog_bound",
    "canonical_rho", "cover_antiprismatic_log", "cover_circular_interval", "cover_cycle_of_triangles",
    "cover_mantled", "cover_menagerie", "cover_named", "cover_path_of_triangles", "cover_power_of_cycle",
    "cover_ring", "cover_simplicial", "cover_three_cliqued", "emit", "hard_edges",
    "lift_thickening", "lift_worn_hex_chain", "make_splitting", "matching_complement_cliques",
    "normalize_chain", "normalized_runs", "p_extra_edges", "power_of_cycle_cliques",
    "random_schlafli_subset", "rotator_collections", "rotator_decompose", "schlafli_collections",
    "uncovered_edges", "verified_mu",
]
