"""Constructive edge clique covers for claw-free and antiprismatic graphs."""

from .errors import CliqueCoverError
from .exact_oracle import chromatic_number, exact_clique_cover, graph_metrics, lower_bound_cc
from .graph_core import CliqueCover, Graph, Verdict, complement, induced_subgraph, merge_cliques, verify_cover

__version__ = "0.1.0"

__all__ = [
    "CliqueCover", "CliqueCoverError", "Graph", "Verdict", "chromatic_number", "complement",
    "exact_clique_cover", "graph_metrics", "induced_subgraph", "lower_bound_cc", "merge_cliques",
    "verify_cover",
]
