"""Ear decompositions of strongly connected bidirected graphs."""
from .connectivity import bidirected_strongly_connected, cycle_through, digraph_strongly_connected, edge_in_cycle
from .correspondence import lift_walk, map_walk_tau, to_bidirected, to_skew
from .ear_decomp import decompose, five_nodes, verify_decomposition
from .graph_core import BiEdge, BidirectedGraph, GraphError, Sign, Step, Verdict, Walk, validate_walk
from .matching_ears import UndirectedGraph, matching_decompose, verify_matching_decomposition
from .regular_reach import find_barrier, find_regular_path, verify_barrier
from .skew_core import DirectedWalk, SkewSymmetricGraph
from .two_edges import Digraph, st_collection, two_edges

__all__ = [
    "BiEdge", "BidirectedGraph", "Digraph", "DirectedWalk", "GraphError", "Sign", "SkewSymmetricGraph",
    "Step", "UndirectedGraph", "Verdict", "Walk", "bidirected_strongly_connected", "cycle_through",
    "decompose", "digraph_strongly_connected", "edge_in_cycle", "find_barrier", "find_regular_path",
    "five_nodes", "lift_walk", "map_walk_tau", "matching_decompose", "st_collection", "to_bidirected",
    "to_skew", "two_edges", "validate_walk", "verify_barrier", "verify_decomposition",
    "verify_matching_decomposition",
]
