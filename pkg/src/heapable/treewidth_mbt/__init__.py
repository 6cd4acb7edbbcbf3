"""Maximum binary trees in undirected graphs of bounded treewidth."""

from .decomposition import (
    InvalidDecomposition,
    NiceDecomposition,
    NiceNode,
    TreeDecomposition,
    Violation,
    check_decomposition,
    heuristic_decomposition,
    is_valid,
    ladder_decomposition,
    make_nice,
    make_special,
    nice_violation,
    path_decomposition,
)
from .dp import MbtResult, NoBinaryTree, join_partition, mbt_dp, merge_parts, rgs_partitions
from .graph import UGraph, check_binary_tree, complete_graph, ladder_graph, path_graph, star_graph
from .solve import BinaryTree, hub_extension, rooted_mbt, unrooted_mbt

__all__ = [
    "BinaryTree", "InvalidDecomposition", "MbtResult", "NiceDecomposition", "NiceNode",
    "NoBinaryTree", "TreeDecomposition", "UGraph", "Violation", "check_binary_tree",
    "check_decomposition", "complete_graph", "heuristic_decomposition", "hub_extension",
    "is_valid", "join_partition", "ladder_decomposition", "ladder_graph", "make_nice",
    "make_special", "mbt_dp", "merge_parts", "nice_violation", "path_decomposition",
    "path_graph", "rgs_partitions", "rooted_mbt", "star_graph", "unrooted_mbt",
]
