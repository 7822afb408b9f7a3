"""Reconfiguration of directed trees, forests, paths and feedback sets."""

from ._core import (
    Digraph,
    GuardExceeded,
    InvalidInput,
    InvalidStructure,
    decide,
    fixed_root_sequence,
    generate_instance,
    is_directed_forest,
    is_directed_tree,
    is_feedback_arc_set,
    is_feedback_vertex_set,
    is_spanning_tree,
    normalize_instance,
    oracle_distance,
    path_neighbors,
    reconfigure,
    rooted_forest_sequence,
    shortest_forest_sequence,
    shortest_spanning_sequence,
    solve_feedback,
    solve_path,
)

__all__ = [
    "Digraph",
    "GuardExceeded",
    "InvalidInput",
    "InvalidStructure",
    "decide",
    "fixed_root_sequence",
    "generate_instance",
    "is_directed_forest",
    "is_directed_tree",
    "is_feedback_arc_set",
    "is_feedback_vertex_set",
    "is_spanning_tree",
    "normalize_instance",
    "oracle_distance",
    "path_neighbors",
    "reconfigure",
    "rooted_forest_sequence",
    "shortest_forest_sequence",
    "shortest_spanning_sequence",
    "solve_feedback",
    "solve_path",
]
