"""Exact locating/distinguishing chromatic numbers and metric dimension of small graphs."""

from .chromatics import (
    ColorPartition,
    InvariantReport,
    chromatic_number,
    color_code,
    distinguishing_chromatic_number,
    invariant_report,
    is_distinguishing,
    is_locating,
    is_proper,
    is_resolving,
    locating_chromatic_number,
    metric_dimension,
    metric_representation,
)
from .enumeration import (
    enumerate_connected_graphs,
    enumerate_trees,
)
from .graph import (
    FamilySpec,
    Graph,
    GraphError,
    SizeCapError,
    diameter,
    distances,
    generate,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .symmetry import (
    AutGroup,
    Permutation,
    automorphisms,
    canonical_form,
    find_color_preserving_automorphism,
)

__version__ = "0.1.0"

__all__ = [
    "AutGroup",
    "ColorPartition",
    "FamilySpec",
    "Graph",
    "GraphError",
    "InvariantReport",
    "Permutation",
    "SizeCapError",
    "automorphisms",
    "canonical_form",
    "chromatic_number",
    "color_code",
    "diameter",
    "distances",
    "distinguishing_chromatic_number",
    "enumerate_connected_graphs",
    "enumerate_trees",
    "find_color_preserving_automorphism",
    "generate",
    "invariant_report",
    "is_distinguishing",
    "is_locating",
    "is_proper",
    "is_resolving",
    "locating_chromatic_number",
    "metric_dimension",
    "metric_representation",
    "parse_edge_list",
    "parse_graph6",
    "write_edge_list",
    "write_graph6",
]
