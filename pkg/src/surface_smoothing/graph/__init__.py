from surface_smoothing.graph.classify import (
    GraphClassification,
    canonical_key,
    classify,
    require_rational_minimal,
)
from surface_smoothing.graph.io import (
    GraphDocument,
    format_graph,
    graph_to_document,
    load_graph,
    parse_graph,
)
from surface_smoothing.graph.lattice import (
    LatticeContext,
    arithmetic_genus,
    canonical_class,
    chi_T,
    chi_T_residual,
    context,
    determinant,
    fundamental_cycle,
    intersection_form,
    intersections,
    is_negative_definite,
    is_numerically_gorenstein,
    is_rational,
    pairing,
    reduced_term,
)
from surface_smoothing.graph.model import Cycle, IntersectionForm, QCycle, ResolutionGraph, Vertex

__all__ = [
    "ResolutionGraph",
    "Vertex",
    "IntersectionForm",
    "Cycle",
    "QCycle",
    "GraphClassification",
    "GraphDocument",
    "parse_graph",
    "load_graph",
    "format_graph",
    "graph_to_document",
    "intersection_form",
    "intersections",
    "is_negative_definite",
    "determinant",
    "fundamental_cycle",
    "canonical_class",
    "arithmetic_genus",
    "is_rational",
    "is_numerically_gorenstein",
    "classify",
    "require_rational_minimal",
    "canonical_key",
    "chi_T",
    "chi_T_residual",
    "reduced_term",
    "pairing",
    "LatticeContext",
    "context",
]
