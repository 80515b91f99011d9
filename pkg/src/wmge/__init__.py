"""Minimum-perimeter weakly monotone grid embeddings of two paths."""

from .constraint_graph import ConstraintGraph, build_constraint_graph, export_dot, verify_bipartite
from .embedder import (
    ExtentAssignment,
    brass_baseline,
    coordinates_from_extents,
    extents_from_cover,
    solve_min_perimeter,
)
from .geometry import GridEmbedding, ValidationReport, check_unit_length, check_wmge, metrics
from .matching import BipartiteGraph, hopcroft_karp, konig_cover, verify_cover
from .pathpair import DerivedStructure, InstanceError, PathPair, derive, parse_instance

__all__ = [
    "BipartiteGraph",
    "ConstraintGraph",
    "DerivedStructure",
    "ExtentAssignment",
    "GridEmbedding",
    "InstanceError",
    "PathPair",
    "ValidationReport",
    "brass_baseline",
    "build_constraint_graph",
    "check_unit_length",
    "check_wmge",
    "coordinates_from_extents",
    "derive",
    "export_dot",
    "extents_from_cover",
    "hopcroft_karp",
    "konig_cover",
    "metrics",
    "parse_instance",
    "solve_min_perimeter",
    "verify_bipartite",
    "verify_cover",
]
