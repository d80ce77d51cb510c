"""Exact deciders, closures, sufficient conditions and spectral tools for k-leaf-connectivity."""

from __future__ import annotations

from .closure import ClosureResult, is_closed, l_closure, nk_closure
from .conditions import ConditionReport, degree_condition, evaluate, spectral_thresholds, threshold_edges
from .decider import (
    ConnectivityVerdict,
    Decision,
    LeafVerdict,
    Refutation,
    is_k_leaf_connected,
    oracle_is_k_leaf_connected,
    spanning_tree_with_leaf_set,
)
from .errors import (
    CapabilityError,
    DomainError,
    Graph6ParseError,
    GraphConstructionError,
    LeafconError,
    NumericalError,
    ParameterError,
    PreconditionError,
)
from .families import Family, FamilyId, build_family, family_id, recognize_exception
from .graph import DegreeProfile, Graph, build, clique_number, complement, degree_profile, vertex_connectivity
from .graph6 import decode as graph6_decode
from .graph6 import encode as graph6_encode
from .scan import ScanConfig, ScanReport, run_scan
from .spectral import adjacency_radius, quotient_matrix, signless_laplacian_radius, spectral_report

__version__ = "0.1.0"

__all__ = [
    "adjacency_radius",
    "build",
    "build_family",
    "CapabilityError",
    "clique_number",
    "ClosureResult",
    "complement",
    "ConditionReport",
    "ConnectivityVerdict",
    "Decision",
    "degree_condition",
    "degree_profile",
    "DegreeProfile",
    "DomainError",
    "evaluate",
    "Family",
    "family_id",
    "FamilyId",
    "Graph",
    "graph6_decode",
    "graph6_encode",
    "Graph6ParseError",
    "GraphConstructionError",
    "is_closed",
    "is_k_leaf_connected",
    "l_closure",
    "LeafconError",
    "LeafVerdict",
    "nk_closure",
    "NumericalError",
    "oracle_is_k_leaf_connected",
    "ParameterError",
    "PreconditionError",
    "quotient_matrix",
    "recognize_exception",
    "Refutation",
    "run_scan",
    "ScanConfig",
    "ScanReport",
    "signless_laplacian_radius",
    "spanning_tree_with_leaf_set",
    "spectral_report",
    "spectral_thresholds",
    "threshold_edges",
    "vertex_connectivity",
]
