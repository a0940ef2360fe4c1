"""Hecke algebra actions on path algebras of labelled quivers."""

from .laurent import LaurentPoly, Specialization, V, V_INV, BETA
from .coxeter import CoxeterDatum, HeckeDatum, alternating_word, s2fin, validate_hecke_datum
from .graph import DGraph, PreDGraph, dual_graph, graph_from_json, import_kl_wgraph
from .pathalg import Path, PathElement

__all__ = [
    "LaurentPoly", "Specialization", "V", "V_INV", "BETA",
    "CoxeterDatum", "HeckeDatum", "alternating_word", "s2fin", "validate_hecke_datum",
    "DGraph", "PreDGraph", "dual_graph", "graph_from_json", "import_kl_wgraph",
    "Path", "PathElement",
]
