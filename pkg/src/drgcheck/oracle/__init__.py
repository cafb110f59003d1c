"""Explicit small graphs used as ground truth for the feasibility chain."""

from .coclique import CocliqueWitness, max_coclique
from .graph import (
    CatalogEntry,
    DisconnectedGraph,
    Graph,
    catalog,
    clebsch_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    desargues_graph,
    distance_partition,
    dodecahedron,
    format_edgelist,
    generalized_petersen,
    hamming_graph,
    heawood_graph,
    icosahedron,
    is_odd_cycle,
    johnson_graph,
    kneser_graph,
    line_graph,
    local_graph,
    paley_graph,
    parse_edgelist,
    petersen_graph,
    verify_distance_regular,
)
from .lemmas import EIGEN_TOL, LemmaCheck, LemmaReport, second_largest_eigenvalue, validate_lemmas

__all__ = [
    "CatalogEntry",
    "CocliqueWitness",
    "DisconnectedGraph",
    "EIGEN_TOL",
    "Graph",
    "LemmaCheck",
    "LemmaReport",
    "catalog",
    "clebsch_graph",
    "complete_bipartite",
    "complete_graph",
    "cycle_graph",
    "desargues_graph",
    "distance_partition",
    "dodecahedron",
    "format_edgelist",
    "generalized_petersen",
    "hamming_graph",
    "heawood_graph",
    "icosahedron",
    "is_odd_cycle",
    "johnson_graph",
    "kneser_graph",
    "line_graph",
    "local_graph",
    "max_coclique",
    "paley_graph",
    "parse_edgelist",
    "petersen_graph",
    "second_largest_eigenvalue",
    "validate_lemmas",
    "verify_distance_regular",
]
