"""Atom graphs, partial Boolean algebras and graph-level Kochen-Specker checks."""

from .errors import (AtomGraphError, ClosureBlowup, IncompatibleElements,
                     InternalConsistencyError, NotAtomGraph)
from .graph import (Graph, bowtie_graph, complete_graph, context_counts, cycle_graph,
                    empty_graph, graph_dimension, graph_isomorphic, maximal_cliques,
                    path_graph, total_contexts, vp_membership, weighted_independence)

__all__ = [
    "AtomGraphError", "ClosureBlowup", "IncompatibleElements", "InternalConsistencyError",
    "NotAtomGraph", "Graph", "bowtie_graph", "complete_graph", "context_counts",
    "cycle_graph", "empty_graph", "graph_dimension", "graph_isomorphic", "maximal_cliques",
    "path_graph", "total_contexts", "vp_membership", "weighted_independence",
]
