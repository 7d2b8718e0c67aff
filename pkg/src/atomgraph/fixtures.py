"""Named projector configurations and graphs used by tests and the CLI."""

from . import exactla as la
from .contextuality import cabello18_graph
from .graph import bowtie_graph, cycle_graph


def fig1_projectors():
    """Qubit projectors onto |0>, |1>, |+>, |->."""
    vecs = {"P0": (1, 0), "P1": (0, 1), "P+": (1, 1), "P-": (1, -1)}
    return list(vecs), [la.projector_onto([v], 2) for v in vecs.values()]


def fig2_projectors():
    """Five rank-1 projectors in R^3: c, a1, b1 and c, a2, b2 pairwise orthogonal."""
    vecs = {"c": (1, 0, 0), "a1": (0, 1, 0), "b1": (0, 0, 1),
            "a2": (0, 1, 1), "b2": (0, 1, -1)}
    return list(vecs), [la.projector_onto([v], 3) for v in vecs.values()]


def boolean_projectors(n):
    """Coordinate projectors of R^n; they generate the Boolean algebra 2^n."""
    eye = la.identity(n)
    return [f"e{i + 1}" for i in range(n)], [la.projector_onto([eye[i]], n) for i in range(n)]


BUILTIN_GRAPHS = {
    "kcbs": lambda: cycle_graph(5),
    "pentagon": lambda: cycle_graph(5),
    "cabello18": cabello18_graph,
    "fig3-bowtie": bowtie_graph,
}

BUILTIN_PROJECTORS = {
    "fig1": fig1_projectors,
    "fig2": fig2_projectors,
    "fig3-bowtie": fig2_projectors,
    "boolean3": lambda: boolean_projectors(3),
}
