"""Context extensions of graphs and their projector realization.

``context_extension`` adds one fresh vertex to every maximal clique;
``realize_extension`` builds an exclusive projector algebra whose atom graph
is exactly that extension.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import exactla as la
from .errors import InternalConsistencyError
from .graph import Graph, graph_isomorphic, is_isomorphism, maximal_cliques
from .orthorep import OrthoRep, construct_flior
from .pba import DEFAULT_CAP, atom_graph, generate_pba


def _fresh_labels(g, count):
    prefix = "x"
    taken = set(g.labels)
    while any(f"{prefix}{k}" in taken for k in range(count)):
        prefix += "x"
    return [f"{prefix}{k}" for k in range(count)]


def _extend(g, cliques):
    fresh = _fresh_labels(g, len(cliques))
    edges = list(g.edge_labels())
    for x, C in zip(fresh, cliques):
        edges += [(g.labels[v], x) for v in C]
    return Graph(list(g.labels) + fresh, edges), dict(zip(range(len(cliques)), fresh))


def context_extension(g):
    """Add vertex ``x{k}`` joined to every member of the k-th maximal clique."""
    cliques = maximal_cliques(g)
    ext, added = _extend(g, cliques)
    expected = sorted(tuple(sorted(C + (ext.index(added[k]),))) for k, C in enumerate(cliques))
    if maximal_cliques(ext) != expected:
        raise InternalConsistencyError("extension produced unexpected maximal cliques")
    return ext


def added_vertices(g):
    """Map clique index -> fresh label, as used by :func:`context_extension`."""
    return dict(enumerate(_fresh_labels(g, len(maximal_cliques(g)))))


def equal_dim_extension(g):
    """Add a fresh vertex only to maximal cliques smaller than the maximum size.

    All cliques of maximum size are left alone.  The result need not be an
    atom graph; no realizability claim is made.
    """
    cliques = maximal_cliques(g)
    if not cliques:
        return g
    top = max(map(len, cliques))
    ext, _ = _extend(g, [C for C in cliques if len(C) < top])
    return ext


def verify_induced_subgraph(g, h, embed):
    """Whether ``embed`` (label -> label) is an injective map preserving edges and non-edges."""
    images = [embed[label] for label in g.labels]
    if len(set(images)) != len(images):
        return False
    idx = [h.index(x) for x in images]
    return all(g.has_edge(i, j) == h.has_edge(idx[i], idx[j])
               for i, j in combinations(range(g.n), 2))


@dataclass
class ExtensionResult:
    base: Graph
    extended: Graph
    added: dict
    rep: OrthoRep
    atom_projectors: list
    algebra: object
    iso: dict


def realize_extension(g, cap=DEFAULT_CAP):
    """Projector algebra whose atom graph is ``context_extension(g)``.

    Each vertex gets the rank-1 projector onto its FLIOR vector; each maximal
    clique ``C_k`` gets ``not(join of its vertex projectors)``.  When ``g`` is
    complete its single clique spans the whole space, so the ambient space is
    padded by one coordinate to keep that complement nonzero.
    """
    extended = context_extension(g)
    cliques = maximal_cliques(g)
    added = added_vertices(g)

    rep = construct_flior(g)
    vectors = [tuple(v) for v in rep.vectors]
    d = g.n
    if len(cliques) == 1 and len(cliques[0]) == g.n:
        vectors = [v + (Fraction(0),) for v in vectors]
        d += 1
        rep = OrthoRep(g, tuple(vectors))

    vertex_proj = [la.projector_onto([v], d) for v in vectors]
    clique_proj = []
    for C in cliques:
        acc = la.zero_projector(d)
        for i in C:
            acc = la.join(acc, vertex_proj[i])
        clique_proj.append(la.complement(acc))
    atom_projectors = vertex_proj + clique_proj

    names = list(g.labels) + [added[k] for k in range(len(cliques))]
    algebra = generate_pba(atom_projectors, names=names, cap=cap)

    ag = atom_graph(algebra)
    if sorted(ag.labels) != sorted(extended.labels):
        raise InternalConsistencyError(
            f"atoms {sorted(ag.labels)} differ from extension vertices {sorted(extended.labels)}")
    canonical = {i: extended.index(label) for i, label in enumerate(ag.labels)}
    if not is_isomorphism(ag, extended, canonical):
        raise InternalConsistencyError("canonical correspondence is not an isomorphism")
    if graph_isomorphic(ag, extended) is None:
        raise InternalConsistencyError("isomorphism search disagrees with canonical map")
    iso = {label: label for label in ag.labels}
    return ExtensionResult(g, extended, added, rep, atom_projectors, algebra, iso)
