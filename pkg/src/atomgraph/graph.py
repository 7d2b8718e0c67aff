"""Finite simple graphs: cliques, weighted independence, isomorphism.

Vertices are addressed by index internally; labels are opaque strings kept
for I/O and reports.  A :class:`Graph` is immutable once built, so derived
data (the maximal clique list) is cached on the instance.
"""

from fractions import Fraction
from itertools import combinations

from .lp import feasible_point
from .rational import to_fraction

VP_MAX_VERTICES = 20


class Graph:
    """Labeled simple undirected graph."""

    __slots__ = ("labels", "adj", "_index", "_cliques")

    def __init__(self, vertices, edges=()):
        labels = tuple(str(v) for v in vertices)
        index = {}
        for i, label in enumerate(labels):
            if label in index:
                raise ValueError(f"duplicate vertex label {label!r}")
            index[label] = i
        adj = [set() for _ in labels]
        for a, b in edges:
            try:
                i, j = index[str(a)], index[str(b)]
            except KeyError as exc:
                raise ValueError(f"edge references unknown vertex {exc.args[0]!r}") from None
            if i == j:
                raise ValueError(f"self-loop on vertex {labels[i]!r}")
            adj[i].add(j)
            adj[j].add(i)
        self.labels = labels
        self.adj = tuple(frozenset(s) for s in adj)
        self._index = index
        self._cliques = None

    @classmethod
    def from_index_edges(cls, n, edges, labels=None):
        labels = [str(i) for i in range(n)] if labels is None else list(labels)
        if len(labels) != n:
            raise ValueError("label count does not match vertex count")
        return cls(labels, [(labels[i], labels[j]) for i, j in edges])

    @property
    def n(self):
        return len(self.labels)

    def index(self, label):
        return self._index[str(label)]

    def has_edge(self, i, j):
        return j in self.adj[i]

    def edges(self):
        return [(i, j) for i in range(self.n) for j in sorted(self.adj[i]) if i < j]

    def edge_labels(self):
        return [(self.labels[i], self.labels[j]) for i, j in self.edges()]

    def degree(self, i):
        return len(self.adj[i])

    def induced(self, indices):
        indices = list(indices)
        keep = set(indices)
        edges = [(self.labels[i], self.labels[j]) for i, j in self.edges()
                 if i in keep and j in keep]
        return Graph([self.labels[i] for i in indices], edges)

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.labels == other.labels
                and self.adj == other.adj)

    def __hash__(self):
        return hash((self.labels, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges())})"


# -- builders ---------------------------------------------------------------

def cycle_graph(n, labels=None):
    return Graph.from_index_edges(n, [(i, (i + 1) % n) for i in range(n)], labels)


def path_graph(n, labels=None):
    return Graph.from_index_edges(n, [(i, i + 1) for i in range(n - 1)], labels)


def complete_graph(n, labels=None):
    return Graph.from_index_edges(n, list(combinations(range(n), 2)), labels)


def empty_graph(n, labels=None):
    return Graph.from_index_edges(n, [], labels)


def bowtie_graph():
    """Two triangles sharing the vertex ``c``: the atom graph of the five-ray configuration."""
    return Graph(["c", "a1", "b1", "a2", "b2"],
                 [("c", "a1"), ("c", "b1"), ("a1", "b1"),
                  ("c", "a2"), ("c", "b2"), ("a2", "b2")])


# -- cliques ----------------------------------------------------------------

def maximal_cliques(g):
    """All inclusion-maximal cliques, each a sorted index tuple, in lex order.

    Bron-Kerbosch with Tomita pivoting.  Isolated vertices come back as
    singleton cliques.
    """
    if g._cliques is None:
        out = []
        adj = g.adj

        def expand(R, P, X):
            if not P and not X:
                out.append(tuple(sorted(R)))
                return
            pivot = max(P | X, key=lambda u: len(P & adj[u]))
            for v in sorted(P - adj[pivot]):
                expand(R + [v], P & adj[v], X & adj[v])
                P = P - {v}
                X = X | {v}

        if g.n:
            expand([], frozenset(range(g.n)), frozenset())
        g._cliques = tuple(sorted(out))
    return list(g._cliques)


def context_counts(g):
    """Number of maximal cliques through each vertex."""
    counts = [0] * g.n
    for clique in maximal_cliques(g):
        for v in clique:
            counts[v] += 1
    return counts


def total_contexts(g):
    return len(maximal_cliques(g))


def graph_dimension(g):
    """Size of a maximum clique."""
    if g.n == 0:
        raise ValueError("dimension of the empty graph is undefined")
    return max(len(c) for c in maximal_cliques(g))


def is_clique(g, vertices):
    return all(g.has_edge(i, j) for i, j in combinations(vertices, 2))


def is_independent(g, vertices):
    return not any(g.has_edge(i, j) for i, j in combinations(vertices, 2))


def independent_sets(g):
    """Yield every independent set (including the empty set) as a sorted tuple."""
    n = g.n

    def rec(start, chosen, blocked):
        yield tuple(chosen)
        for v in range(start, n):
            if v not in blocked:
                chosen.append(v)
                yield from rec(v + 1, chosen, blocked | g.adj[v])
                chosen.pop()

    yield from rec(0, [], frozenset())


# -- weighted independence --------------------------------------------------

def _coerce_weights(g, w):
    if w is None:
        return [Fraction(1)] * g.n
    w = [to_fraction(x) for x in w]
    if len(w) != g.n:
        raise ValueError(f"weight vector has length {len(w)}, expected {g.n}")
    if any(x < 0 for x in w):
        raise ValueError("weights must be nonnegative")
    return w


def weighted_independence(g, w=None):
    """Exact maximum-weight independent set by branch and bound.

    Returns ``(value, witness)`` where ``witness`` is a sorted index tuple.
    Upper bounds come from a greedy clique cover of the remaining candidates
    (an independent set takes at most one vertex per clique).
    """
    w = _coerce_weights(g, w)
    adj = g.adj

    def cover_bound(cands):
        total = Fraction(0)
        remaining = sorted(cands, key=lambda v: (-w[v], v))
        while remaining:
            head = remaining[0]
            total += w[head]
            clique = [head]
            rest = []
            for v in remaining[1:]:
                if all(v in adj[u] for u in clique):
                    clique.append(v)
                else:
                    rest.append(v)
            remaining = rest
        return total

    # Greedy incumbent.
    best_val = Fraction(0)
    best_set = []
    blocked = set()
    for v in sorted(range(g.n), key=lambda v: (-w[v], len(adj[v]), v)):
        if v not in blocked and w[v] > 0:
            best_set.append(v)
            best_val += w[v]
            blocked |= adj[v] | {v}
    best = [best_val, tuple(sorted(best_set))]

    def search(cands, value, chosen):
        if not cands:
            if value > best[0]:
                best[0], best[1] = value, tuple(sorted(chosen))
            return
        if value + cover_bound(cands) <= best[0]:
            return
        v = max(cands, key=lambda u: (w[u], len(adj[u] & cands), -u))
        chosen.append(v)
        search(cands - adj[v] - {v}, value + w[v], chosen)
        chosen.pop()
        search(cands - {v}, value, chosen)

    search(frozenset(v for v in range(g.n) if w[v] > 0), Fraction(0), [])
    return best[0], best[1]


# -- vertex packing polytope ------------------------------------------------

def vp_membership(g, x):
    """Whether ``x`` lies in the convex hull of independent-set incidence vectors."""
    if g.n > VP_MAX_VERTICES:
        raise ValueError(f"vp_membership limited to {VP_MAX_VERTICES} vertices, got {g.n}")
    x = [to_fraction(t) for t in x]
    if len(x) != g.n:
        raise ValueError(f"vector has length {len(x)}, expected {g.n}")
    if any(t < 0 or t > 1 for t in x):
        return False
    sets = list(independent_sets(g))
    A = [[Fraction(int(v in s)) for s in sets] for v in range(g.n)]
    A.append([Fraction(1)] * len(sets))
    return feasible_point(A, x + [Fraction(1)]) is not None


# -- isomorphism ------------------------------------------------------------

def _invariants(g):
    cg = context_counts(g)
    return [(g.degree(v), cg[v]) for v in range(g.n)]


def is_isomorphism(g1, g2, mapping):
    """Check that ``mapping`` (index -> index) is an adjacency-preserving bijection."""
    if g1.n != g2.n or len(mapping) != g1.n:
        return False
    if sorted(mapping) != list(range(g1.n)) or sorted(mapping.values()) != list(range(g2.n)):
        return False
    return all(g1.has_edge(i, j) == g2.has_edge(mapping[i], mapping[j])
               for i, j in combinations(range(g1.n), 2))


def graph_isomorphic(g1, g2):
    """Find an isomorphism ``g1 -> g2`` as an index dict, or return ``None``.

    Plain backtracking; candidates are pruned by (degree, clique-membership
    count) and by consistency with already-mapped neighbours.  Exponential in
    the worst case, fine for the desk-scale graphs this package handles.
    """
    if g1.n != g2.n or len(g1.edges()) != len(g2.edges()):
        return None
    inv1, inv2 = _invariants(g1), _invariants(g2)
    if sorted(inv1) != sorted(inv2):
        return None
    if sorted(map(len, maximal_cliques(g1))) != sorted(map(len, maximal_cliques(g2))):
        return None

    n = g1.n
    # Visit order: most constrained first, then keep growing along edges.
    order = []
    seen = set()
    while len(order) < n:
        rest = [v for v in range(n) if v not in seen]
        v = max(rest, key=lambda u: (len(g1.adj[u] & seen), g1.degree(u), -u))
        order.append(v)
        seen.add(v)

    mapping = {}
    used = set()

    def extend(k):
        if k == n:
            return True
        u = order[k]
        for v in range(n):
            if v in used or inv2[v] != inv1[u]:
                continue
            if all(g1.has_edge(u, a) == g2.has_edge(v, b) for a, b in mapping.items()):
                mapping[u] = v
                used.add(v)
                if extend(k + 1):
                    return True
                del mapping[u]
                used.discard(v)
        return False

    return dict(mapping) if extend(0) else None
