"""Faithful, linearly independent orthogonal co-representations.

Vertices ``i`` and ``j`` are adjacent exactly when their vectors are
orthogonal.  Vectors are kept as primitive integer vectors rather than unit
vectors: unit norms are usually irrational, and both faithfulness and linear
independence are invariant under rescaling.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import exactla as la
from .graph import Graph, cycle_graph
from .rational import fmt, fmt_float, parse_vector


@dataclass(frozen=True)
class OrthoRep:
    graph: Graph
    vectors: tuple
    gram: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(self.vectors) != self.graph.n:
            raise ValueError("one vector per vertex required")
        if len({len(v) for v in self.vectors}) > 1:
            raise ValueError("vectors must share one dimension")
        if self.gram is None:
            object.__setattr__(self, "gram", _gram(self.vectors))

    @property
    def dimension(self):
        return len(self.vectors[0]) if self.vectors else 0

    def vector(self, label):
        return self.vectors[self.graph.index(label)]

    def normalized(self):
        """Unit vectors as floats (presentation only)."""
        out = []
        for v in self.vectors:
            norm = math.sqrt(sum(float(x) ** 2 for x in v))
            out.append(tuple(float(x) / norm for x in v))
        return out


def _gram(vectors):
    return tuple(tuple(sum(a * b for a, b in zip(u, v)) for v in vectors) for u in vectors)


def _coefficient_tuples(r):
    """Integer tuples in Z^r ordered by max-norm 0, 1, 2, ... then lexicographically."""
    yield (0,) * r
    if r == 0:
        return
    k = 1
    while True:
        for t in product(range(-k, k + 1), repeat=r):
            if max(abs(x) for x in t) == k:
                yield t
        k += 1


def construct_flior(g):
    """Build a FLIOR of ``g`` in dimension ``g.n``, processing vertices in input order.

    Inductive step for vertex m: write the new vector as
    ``sum x_i v_i + e_m`` where ``e_m`` spans the orthogonal complement of the
    earlier vectors inside the first m+1 coordinates.  Adjacent earlier
    vertices give linear equations on ``x`` (via the Gram matrix); the
    non-adjacent ones must avoid finitely many hyperplanes of the solution
    space, found by walking integer coefficient tuples in max-norm order.
    """
    n = g.n
    if n == 0:
        raise ValueError("graph must be nonempty")
    vectors = []
    for m in range(n):
        if m == 0:
            e = (Fraction(1),)
        else:
            (e,) = la.nullspace([v[: m + 1] for v in vectors])
        e = tuple(e) + (Fraction(0),) * (n - m - 1)

        G = la.gram(vectors)
        adjacent = [i for i in range(m) if g.has_edge(m, i)]
        others = [i for i in range(m) if not g.has_edge(m, i)]
        eq_rows = [G[i] for i in adjacent]
        S = la.nullspace(eq_rows, ncols=m) if m else []

        x = None
        for t in _coefficient_tuples(len(S)):
            cand = [sum((c * b[j] for c, b in zip(t, S)), Fraction(0)) for j in range(m)]
            if all(la.dot(G[i], cand) != 0 for i in others):
                x = cand
                break
        v = list(e)
        for coef, u in zip(x or [], vectors):
            if coef:
                v = [a + coef * b for a, b in zip(v, u)]
        vectors.append(la.primitive(v))
    return OrthoRep(g, tuple(vectors))


def verify_faithful(g, rep):
    vectors = rep.vectors
    if len(vectors) != g.n:
        return False
    if any(all(x == 0 for x in v) for v in vectors):
        return False
    if len(set(map(tuple, vectors))) != len(vectors):
        return False
    gram = rep.gram
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if g.has_edge(i, j) != (gram[i][j] == 0):
                return False
    return True


def verify_linear_independence(rep):
    if not rep.vectors:
        return True
    return la.rank([tuple(map(Fraction, v)) for v in rep.vectors]) == len(rep.vectors)


def rep_from_vectors(g, vectors):
    return OrthoRep(g, tuple(tuple(Fraction(x) for x in v) for v in vectors))


def kcbs_umbrella():
    """The 3-d pentagon representation achieving the KCBS quantum value.

    Vectors sit on a cone around the z axis, consecutive ones 4*pi/5 apart in
    azimuth; the cone angle makes neighbours orthogonal, which forces
    ``cos^2(theta) = cos(pi/5) / (1 + cos(pi/5)) = 1/sqrt(5)``.
    Returns ``(rep, psi)`` with float unit vectors and ``psi = (0, 0, 1)``.
    """
    c = math.cos(math.pi / 5)
    cos_t = math.sqrt(c / (1 + c))
    sin_t = math.sqrt(1 - cos_t * cos_t)
    vectors = []
    for k in range(5):
        phi = 4 * math.pi * k / 5
        vectors.append((sin_t * math.cos(phi), sin_t * math.sin(phi), cos_t))
    return OrthoRep(cycle_graph(5), tuple(vectors)), (0.0, 0.0, 1.0)


def rep_to_dict(rep, as_float=False):
    if as_float:
        vecs = rep.normalized()
        return {"dimension": rep.dimension,
                "vectors": {label: [fmt_float(x) for x in v]
                            for label, v in zip(rep.graph.labels, vecs)}}
    return {"dimension": rep.dimension,
            "vectors": {label: [fmt(x) for x in v]
                        for label, v in zip(rep.graph.labels, rep.vectors)}}


def rep_from_dict(g, obj):
    vectors = obj["vectors"]
    missing = set(g.labels) - set(vectors)
    if missing:
        raise ValueError(f"no vector for vertices {sorted(missing)}")
    rep = OrthoRep(g, tuple(parse_vector(vectors[label]) for label in g.labels))
    if rep.dimension != obj.get("dimension", rep.dimension):
        raise ValueError("declared dimension does not match vector length")
    return rep
