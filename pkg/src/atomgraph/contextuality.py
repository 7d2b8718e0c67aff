"""Kochen-Specker contextuality at the level of scenario graphs.

A graph admits a truth assignment (0-1 state) exactly when the maximum
independent weight under clique-membership counts reaches the number of
maximal cliques.  :func:`ks_check` computes both sides, plus the two
intermediate statements, by separate routines and refuses to report if
they disagree.
"""

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import exactla as la
from .errors import AtomGraphError, InternalConsistencyError
from .extension import context_extension
from .graph import (Graph, context_counts, cycle_graph, total_contexts,
                    weighted_independence)
from .orthorep import kcbs_umbrella
from .rational import fmt, fmt_float
from .states import find_state_with_value, is_state, quantum_state_eval, zero_one_state

VERDICT_KS = "KS-contextual"
VERDICT_01 = "admits 0-1 state"
SCOPE = "scenario-graph level"


@dataclass
class KSReport:
    graph: Graph
    c_total: int
    alpha_cg: Fraction
    witness: tuple
    zero_one: list
    verdict: str
    statements: tuple
    elapsed_ms: float = field(default=0.0, compare=False)

    @property
    def gap(self):
        return self.c_total - self.alpha_cg

    def to_dict(self, as_float=False):
        g = self.graph
        num = fmt_float if as_float else fmt
        return {
            "graph": {"n": g.n, "m": len(g.edges())},
            "c_total": self.c_total,
            "alpha_cg": {"value": num(self.alpha_cg),
                         "witness": [g.labels[i] for i in self.witness]},
            "zero_one": None if self.zero_one is None else {
                "values": {g.labels[i]: v for i, v in enumerate(self.zero_one)},
                "support": [g.labels[i] for i, v in enumerate(self.zero_one) if v],
            },
            "verdict": self.verdict,
            "scope": SCOPE,
            "statements": list(self.statements),
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def evaluate_S(g, p):
    """``sum(c_G(i) * p(i))`` for a state ``p``; always equals ``total_contexts(g)``."""
    if not is_state(g, p):
        raise AtomGraphError("not a state")
    cg = context_counts(g)
    return sum((c * Fraction(x) for c, x in zip(cg, p)), Fraction(0))


def nc_inequality(g):
    """``(alpha(G; c_G), c(G), gap)``; a positive gap certifies KS contextuality."""
    alpha, _ = weighted_independence(g, context_counts(g))
    c = total_contexts(g)
    return alpha, c, c - alpha


def ks_check(g):
    start = time.perf_counter()
    cg = context_counts(g)
    c = total_contexts(g)
    alpha, witness = weighted_independence(g, cg)
    if alpha > c:
        raise InternalConsistencyError(f"alpha(G;c_G)={alpha} exceeds c(G)={c}")

    zo = zero_one_state(g)
    s1 = alpha == c
    s2 = zo is not None
    s3 = s2 and evaluate_S(g, zo) == alpha
    s4 = find_state_with_value(g, cg, alpha) is not None
    statements = (s1, s2, s3, s4)
    if len(set(statements)) != 1:
        raise InternalConsistencyError(f"equivalent statements disagree: {statements}")
    verdict = VERDICT_01 if s1 else VERDICT_KS
    elapsed = (time.perf_counter() - start) * 1000
    return KSReport(g, c, alpha, witness, zo, verdict, statements, elapsed)


# -- built-in scenarios --------------------------------------------------------

@dataclass
class KCBSScenario:
    graph: Graph
    classical_bound: Fraction
    rep: object
    psi: tuple
    probabilities: list
    quantum_value: float
    violation: bool
    extended: Graph

    def to_dict(self):
        return {
            "graph": {"vertices": list(self.graph.labels),
                      "edges": [list(e) for e in self.graph.edge_labels()]},
            "classical_bound": fmt(self.classical_bound),
            "vectors": [[fmt_float(x) for x in v] for v in self.rep.vectors],
            "psi": [fmt_float(x) for x in self.psi],
            "probabilities": [fmt_float(x) for x in self.probabilities],
            "quantum_value": fmt_float(self.quantum_value),
            "violation": self.violation,
            "extended": {"vertices": list(self.extended.labels),
                         "edges": [list(e) for e in self.extended.edge_labels()]},
        }


def kcbs_scenario():
    g = cycle_graph(5)
    bound, _ = weighted_independence(g)
    rep, psi = kcbs_umbrella()
    rho = np.outer(psi, psi)
    probs = quantum_state_eval(rep.vectors, rho)
    value = float(sum(probs))
    return KCBSScenario(g, bound, rep, psi, probs, value, value > bound, context_extension(g))


# Cabello, Estebaranz and Garcia-Alcaine's 18 rays in R^4, grouped into the
# nine orthogonal bases; every ray occurs in exactly two bases.
CABELLO18_BASES = (
    ((0, 0, 0, 1), (0, 0, 1, 0), (1, 1, 0, 0), (1, -1, 0, 0)),
    ((0, 0, 0, 1), (0, 1, 0, 0), (1, 0, 1, 0), (1, 0, -1, 0)),
    ((1, -1, 1, -1), (1, -1, -1, 1), (1, 1, 0, 0), (0, 0, 1, 1)),
    ((1, -1, 1, -1), (1, 1, 1, 1), (1, 0, -1, 0), (0, 1, 0, -1)),
    ((0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 1), (1, 0, 0, -1)),
    ((1, -1, -1, 1), (1, 1, 1, 1), (1, 0, 0, -1), (0, 1, -1, 0)),
    ((1, 1, -1, 1), (1, 1, 1, -1), (1, -1, 0, 0), (0, 0, 1, 1)),
    ((1, 1, -1, 1), (-1, 1, 1, 1), (1, 0, 1, 0), (0, 1, 0, -1)),
    ((1, 1, 1, -1), (-1, 1, 1, 1), (1, 0, 0, 1), (0, 1, -1, 0)),
)


def _ray(v):
    return la.primitive([Fraction(x) for x in v])


def cabello18_vectors():
    """Distinct rays in first-appearance order, after checking the fixture."""
    rays = []
    for basis in CABELLO18_BASES:
        for v in basis:
            r = _ray(v)
            if r not in rays:
                rays.append(r)
    verify_cabello18(rays)
    return rays


def verify_cabello18(rays=None):
    """Every basis is pairwise orthogonal; 18 distinct rays, each in two bases."""
    for basis in CABELLO18_BASES:
        for u, v in combinations(basis, 2):
            if la.dot(u, v) != 0:
                raise InternalConsistencyError(f"{u} and {v} share a basis but are not orthogonal")
    if rays is None:
        rays = {_ray(v) for basis in CABELLO18_BASES for v in basis}
    if len(set(rays)) != 18:
        raise InternalConsistencyError(f"expected 18 distinct rays, found {len(set(rays))}")
    for r in rays:
        count = sum(_ray(v) == r for basis in CABELLO18_BASES for v in basis)
        if count != 2:
            raise InternalConsistencyError(f"ray {r} appears in {count} bases")
    return True


def orthogonality_graph(vectors, labels=None):
    """Graph on ``vectors`` with edges between exactly orthogonal pairs."""
    labels = [str(i) for i in range(len(vectors))] if labels is None else labels
    edges = [(labels[i], labels[j]) for i, j in combinations(range(len(vectors)), 2)
             if la.dot(vectors[i], vectors[j]) == 0]
    return Graph(labels, edges)


def cabello18_graph():
    rays = cabello18_vectors()
    labels = ["v" + "".join("+" if x > 0 else "-" if x < 0 else "0" for x in r) for r in rays]
    return orthogonality_graph(rays, labels)


def cabello18():
    return ks_check(cabello18_graph())


def basis_parity_argument():
    """The parity obstruction on the nine bases.

    A truth assignment picks one ray per basis, but each ray lies in two
    bases, so the number of bases would be even; it is nine.
    Returns ``(memberships_all_even, n_bases)``.
    """
    counts = {}
    for basis in CABELLO18_BASES:
        for v in basis:
            r = _ray(v)
            counts[r] = counts.get(r, 0) + 1
    return all(c % 2 == 0 for c in counts.values()), len(CABELLO18_BASES)
