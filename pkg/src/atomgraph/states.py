"""States on graphs and on partial Boolean algebras.

Graph states are vertex vectors summing to 1 on every maximal clique
(substates: at most 1).  Values are exact :class:`~fractions.Fraction`
everywhere except :func:`quantum_state_eval`, which also accepts floats.
"""

from fractions import Fraction

import numpy as np

from . import exactla as la
from .errors import AtomGraphError
from .graph import maximal_cliques
from .lp import feasible_point
from .pba import atom_graph, atoms, decompose, is_exclusive
from .rational import fmt, fmt_float, parse, to_fraction

QUANTUM_TOL = 1e-12


def _values(g, p):
    p = [to_fraction(x) for x in p]
    if len(p) != g.n:
        raise ValueError(f"vector has length {len(p)}, expected {g.n}")
    return p


def is_state(g, p):
    p = _values(g, p)
    if any(x < 0 or x > 1 for x in p):
        return False
    return all(sum(p[v] for v in C) == 1 for C in maximal_cliques(g))


def is_substate(g, p):
    p = _values(g, p)
    if any(x < 0 or x > 1 for x in p):
        return False
    return all(sum(p[v] for v in C) <= 1 for C in maximal_cliques(g))


def _state_constraints(g):
    return [[Fraction(int(v in C)) for v in range(g.n)] for C in maximal_cliques(g)]


def find_state(g):
    """Some rational state on ``g``, or ``None`` when the clique equations are infeasible.

    Upper bounds ``p(v) <= 1`` are implied: every vertex is in a maximal
    clique summing to 1 with nonnegative terms.
    """
    A = _state_constraints(g)
    return feasible_point(A, [Fraction(1)] * len(A)) if g.n else []


def find_state_with_value(g, weights, value):
    """A state ``p`` with ``sum(weights[i] * p[i]) == value``, or ``None``."""
    A = _state_constraints(g)
    A.append([to_fraction(w) for w in weights])
    return feasible_point(A, [Fraction(1)] * (len(A) - 1) + [to_fraction(value)])


def zero_one_state(g):
    """A 0-1 state as a list of ints, or ``None``.

    The support of a 0-1 state meets every maximal clique exactly once, so
    this is exact cover with cliques as columns and vertices as rows
    (Algorithm X on dicts of sets).  Branches on the clique with the fewest
    remaining candidate vertices, trying vertices that lie in fewer cliques
    first since they rule out less of the graph.
    """
    cliques = maximal_cliques(g)
    X = {k: set(C) for k, C in enumerate(cliques)}
    Y = {v: [k for k, C in enumerate(cliques) if v in C] for v in range(g.n)}
    solution = []

    def select(v):
        removed = []
        for k in Y[v]:
            for u in X[k]:
                for k2 in Y[u]:
                    if k2 != k:
                        X[k2].discard(u)
            removed.append(X.pop(k))
        return removed

    def deselect(v, removed):
        for k in reversed(Y[v]):
            X[k] = removed.pop()
            for u in X[k]:
                for k2 in Y[u]:
                    if k2 != k:
                        X[k2].add(u)

    def search():
        if not X:
            return True
        k = min(X, key=lambda c: (len(X[c]), len(cliques[c]), c))
        for v in sorted(X[k], key=lambda u: (len(Y[u]), u)):
            solution.append(v)
            removed = select(v)
            if search():
                return True
            deselect(v, removed)
            solution.pop()
        return False

    if not search():
        return None
    support = set(solution)
    return [int(v in support) for v in range(g.n)]


def extend_substate(g, q):
    """The unique state on ``context_extension(g)`` restricting to ``q``.

    Added vertex ``x_k`` receives ``1 - sum(q over clique k)``.  Vertex order
    of the result matches ``context_extension(g)``: base vertices first.
    """
    q = _values(g, q)
    if not is_substate(g, q):
        raise AtomGraphError("not a substate")
    return q + [1 - sum((q[v] for v in C), Fraction(0)) for C in maximal_cliques(g)]


def restrict_to_base(g, state):
    """Inverse of :func:`extend_substate`: keep the first ``g.n`` entries."""
    return list(state[: g.n])


# -- states on algebras ------------------------------------------------------

def extend_state_to_pba(b, p):
    """Extend a state on ``atom_graph(b)`` to all of ``b``: ``join(A) -> sum p(A)``."""
    if not is_exclusive(b):
        raise AtomGraphError("state extension requires an exclusive algebra")
    ag = atom_graph(b)
    p = [to_fraction(x) for x in p]
    if not is_state(ag, p):
        raise AtomGraphError("input is not a state on the atom graph")
    position = {a: i for i, a in enumerate(atoms(b))}
    out = []
    for x in range(len(b)):
        _, subset = decompose(b, x)
        out.append(sum((p[position[a]] for a in subset), Fraction(0)))
    return out


def restrict_pba_state(b, s):
    return [s[a] for a in atoms(b)]


def verify_pba_state(b, s):
    s = [to_fraction(x) for x in s]
    if len(s) != len(b):
        return False
    if s[b.zero] != 0:
        return False
    if any(x < 0 or x > 1 for x in s):
        return False
    if any(s[b.neg[x]] != 1 - s[x] for x in range(len(b))):
        return False
    for x, y in b.compat_pairs():
        if s[b.join(x, y)] + s[b.meet(x, y)] != s[x] + s[y]:
            return False
    return True


# -- quantum states -----------------------------------------------------------

def pure_state(psi):
    """Density matrix of a (not necessarily normalized) real state vector."""
    if all(isinstance(x, (int, Fraction)) for x in psi):
        psi = [Fraction(x) for x in psi]
        norm = la.dot(psi, psi)
        return tuple(tuple(a * b / norm for b in psi) for a in psi)
    v = np.asarray(psi, dtype=float)
    return np.outer(v, v) / float(v @ v)


def _is_exact(m):
    return isinstance(m, (tuple, list)) and all(
        isinstance(x, (int, Fraction)) for row in m for x in row)


def _float_projector(item):
    if isinstance(item, la.Projector):
        return np.array(item.matrix, dtype=float)
    a = np.asarray(item, dtype=float)
    if a.ndim == 1:
        return np.outer(a, a) / float(a @ a)
    return a


def quantum_state_eval(projectors, rho):
    """``tr(rho P)`` for each projector (or ray, given as a vector).

    Exact when ``rho`` and all projectors are rational; otherwise floats,
    clipped to [0, 1] if they stray by at most 1e-12.
    """
    projectors = list(projectors)
    if _is_exact(rho) and all(isinstance(p, la.Projector) for p in projectors):
        rho = la.as_matrix(rho)
        d = len(rho)
        if la.transpose(rho) != rho or sum(rho[i][i] for i in range(d)) != 1:
            raise ValueError("density matrix must be symmetric with unit trace")
        out = []
        for p in projectors:
            if p.dim != d:
                raise ValueError(f"projector of order {p.dim} against density matrix of order {d}")
            out.append(sum((rho[i][j] * p.matrix[j][i] for i in range(d) for j in range(d)),
                           Fraction(0)))
        return out

    rho = np.asarray(rho, dtype=float)
    d = rho.shape[0]
    if rho.shape != (d, d):
        raise ValueError("density matrix must be square")
    if abs(np.trace(rho) - 1) > QUANTUM_TOL or not np.allclose(rho, rho.T, atol=QUANTUM_TOL):
        raise ValueError("density matrix must be symmetric with unit trace")
    out = []
    for item in projectors:
        P = _float_projector(item)
        if P.shape != (d, d):
            raise ValueError(f"projector of shape {P.shape} against density matrix of order {d}")
        value = float(np.trace(rho @ P))
        if -QUANTUM_TOL <= value < 0:
            value = 0.0
        elif 1 < value <= 1 + QUANTUM_TOL:
            value = 1.0
        elif not 0 <= value <= 1:
            raise ValueError(f"expectation {value} outside [0, 1]; rho is not a density matrix")
        out.append(value)
    return out


# -- serialization -------------------------------------------------------------

def state_to_dict(labels, values, substate=False, as_float=False):
    f = fmt_float if as_float else fmt
    out = {str(label): f(v) for label, v in zip(labels, values)}
    if substate:
        out["substate"] = True
    return out


def state_from_dict(g, obj):
    """Parse ``{label: "p/q"}`` into a vector in vertex order; returns ``(values, substate)``."""
    obj = dict(obj)
    substate = obj.pop("substate", False) is True
    missing = set(g.labels) - set(obj)
    if missing:
        raise ValueError(f"no value for vertices {sorted(missing)}")
    extra = set(obj) - set(g.labels)
    if extra:
        raise ValueError(f"unknown vertices {sorted(extra)}")
    return [parse(obj[label]) for label in g.labels], substate
