"""Finite partial Boolean algebras.

Two element models share the :class:`PartialBooleanAlgebra` interface:

* projector-backed algebras from :func:`generate_pba`, where compatibility
  is exact commutation;
* symbolic algebras from :func:`symbolic_from_atom_graph`, whose elements are
  classes of (maximal clique, atom subset) pairs that denote the same join.

Everything downstream (atoms, atom graphs, exclusivity, states) only talks to
the operation tables, so both models are interchangeable.
"""

from dataclasses import dataclass
from itertools import combinations

from . import exactla as la
from .errors import (AtomGraphError, ClosureBlowup, IncompatibleElements,
                     InternalConsistencyError, NotAtomGraph)
from .graph import Graph, graph_dimension, graph_isomorphic, is_isomorphism, maximal_cliques
from .rational import fmt_matrix

DEFAULT_CAP = 4096
_NAME_LIMIT = 32


@dataclass(frozen=True)
class SymbolicElement:
    """An equivalence class of ``(clique index, atom subset)`` representatives."""

    representative: tuple
    members: tuple

    def __repr__(self):
        k, subset = self.representative
        return f"SymbolicElement(clique={k}, atoms={list(subset)})"


class PartialBooleanAlgebra:
    """Finite pBA held as explicit tables over element indices.

    ``meet`` and ``join`` are keyed by ordered pairs ``(i, j)`` with ``i <= j``
    and exist exactly for compatible pairs.
    """

    def __init__(self, elements, names, compat, meet, join, neg, zero, one):
        self.elements = list(elements)
        self.names = list(names)
        self.compat = [frozenset(c) for c in compat]
        self._meet = dict(meet)
        self._join = dict(join)
        self.neg = list(neg)
        self.zero = zero
        self.one = one
        self._atoms = None
        self._leq = None
        self._contexts = None

    @classmethod
    def from_tables(cls, names, compat_pairs, meet, join, neg, zero, one, elements=None):
        """Build from raw tables keyed by element name (used for hand-made examples)."""
        index = {name: i for i, name in enumerate(names)}
        n = len(names)
        compat = [{i} for i in range(n)]
        for a, b in compat_pairs:
            compat[index[a]].add(index[b])
            compat[index[b]].add(index[a])

        def key(a, b):
            i, j = index[a], index[b]
            return (i, j) if i <= j else (j, i)

        mt = {key(a, b): index[c] for (a, b), c in meet.items()}
        jt = {key(a, b): index[c] for (a, b), c in join.items()}
        for i in range(n):
            mt.setdefault((i, i), i)
            jt.setdefault((i, i), i)
        negt = [index[neg[name]] for name in names]
        return cls(elements if elements is not None else list(names), names, compat,
                   mt, jt, negt, index[zero], index[one])

    def __len__(self):
        return len(self.elements)

    def index(self, name):
        return self.names.index(name)

    def compatible(self, i, j):
        return j in self.compat[i]

    def meet(self, i, j):
        try:
            return self._meet[(i, j) if i <= j else (j, i)]
        except KeyError:
            raise IncompatibleElements() from None

    def join(self, i, j):
        try:
            return self._join[(i, j) if i <= j else (j, i)]
        except KeyError:
            raise IncompatibleElements() from None

    def leq(self, i, j):
        return self.leq_matrix()[i][j]

    def leq_matrix(self):
        if self._leq is None:
            n = len(self)
            self._leq = [[self.compatible(i, j) and self.meet(i, j) == i for j in range(n)]
                         for i in range(n)]
        return self._leq

    def compat_pairs(self):
        return [(i, j) for i in range(len(self)) for j in sorted(self.compat[i]) if i < j]

    def __repr__(self):
        return f"PartialBooleanAlgebra(elements={len(self)})"


# -- projector model --------------------------------------------------------

def _derived_name(template, *parts):
    name = template.format(*parts)
    return name if len(name) <= _NAME_LIMIT else None


def _bound_names(labels):
    """Names for the bottom and top elements that avoid the given labels."""
    taken = set(labels)
    zero, one = "0", "1"
    while zero in taken or one in taken:
        zero, one = zero + "̂", one + "̂"
    return zero, one


def generate_pba(generators, names=None, cap=DEFAULT_CAP):
    """Close ``generators`` (plus 0 and 1) under complement and compatible meet/join.

    Compatibility is exact commutation.  Raises :class:`ClosureBlowup` once
    more than ``cap`` elements appear.
    """
    generators = list(generators)
    if not generators:
        raise ValueError("at least one generator is required")
    d = generators[0].dim
    if any(p.dim != d for p in generators):
        raise ValueError("generators must share one dimension")
    if names is None:
        names = [f"P{i}" for i in range(len(generators))]
    names = [str(x) for x in names]
    if len(names) != len(generators):
        raise ValueError("one name per generator required")

    elems = []
    labels = []
    used = set()
    index = {}

    def add(p, name):
        k = index.get(p)
        if k is not None:
            return k
        if len(elems) >= cap:
            raise ClosureBlowup(cap)
        k = len(elems)
        index[p] = k
        elems.append(p)
        if not name or name in used:
            name = f"e{k}"
        used.add(name)
        labels.append(name)
        return k

    zero_name, one_name = _bound_names(names)
    add(la.zero_projector(d), zero_name)
    add(la.identity_projector(d), one_name)
    for p, name in zip(generators, names):
        add(p, name)

    neg = {}
    meet, join = {}, {}
    compat = []
    k = 0
    while k < len(elems):
        p = elems[k]
        c = la.complement(p)
        nm = labels[k]
        neg[k] = add(c, nm[1:] if nm.startswith("¬") else _derived_name("¬{}", nm))
        compat.append({k})
        for j in range(k):
            q = elems[j]
            pq = la.matmul(q.matrix, p.matrix)
            if pq != la.matmul(p.matrix, q.matrix):
                continue
            compat[k].add(j)
            compat[j].add(k)
            m = la.Projector(pq, check=False)
            jn = la.Projector(la.matadd(la.matadd(q.matrix, p.matrix), pq, -1), check=False)
            meet[(j, k)] = add(m, _derived_name("({}∧{})", labels[j], labels[k]))
            join[(j, k)] = add(jn, _derived_name("({}∨{})", labels[j], labels[k]))
        meet[(k, k)] = k
        join[(k, k)] = k
        k += 1
    return PartialBooleanAlgebra(elems, labels, compat, meet, join,
                                 [neg[i] for i in range(len(elems))], 0, 1)


# -- structure queries -------------------------------------------------------

def atoms(b):
    """Minimal nonzero elements under ``<=`` (indices, ascending)."""
    if b._atoms is None:
        L = b.leq_matrix()
        out = []
        for a in range(len(b)):
            if a == b.zero:
                continue
            if all(x in (b.zero, a) or not L[x][a] for x in range(len(b))):
                out.append(a)
        b._atoms = tuple(out)
    return list(b._atoms)


def atom_graph(b):
    """Graph on the atoms, adjacent iff distinct and compatible.

    Vertex ``k`` of the result is element ``atoms(b)[k]``; labels are element names.
    """
    A = atoms(b)
    edges = [(b.names[x], b.names[y]) for x, y in combinations(A, 2) if b.compatible(x, y)]
    return Graph([b.names[a] for a in A], edges)


def is_atomic(b):
    A = atoms(b)
    L = b.leq_matrix()
    return all(x == b.zero or any(L[a][x] for a in A) for x in range(len(b)))


def is_exclusive(b):
    """Logical exclusivity: every exclusive pair is compatible."""
    L = b.leq_matrix()
    n = len(b)
    below = [[x for x in range(n) if L[x][c]] for c in range(n)]
    for c in range(n):
        for x in below[c]:
            for y in below[b.neg[c]]:
                if not b.compatible(x, y):
                    return False
    return True


def pba_dimension(b):
    return graph_dimension(atom_graph(b))


def _fold_join(b, items):
    acc = b.zero
    for x in items:
        acc = b.join(acc, x)
    return acc


def _context_table(b):
    """For each maximal clique of the atom graph: (atom indices, {subset: element})."""
    if b._contexts is None:
        A = atoms(b)
        out = []
        for clique in maximal_cliques(atom_graph(b)):
            K = tuple(A[v] for v in clique)
            table = {}
            for r in range(len(K) + 1):
                for sub in combinations(K, r):
                    table[frozenset(sub)] = _fold_join(b, sub)
            out.append((K, table))
        b._contexts = out
    return b._contexts


def maximal_contexts(b):
    """Element sets of the maximal Boolean subalgebras, one per maximal clique of AG(b).

    Each returned set is checked to be closed under complement, meet and join.
    """
    result = []
    for K, table in _context_table(b):
        elems = set(table.values())
        if len(elems) != 2 ** len(K):
            raise InternalConsistencyError(f"context on atoms {K} is not free Boolean")
        for x in elems:
            if b.neg[x] not in elems:
                raise InternalConsistencyError("context not closed under complement")
            for y in elems:
                if not b.compatible(x, y):
                    raise InternalConsistencyError("context contains incompatible pair")
                if b.meet(x, y) not in elems or b.join(x, y) not in elems:
                    raise InternalConsistencyError("context not closed under meet/join")
        result.append(tuple(sorted(elems)))
    return result


def decompose(b, x):
    """Write element ``x`` as the join of atoms inside one maximal context.

    Returns ``(context_index, frozenset_of_atom_indices)``.
    """
    for k, (_, table) in enumerate(_context_table(b)):
        for subset, y in table.items():
            if y == x:
                return k, subset
    raise AtomGraphError(f"element {b.names[x]!r} lies in no maximal context")


def generated_subalgebra(b, S):
    """Close ``S`` together with 0 and 1 under the operations of ``b``.

    Raises :class:`IncompatibleElements` if the closure meets an incompatible pair.
    """
    elems = set(S) | {b.zero, b.one}
    frontier = list(elems)
    while frontier:
        x = frontier.pop()
        new = {b.neg[x]}
        for y in list(elems):
            new.add(b.meet(x, y))
            new.add(b.join(x, y))
        for z in new - elems:
            elems.add(z)
            frontier.append(z)
    return elems


def is_boolean_algebra(b, elems):
    """Check the Boolean algebra axioms on a closed, pairwise-compatible subset."""
    elems = set(elems)
    zero, one = b.zero, b.one
    if zero not in elems or one not in elems:
        return False
    for x in elems:
        nx = b.neg[x]
        if nx not in elems or b.neg[nx] != x:
            return False
        if b.meet(x, nx) != zero or b.join(x, nx) != one:
            return False
        if b.meet(x, one) != x or b.join(x, zero) != x:
            return False
        for y in elems:
            if not b.compatible(x, y):
                return False
            if b.meet(x, b.join(x, y)) != x or b.join(x, b.meet(x, y)) != x:
                return False
            for z in elems:
                if b.meet(x, b.join(y, z)) != b.join(b.meet(x, y), b.meet(x, z)):
                    return False
    return True


# -- symbolic model from an atom graph ---------------------------------------

def is_same_join(g, A1, A2):
    """Whether two clique-subsets denote the same join.

    ``A1 = (clique, subset)`` with ``subset`` inside the maximal clique
    ``clique`` (both iterables of vertex indices), likewise ``A2``.  True iff
    ``(clique1 - subset1) | subset2`` and ``subset1 | (clique2 - subset2)`` are
    both maximal cliques of ``g``.
    """
    K1, S1 = frozenset(A1[0]), frozenset(A1[1])
    K2, S2 = frozenset(A2[0]), frozenset(A2[1])
    maximal = {frozenset(c) for c in maximal_cliques(g)}
    return ((K1 - S1) | S2) in maximal and (S1 | (K2 - S2)) in maximal


def symbolic_from_atom_graph(g):
    """Reconstruct the algebra whose atom graph is ``g``.

    Elements are classes of clique-subsets under :func:`is_same_join`.  The
    relation and every operation table are checked for well-definedness;
    failures raise :class:`NotAtomGraph`.
    """
    cliques = [frozenset(c) for c in maximal_cliques(g)]
    maximal = set(cliques)
    reps = []
    for k, K in enumerate(cliques):
        ordered = sorted(K)
        for r in range(len(ordered) + 1):
            for sub in combinations(ordered, r):
                reps.append((k, frozenset(sub)))
    rep_index = {rep: i for i, rep in enumerate(reps)}

    def same(r1, r2):
        (k1, s1), (k2, s2) = r1, r2
        K1, K2 = cliques[k1], cliques[k2]
        return ((K1 - s1) | s2) in maximal and (s1 | (K2 - s2)) in maximal

    parent = list(range(len(reps)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in combinations(range(len(reps)), 2):
        if reps[i][0] != reps[j][0] and same(reps[i], reps[j]):
            parent[find(i)] = find(j)

    classes = {}
    for i in range(len(reps)):
        classes.setdefault(find(i), []).append(i)
    for members in classes.values():
        for i, j in combinations(members, 2):
            if not same(reps[i], reps[j]):
                raise NotAtomGraph("same-join relation is not transitive")

    ordered_classes = sorted(classes.values(), key=lambda ms: min(
        (reps[i][0], len(reps[i][1]), sorted(reps[i][1])) for i in ms))
    elem_of = {}
    for e, members in enumerate(ordered_classes):
        for i in members:
            elem_of[i] = e

    def cls(k, subset):
        return elem_of[rep_index[(k, frozenset(subset))]]

    n = len(ordered_classes)
    neg = [None] * n
    compat = [set() for _ in range(n)]
    meet, join = {}, {}

    def record(table, i, j, value, what):
        key = (i, j) if i <= j else (j, i)
        if table.setdefault(key, value) != value:
            raise NotAtomGraph(f"{what} is not well defined")

    for k, K in enumerate(cliques):
        subsets = [s for (kk, s) in reps if kk == k]
        for s in subsets:
            x = cls(k, s)
            y = cls(k, K - s)
            if neg[x] is None:
                neg[x] = y
            elif neg[x] != y:
                raise NotAtomGraph("complement is not well defined")
        for s, t in combinations(subsets, 2):
            x, y = cls(k, s), cls(k, t)
            compat[x].add(y)
            compat[y].add(x)
            record(meet, x, y, cls(k, s & t), "meet")
            record(join, x, y, cls(k, s | t), "join")
        for s in subsets:
            x = cls(k, s)
            compat[x].add(x)
            record(meet, x, x, x, "meet")
            record(join, x, x, x, "join")

    zero_name, one_name = _bound_names(g.labels)
    elements = []
    names = []
    for members in ordered_classes:
        rep_list = sorted((reps[i][0], tuple(sorted(reps[i][1]))) for i in members)
        elements.append(SymbolicElement(rep_list[0], tuple(rep_list)))
        singles = [s[0] for _, s in rep_list if len(s) == 1]
        if any(not s for _, s in rep_list):
            names.append(zero_name)
        elif singles:
            # an atom keeps its label even when it is also the top element
            names.append(g.labels[singles[0]])
        elif any(len(s) == len(cliques[k]) for k, s in rep_list):
            names.append(one_name)
        else:
            options = ["∨".join(g.labels[v] for v in s) for _, s in rep_list]
            names.append(min(options, key=lambda o: (len(o), o)))

    zero = cls(0, ()) if cliques else None
    one = cls(0, cliques[0]) if cliques else None
    b = PartialBooleanAlgebra(elements, names, compat, meet, join, neg, zero, one)

    ag = atom_graph(b)
    mapping = {}
    for i, label in enumerate(ag.labels):
        if label not in g._index:
            raise NotAtomGraph(f"unexpected atom {label!r}")
        mapping[i] = g.index(label)
    if not is_isomorphism(ag, g, mapping):
        raise NotAtomGraph("atom graph of the reconstruction differs from the input")
    return b


def pba_isomorphic(b1, b2):
    """Decide isomorphism of two finite exclusive algebras through their atom graphs."""
    for b in (b1, b2):
        if not is_exclusive(b):
            raise AtomGraphError("pba_isomorphic requires exclusive algebras")
    return graph_isomorphic(atom_graph(b1), atom_graph(b2)) is not None


# -- serialization -----------------------------------------------------------

def pba_to_dict(b, as_float=False):
    elements = []
    for name, el in zip(b.names, b.elements):
        entry = {"name": name}
        if isinstance(el, la.Projector):
            entry["matrix"] = fmt_matrix(el.matrix, as_float)
        elif isinstance(el, SymbolicElement):
            entry["representatives"] = [[k, list(s)] for k, s in el.members]
        elements.append(entry)
    return {
        "elements": elements,
        "zero": b.zero,
        "one": b.one,
        "neg": list(b.neg),
        "compat": [list(p) for p in b.compat_pairs()],
        "meet": [[i, j, k] for (i, j), k in sorted(b._meet.items()) if i != j],
        "join": [[i, j, k] for (i, j), k in sorted(b._join.items()) if i != j],
        "atoms": atoms(b),
    }
