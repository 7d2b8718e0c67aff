"""Exact rational linear algebra and the projector algebra built on it.

Matrices are tuples of row tuples of :class:`fractions.Fraction`.  Nothing
here touches floating point: ``P @ P == P`` and ``PQ == QP`` are decided by
exact equality.
"""

from fractions import Fraction
from math import gcd, lcm

from .errors import IncompatibleElements


def as_matrix(rows):
    m = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if m and len({len(r) for r in m}) != 1:
        raise ValueError("matrix is not rectangular")
    return m


def shape(A):
    return (len(A), len(A[0]) if A else 0)


def identity(d):
    return tuple(tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d))


def zeros(r, c=None):
    c = r if c is None else c
    return tuple(tuple(Fraction(0) for _ in range(c)) for _ in range(r))


def transpose(A):
    return tuple(zip(*A))


def matmul(A, B):
    if shape(A)[1] != shape(B)[0]:
        raise ValueError(f"cannot multiply {shape(A)} by {shape(B)}")
    Bt = transpose(B)
    return tuple(tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in Bt)
                 for row in A)


def matadd(A, B, sign=1):
    return tuple(tuple(a + sign * b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def rref(A):
    """Reduced row echelon form; returns ``(R, pivot_columns)``."""
    R = [list(map(Fraction, row)) for row in A]
    rows, cols = shape(A)
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        lead = R[r][c]
        R[r] = [x / lead for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R, pivots


def rank(A):
    if not A:
        return 0
    return len(rref(A)[1])


def nullspace(A, ncols=None):
    """Exact basis of ``{x : A x = 0}``; empty iff full column rank."""
    if not A:
        n = ncols or 0
        return [tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n)]
    R, pivots = rref(A)
    n = shape(A)[1]
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve_linear(A, b):
    """One exact solution of ``A x = b`` or ``None`` if inconsistent."""
    rows, cols = shape(A)
    if len(b) != rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {rows}")
    aug = [list(row) + [Fraction(bi)] for row, bi in zip(A, b)]
    R, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for row, p in zip(R, pivots):
        x[p] = row[cols]
    return tuple(x)


def inverse(A):
    n = len(A)
    aug = [list(row) + list(e) for row, e in zip(A, identity(n))]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in R)


def column_space(A):
    """Basis for the column space, taken from the pivot columns of ``A``."""
    if not A:
        return []
    _, pivots = rref(A)
    At = transpose(A)
    return [tuple(At[c]) for c in pivots]


def gram(vectors):
    return tuple(tuple(dot(u, v) for v in vectors) for u in vectors)


def primitive(v):
    """Scale a nonzero rational vector to coprime integers, first nonzero entry positive."""
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    lead = next(a for a in ints if a)
    if lead < 0:
        g = -g
    return tuple(Fraction(a // g) for a in ints)


# -- projectors -------------------------------------------------------------

class Projector:
    """Symmetric idempotent rational matrix.

    The matrix is authoritative; ``basis`` is a cached spanning set of the
    image.  Equality and hashing go through the matrix only.
    """

    __slots__ = ("matrix", "_basis")

    def __init__(self, matrix, basis=None, check=True):
        matrix = as_matrix(matrix)
        if check:
            r, c = shape(matrix)
            if r != c:
                raise ValueError("projector matrix must be square")
            if transpose(matrix) != matrix:
                raise ValueError("projector matrix is not symmetric")
            if matmul(matrix, matrix) != matrix:
                raise ValueError("projector matrix is not idempotent")
        self.matrix = matrix
        self._basis = None if basis is None else [tuple(map(Fraction, v)) for v in basis]

    @property
    def dim(self):
        return len(self.matrix)

    @property
    def basis(self):
        if self._basis is None:
            self._basis = column_space(self.matrix)
        return self._basis

    @property
    def rank(self):
        # For a projector, rank equals trace.
        return int(sum(self.matrix[i][i] for i in range(self.dim)))

    def is_zero(self):
        return all(x == 0 for row in self.matrix for x in row)

    def __eq__(self, other):
        return isinstance(other, Projector) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"Projector(dim={self.dim}, rank={self.rank})"


def zero_projector(d):
    return Projector(zeros(d), basis=[], check=False)


def identity_projector(d):
    return Projector(identity(d), basis=list(identity(d)), check=False)


def projector_onto(vectors, dim):
    """Orthogonal projector onto ``span(vectors)``: ``B (B^T B)^-1 B^T``."""
    vectors = [tuple(Fraction(x) for x in v) for v in vectors]
    for v in vectors:
        if len(v) != dim:
            raise ValueError(f"vector of length {len(v)} in dimension {dim}")
    if not vectors:
        return zero_projector(dim)
    if rank(vectors) != len(vectors):
        raise ValueError("vectors are linearly dependent")
    Bt = tuple(vectors)
    B = transpose(Bt)
    P = matmul(matmul(B, inverse(matmul(Bt, B))), Bt)
    return Projector(P, basis=vectors, check=False)


def _same_order(p, q):
    if p.dim != q.dim:
        raise ValueError(f"projector orders differ: {p.dim} vs {q.dim}")


def commute(p, q):
    _same_order(p, q)
    return matmul(p.matrix, q.matrix) == matmul(q.matrix, p.matrix)


def complement(p):
    return Projector(matadd(identity(p.dim), p.matrix, -1), check=False)


def meet(p, q):
    _same_order(p, q)
    pq = matmul(p.matrix, q.matrix)
    if pq != matmul(q.matrix, p.matrix):
        raise IncompatibleElements()
    return Projector(pq, check=False)


def join(p, q):
    """``P + Q - PQ``, which equals ``not(not P and not Q)`` for commuting inputs."""
    _same_order(p, q)
    pq = matmul(p.matrix, q.matrix)
    if pq != matmul(q.matrix, p.matrix):
        raise IncompatibleElements()
    return Projector(matadd(matadd(p.matrix, q.matrix), pq, -1), check=False)


def leq(p, q):
    """``p <= q``: compatible and ``pq == p``."""
    _same_order(p, q)
    pq = matmul(p.matrix, q.matrix)
    return pq == p.matrix and pq == matmul(q.matrix, p.matrix)


def is_projector(matrix):
    try:
        Projector(matrix)
    except ValueError:
        return False
    return True
