"""Exact feasibility for ``A x = b, x >= 0`` via phase-one simplex over Q.

Bland's rule (smallest-index entering and leaving variables) guarantees
termination; every pivot is exact, so a returned point satisfies the
constraints with equality, not within a tolerance.
"""

from fractions import Fraction


def feasible_point(A, b):
    """Return a rational ``x >= 0`` with ``A x = b``, or ``None``.

    ``A`` is a list of rows (m x n), ``b`` a length-m vector.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    if len(b) != m:
        raise ValueError("dimension mismatch between A and b")
    if any(len(row) != n for row in A):
        raise ValueError("A is not rectangular")
    if m == 0:
        return [Fraction(0)] * n

    # Tableau columns: n structural, m artificial, then rhs.
    T = []
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        row = [Fraction(sign * a) for a in A[i]]
        row += [Fraction(int(k == i)) for k in range(m)]
        row.append(Fraction(sign * b[i]))
        T.append(row)
    basis = [n + i for i in range(m)]
    width = n + m

    # Phase-one objective: minimize the sum of artificials. Reduced costs
    # for structural columns are minus the column sums.
    cost = [Fraction(0)] * (width + 1)
    for row in T:
        for j in range(n):
            cost[j] -= row[j]
        cost[width] -= row[width]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][width] / a
                if (best is None or ratio < best
                        or (ratio == best and basis[i] < basis[leave])):
                    best, leave = ratio, i
        if leave is None:
            # Phase one is bounded below by zero; cannot happen.
            raise AssertionError("unbounded phase-one problem")
        _pivot(T, cost, leave, enter)
        basis[leave] = enter

    if cost[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = T[i][-1]
    return x


def _pivot(T, cost, r, c):
    piv = T[r][c]
    row = T[r]
    if piv != 1:
        T[r] = row = [a / piv for a in row]
    for i, other in enumerate(T):
        if i != r and other[c] != 0:
            f = other[c]
            T[i] = [a - f * p for a, p in zip(other, row)]
    f = cost[c]
    if f != 0:
        cost[:] = [a - f * p for a, p in zip(cost, row)]
