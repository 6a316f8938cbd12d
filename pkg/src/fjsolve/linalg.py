"""Exact linear algebra over Q: fraction-free elimination, nullspaces, echelon forms.

Matrices are plain lists of rows; entries may be ints or Fractions.
"""
from fractions import Fraction
from math import lcm


def _integral_rows(rows):
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        d = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * d) for x in row])
    return out


def echelon_fraction_free(rows, ncols):
    """Bareiss elimination to row echelon form.

    Pivots are taken column by column, choosing the first remaining row with a
    nonzero entry. Returns ``(E, pivots)`` with E the nonzero echelon rows (integers).
    """
    A = _integral_rows(rows)
    pivots = []
    prev = 1
    top = 0
    for col in range(ncols):
        if top == len(A):
            break
        p = next((i for i in range(top, len(A)) if A[i][col]), None)
        if p is None:
            continue
        A[top], A[p] = A[p], A[top]
        pivot_row = A[top]
        pv = pivot_row[col]
        for i in range(top + 1, len(A)):
            row = A[i]
            f = row[col]
            new = []
            for j in range(ncols):
                q, rem = divmod(pv * row[j] - f * pivot_row[j], prev)
                assert rem == 0, "fraction-free step lost exactness"
                new.append(q)
            A[i] = new
        prev = pv
        pivots.append(col)
        top += 1
    return A[:top], pivots


def nullspace(rows, ncols):
    """Basis of {x : A x = 0}, one vector per free column, each scaled so its first nonzero entry is 1."""
    E, pivots = echelon_fraction_free(rows, ncols)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in reversed(list(zip(E, pivots))):
            s = sum(row[j] * x[j] for j in range(p + 1, ncols))
            x[p] = Fraction(-s, row[p])
        lead = next(v for v in x if v)
        basis.append([v / lead for v in x])
    return basis


def rank(rows, ncols):
    return len(echelon_fraction_free(rows, ncols)[1])


def rref(rows, aux=None):
    """Reduced row echelon form over Q.

    Row operations are mirrored on ``aux`` (one auxiliary row per input row),
    which lets callers keep track of coordinates. Zero rows are dropped.
    Returns ``(R, aux_R, pivots)``.
    """
    A = [[Fraction(x) for x in row] for row in rows]
    X = [[Fraction(x) for x in row] for row in aux] if aux is not None else [[] for _ in A]
    ncols = len(A[0]) if A else 0
    pivots = []
    top = 0
    for col in range(ncols):
        p = next((i for i in range(top, len(A)) if A[i][col]), None)
        if p is None:
            continue
        A[top], A[p] = A[p], A[top]
        X[top], X[p] = X[p], X[top]
        pv = A[top][col]
        A[top] = [v / pv for v in A[top]]
        X[top] = [v / pv for v in X[top]]
        for i in range(len(A)):
            if i != top and A[i][col]:
                f = A[i][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[top])]
                X[i] = [a - f * b for a, b in zip(X[i], X[top])]
        pivots.append(col)
        top += 1
        if top == len(A):
            break
    return A[:top], X[:top], pivots


def mat_vec(rows, x):
    return [sum(Fraction(a) * b for a, b in zip(row, x)) for row in rows]


def in_span(vectors, v):
    """Exact membership test: is v a linear combination of the given vectors?"""
    if not vectors:
        return not any(v)
    n = len(v)
    return rank(vectors, n) == rank(list(vectors) + [v], n)
