"""Exact integer and rational matrix routines.

Row convention throughout: vectors are row tuples, a lattice basis is a
list of rows, and coordinates act on the left (w = x . B).
"""

from __future__ import annotations

from fractions import Fraction


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * a for a in v)


def mat_vec(A, v):
    """A applied to a column vector given as a tuple: returns tuple A.v."""
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in A)


def row_times_mat(x, B):
    """x . B for a row vector x."""
    n = len(B[0])
    return tuple(sum(x[i] * B[i][j] for i in range(len(x))) for j in range(n))


def mat_mul(A, B):
    return tuple(row_times_mat(row, B) for row in A)


def identity(n, one=1):
    return [[one if i == j else 0 * one for j in range(n)] for i in range(n)]


def mat_inv(A):
    """Inverse of a square rational matrix by Gauss-Jordan elimination."""
    n = len(A)
    M = [[frac(A[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        M[c], M[piv] = M[piv], M[c]
        inv = Fraction(1) / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return tuple(tuple(row[n:]) for row in M)


def rref(A):
    """Reduced row echelon form over Q: returns (rows, pivot_columns)."""
    M = [[frac(x) for x in row] for row in A]
    pivots = []
    r = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = Fraction(1) / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return [tuple(row) for row in M[:r]], pivots


def xgcd(a, b):
    """(g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hnf_int(rows, ncols):
    """Row-style Hermite normal form of the lattice spanned by integer rows.

    Returns the staircase basis: pivots positive, entries above each pivot
    reduced into [0, pivot).  Zero rows are dropped.
    """
    mat = [list(map(int, r)) for r in rows if any(r)]
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(mat)) if mat[i][c] != 0]
            if not nz:
                break
            if len(nz) == 1:
                piv = nz[0]
                break
            i0 = min(nz, key=lambda i: abs(mat[i][c]))
            for i in nz:
                if i == i0:
                    continue
                q = mat[i][c] // mat[i0][c]
                if q:
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[i0])]
        if not nz:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        if mat[r][c] < 0:
            mat[r] = [-a for a in mat[r]]
        for i in range(r):
            q = mat[i][c] // mat[r][c]
            if q:
                mat[i] = [a - q * b for a, b in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]]


def snf_with_transform(A, nrows=None, ncols=None):
    """Smith normal form with transforms: U . A . V = D, U and V unimodular.

    A is a (possibly empty) integer matrix given as rows.  Returns
    (U, D, V) as tuples of integer row tuples.
    """
    m = nrows if nrows is not None else len(A)
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    D = [[int(A[i][j]) for j in range(n)] for i in range(m)]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, q):
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        piv = next(((i, j) for i in range(t, m) for j in range(t, n) if D[i][j] != 0), None)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            for i in range(t + 1, m):
                if D[i][t] % D[t][t] != 0:
                    g, x, y = xgcd(D[t][t], D[i][t])
                    a, b = D[t][t] // g, D[i][t] // g
                    # row_t <- x*row_t + y*row_i; row_i <- -b*row_t' + a*row_i'
                    rt = [x * p + y * q for p, q in zip(D[t], D[i])]
                    ri = [-b * p + a * q for p, q in zip(D[t], D[i])]
                    ut = [x * p + y * q for p, q in zip(U[t], U[i])]
                    ui = [-b * p + a * q for p, q in zip(U[t], U[i])]
                    D[t], D[i], U[t], U[i] = rt, ri, ut, ui
            for i in range(t + 1, m):
                q = D[i][t] // D[t][t]
                if q:
                    add_row(t, i, -q)
            for j in range(t + 1, n):
                if D[t][j] % D[t][t] != 0:
                    g, x, y = xgcd(D[t][t], D[t][j])
                    a, b = D[t][t] // g, D[t][j] // g
                    for row in (D, V):
                        for rr in row:
                            ct, cj = rr[t], rr[j]
                            rr[t] = x * ct + y * cj
                            rr[j] = -b * ct + a * cj
            for j in range(t + 1, n):
                q = D[t][j] // D[t][t]
                if q:
                    add_col(t, j, -q)
            if all(D[i][t] == 0 for i in range(t + 1, m)) and all(
                D[t][j] == 0 for j in range(t + 1, n)
            ):
                break
        # enforce divisibility of the rest of the block by the pivot
        bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                    if D[i][j] % D[t][t] != 0), None)
        if bad is not None:
            add_row(bad[0], t, 1)
            continue
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return (tuple(tuple(r) for r in U),
            tuple(tuple(r) for r in D),
            tuple(tuple(r) for r in V))


def left_nullspace_int(A, nrows, ncols):
    """Basis of {u in Z^nrows : u . A = 0}; the result is saturated."""
    U, D, _ = snf_with_transform(A, nrows, ncols)
    rank = sum(1 for i in range(min(nrows, ncols)) if D[i][i] != 0)
    return [U[i] for i in range(rank, nrows)]


def unimodular_completion(sat_rows, n):
    """For a saturated integer lattice basis (k rows in Z^n), return a
    unimodular n x n matrix whose first k rows generate the same lattice.
    """
    k = len(sat_rows)
    if k == 0:
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    _, D, V = snf_with_transform(sat_rows, k, n)
    for i in range(k):
        if abs(D[i][i]) != 1:
            raise ValueError("basis does not span a saturated lattice")
    Vinv = mat_inv(V)
    comp = tuple(tuple(int(x) for x in row) for row in Vinv)
    return comp
