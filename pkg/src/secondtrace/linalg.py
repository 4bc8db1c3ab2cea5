"""Exact dense linear algebra over a field, on lists of ``FieldValue``."""

from __future__ import annotations


def identity(F, n):
    return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]


def transpose(M):
    return [list(col) for col in zip(*M)]


def matmul(A, B):
    Bt = transpose(B)
    return [[dot(row, col) for col in Bt] for row in A]


def matvec(A, v):
    return [dot(row, v) for row in A]


def dot(u, v):
    acc = None
    for a, b in zip(u, v):
        acc = a * b if acc is None else acc + a * b
    return acc


def _row_reduce(M, F):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    A = [list(r) for r in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = A[r][c].inverse()
        A[r] = [x * inv for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x + f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def rank(M, F):
    return len(_row_reduce(M, F)[1])


def det(M, F):
    n = len(M)
    A = [list(r) for r in M]
    d = F.one
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return F.zero
        A[c], A[p] = A[p], A[c]
        d = d * A[c][c]
        inv = A[c][c].inverse()
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] * inv
                A[i] = [x + f * y for x, y in zip(A[i], A[c])]
    return d


def kernel(M, F, ncols=None):
    """Basis of the right null space ``{v : M v = 0}``."""
    if not M:
        n = ncols or 0
        return [[F.one if i == j else F.zero for i in range(n)] for j in range(n)]
    R, pivots = _row_reduce(M, F)
    n = len(M[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [F.zero] * n
        v[f] = F.one
        for row, pc in zip(R, pivots):
            v[pc] = row[f]
        basis.append(v)
    return basis


def solve(M, b, F):
    """One solution of ``M v = b`` (free variables set to zero), or None."""
    n = len(M[0])
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    R, pivots = _row_reduce(aug, F)
    if n in pivots:
        return None
    v = [F.zero] * n
    for row, pc in zip(R, pivots):
        v[pc] = row[n]
    return v


def inverse(M, F):
    n = len(M)
    aug = [list(row) + e for row, e in zip(M, identity(F, n))]
    R, pivots = _row_reduce(aug, F)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]


def charpoly_berkowitz(M, F):
    """Coefficients ``[1, c1, ..., cn]`` of ``det(x I - M) = sum c_k x^(n-k)``.

    Division-free (Berkowitz), so valid over any commutative ring.
    """
    n = len(M)
    if n == 0:
        return [F.one]
    vec = [F.one, -M[n - 1][n - 1]]
    for k in range(n - 2, -1, -1):
        m = n - k
        a = M[k][k]
        R = M[k][k + 1:]
        C = [M[i][k] for i in range(k + 1, n)]
        A = [row[k + 1:] for row in M[k + 1:]]
        col = [F.one, -a]
        X = C
        for _ in range(m - 1):
            col.append(-dot(R, X))
            X = matvec(A, X)
        new = []
        for i in range(m + 1):
            acc = F.zero
            for j in range(min(i, m - 1) + 1):
                if i - j < len(col):
                    acc = acc + col[i - j] * vec[j]
            new.append(acc)
        vec = new
    return vec
