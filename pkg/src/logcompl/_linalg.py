"""Small exact linear algebra over Fractions (matrices are lists of rows)."""

from fractions import Fraction


def _copy(M):
    return [[Fraction(x) for x in row] for row in M]


def pivots(M):
    """Pivots of Gaussian elimination without row exchanges.

    For a symmetric matrix these are ratios of consecutive leading
    principal minors; elimination stops early at a zero pivot.
    """
    A = _copy(M)
    n = len(A)
    out = []
    for k in range(n):
        p = A[k][k]
        out.append(p)
        if p == 0:
            break
        for i in range(k + 1, n):
            f = A[i][k] / p
            if f:
                for j in range(k, n):
                    A[i][j] -= f * A[k][j]
    return out


def is_negative_definite(M):
    if not M:
        return True
    ps = pivots(M)
    return len(ps) == len(M) and all(p < 0 for p in ps)


def determinant(M):
    A = _copy(M)
    n = len(A)
    det = Fraction(1)
    for k in range(n):
        r = next((i for i in range(k, n) if A[i][k] != 0), None)
        if r is None:
            return Fraction(0)
        if r != k:
            A[k], A[r] = A[r], A[k]
            det = -det
        det *= A[k][k]
        for i in range(k + 1, n):
            f = A[i][k] / A[k][k]
            if f:
                for j in range(k, n):
                    A[i][j] -= f * A[k][j]
    return det


def _rref(M):
    A = _copy(M)
    rows = len(A)
    cols = len(A[0]) if A else 0
    pivcols = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivcols.append(c)
        r += 1
        if r == rows:
            break
    return A, pivcols


def solve(M, b):
    """Solve ``M x = b`` for nonsingular square ``M``; raises ValueError if singular."""
    n = len(M)
    aug = [list(row) + [b[i]] for i, row in enumerate(M)]
    A, pc = _rref(aug)
    if pc != list(range(n)):
        raise ValueError("singular system")
    return [A[i][n] for i in range(n)]


def nullspace(M):
    """A basis of the right kernel of ``M``."""
    if not M:
        return []
    A, pc = _rref(M)
    cols = len(M[0])
    free = [c for c in range(cols) if c not in pc]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, c in enumerate(pc):
            v[c] = -A[i][f]
        basis.append(v)
    return basis
