"""Exact dense linear algebra over any of the coefficient fields.

Matrices are lists of rows.  Only the handful of operations the module and
Gram-matrix code needs are provided.
"""

from __future__ import annotations

from .scalars import FieldMode

Matrix = list  # list[list[scalar]]


def zeros(n: int, m: int, field: FieldMode) -> Matrix:
    return [[field.zero] * m for _ in range(n)]


def identity(n: int, field: FieldMode) -> Matrix:
    out = zeros(n, n, field)
    for i in range(n):
        out[i][i] = field.one
    return out


def diag(values, field: FieldMode) -> Matrix:
    n = len(values)
    out = zeros(n, n, field)
    for i, v in enumerate(values):
        out[i][i] = v
    return out


def mat_mul(A: Matrix, B: Matrix, field: FieldMode) -> Matrix:
    if not A:
        return []
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    out = zeros(n, m, field)
    for i in range(n):
        row = A[i]
        orow = out[i]
        for t in range(k):
            a = row[t]
            if not a:
                continue
            brow = B[t]
            for j in range(m):
                b = brow[j]
                if b:
                    orow[j] = orow[j] + a * b
    return out


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A: Matrix, B: Matrix) -> Matrix:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A: Matrix, s) -> Matrix:
    return [[a * s for a in row] for row in A]


def mat_eq(A: Matrix, B: Matrix) -> bool:
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def is_zero(A: Matrix) -> bool:
    return all(not a for row in A for a in row)


def mat_pow(A: Matrix, n: int, field: FieldMode) -> Matrix:
    out = identity(len(A), field)
    for _ in range(n):
        out = mat_mul(out, A, field)
    return out


def kron(A: Matrix, B: Matrix, field: FieldMode) -> Matrix:
    n, m = len(A), len(B)
    out = zeros(n * m, n * m, field)
    for i in range(n):
        for j in range(n):
            a = A[i][j]
            if not a:
                continue
            for k in range(m):
                for l in range(m):
                    b = B[k][l]
                    if b:
                        out[i * m + k][j * m + l] = a * b
    return out


def apply(A: Matrix, vec: list, field: FieldMode) -> list:
    out = [field.zero] * len(A)
    for i, row in enumerate(A):
        acc = field.zero
        for a, x in zip(row, vec):
            if a and x:
                acc = acc + a * x
        out[i] = acc
    return out


def rref(A: Matrix, field: FieldMode) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    M = [list(r) for r in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = field.one / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M, pivots


def rank(A: Matrix, field: FieldMode) -> int:
    if not A or not A[0]:
        return 0
    return len(rref(A, field)[1])


def nullspace(A: Matrix, field: FieldMode, ncols: int | None = None) -> list[list]:
    """Basis of {x : A x = 0}."""
    cols = len(A[0]) if A else (ncols or 0)
    if not A:
        return [[field.one if i == j else field.zero for i in range(cols)] for j in range(cols)]
    R, piv = rref(A, field)
    free = [c for c in range(cols) if c not in piv]
    basis = []
    for f in free:
        x = [field.zero] * cols
        x[f] = field.one
        for row, pc in zip(R, piv):
            if row[f]:
                x[pc] = -row[f]
        basis.append(x)
    return basis


def columns(vectors: list[list]) -> Matrix:
    """Matrix whose columns are the given vectors."""
    if not vectors:
        return []
    return [[v[i] for v in vectors] for i in range(len(vectors[0]))]


def det_bareiss(A: Matrix, field: FieldMode):
    """Determinant by fraction-free elimination (exact division at each step)."""
    n = len(A)
    if n == 0:
        return field.one
    M = [list(r) for r in A]
    sign = 1
    prev = field.one
    for k in range(n - 1):
        if not M[k][k]:
            p = next((i for i in range(k + 1, n) if M[i][k]), None)
            if p is None:
                return field.zero
            M[k], M[p] = M[p], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev
        prev = M[k][k]
    return M[n - 1][n - 1] if sign == 1 else -M[n - 1][n - 1]
