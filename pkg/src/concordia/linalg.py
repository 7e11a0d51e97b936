"""Exact matrix routines: integer determinants and Smith normal form,
linear algebra mod p, and dense matrices over any exact field (Fraction or
RatFunc entries).  Matrices are lists of row lists throughout.
"""
from fractions import Fraction


def shape(M):
    return (len(M), len(M[0]) if M else 0)


def identity(n, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def zeros(n, m, zero=0):
    return [[zero] * m for _ in range(n)]


def transpose(M):
    return [list(col) for col in zip(*M)] if M else []


def matmul(A, B, zero=0):
    if not A:
        return []
    Bt = transpose(B)
    if not Bt:
        return [[] for _ in A]
    out = []
    for row in A:
        out_row = []
        for col in Bt:
            acc = zero
            for x, y in zip(row, col):
                if x != 0 and y != 0:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def matvec(A, v, zero=0):
    return [sum((x * y for x, y in zip(row, v) if x != 0 and y != 0), zero) for row in A]


def block_diag(*blocks, zero=0):
    n = sum(len(b) for b in blocks)
    out = zeros(n, n, zero)
    k = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[k + i][k + j] = x
        k += len(b)
    return out


def submatrix(M, rows, cols):
    return [[M[i][j] for j in cols] for i in rows]


def is_square(M):
    return all(len(row) == len(M) for row in M)


# -- integers -----------------------------------------------------------------

def det_int(M):
    """Bareiss fraction-free determinant of an integer matrix."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def inverse_unimodular(M):
    """Inverse of an integer matrix with determinant +-1, as integers."""
    inv = inverse([[Fraction(x) for x in row] for row in M], one=Fraction(1), zero=Fraction(0))
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


def smith_normal_form(M):
    """Return ``(d, L, R)`` with ``M = L * diag(d) * R`` and L, R unimodular.

    ``d`` has length min(rows, cols); entries are nonnegative and each
    divides the next.
    """
    m, n = shape(M)
    A = [list(row) for row in M]
    # U A W = D, tracked as row ops on U and column ops on W
    U = identity(m)
    W = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in W:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        A[dst] = [x + c * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for row in A:
            row[dst] += c * row[src]
        for row in W:
            row[dst] += c * row[src]

    for k in range(min(m, n)):
        # smallest nonzero entry in the trailing block as pivot
        while True:
            best = None
            for i in range(k, m):
                for j in range(k, n):
                    if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(k, best[0])
            swap_cols(k, best[1])
            p = A[k][k]
            dirty = False
            for i in range(k + 1, m):
                if A[i][k]:
                    add_row(i, k, -(A[i][k] // p))
                    dirty = dirty or A[i][k] != 0
            for j in range(k + 1, n):
                if A[k][j]:
                    add_col(j, k, -(A[k][j] // p))
                    dirty = dirty or A[k][j] != 0
            if dirty:
                continue
            # pivot must divide the whole trailing block
            bad = None
            for i in range(k + 1, m):
                for j in range(k + 1, n):
                    if A[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(k, bad, 1)
        if best is None:
            break
        if A[k][k] < 0:
            A[k] = [-x for x in A[k]]
            U[k] = [-x for x in U[k]]
    d = [A[i][i] for i in range(min(m, n))]
    return d, inverse_unimodular(U), inverse_unimodular(W)


# -- prime fields -------------------------------------------------------------

def mod_matrix(M, p):
    return [[x % p for x in row] for row in M]


def matmul_mod(A, B, p):
    return mod_matrix(matmul(A, B), p)


def rref_mod(M, p):
    """Reduced row echelon form over Z_p; returns (rows, pivot columns)."""
    A = mod_matrix(M, p)
    m, n = shape(A)
    pivots = []
    r = 0
    for c in range(n):
        k = next((i for i in range(r, m) if A[i][c]), None)
        if k is None:
            continue
        A[r], A[k] = A[k], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A[:r], pivots


def rank_mod(M, p):
    return len(rref_mod(M, p)[1]) if M else 0


def nullspace_mod(M, p, ncols=None):
    """Basis of {x : M x = 0} over Z_p."""
    n = ncols if ncols is not None else shape(M)[1]
    R, pivots = rref_mod(M, p) if M else ([], [])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, c in zip(R, pivots):
            v[c] = -row[f] % p
        basis.append(v)
    return basis


def inverse_mod(M, p):
    n = len(M)
    aug = [list(row) + e for row, e in zip(mod_matrix(M, p), identity(n))]
    R, pivots = rref_mod(aug, p)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular mod p")
    return [row[n:] for row in R]


# -- generic exact fields -----------------------------------------------------

def inverse(M, one=1, zero=0):
    """Gauss-Jordan inverse over an exact field; raises ZeroDivisionError."""
    n = len(M)
    A = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        k = next((i for i in range(c, n) if A[i][c] != 0), None)
        if k is None:
            raise ZeroDivisionError("singular matrix")
        A[c], A[k] = A[k], A[c]
        piv = A[c][c]
        A[c] = [x / piv if x != 0 else x for x in A[c]]
        for i in range(n):
            if i != c and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y if y != 0 else x for x, y in zip(A[i], A[c])]
    return [row[n:] for row in A]


def det(M, one=1):
    """Determinant by elimination over an exact field."""
    n = len(M)
    A = [list(row) for row in M]
    result = one
    for c in range(n):
        k = next((i for i in range(c, n) if A[i][c] != 0), None)
        if k is None:
            return one - one
        if k != c:
            A[c], A[k] = A[k], A[c]
            result = -result
        piv = A[c][c]
        result = result * piv
        for i in range(c + 1, n):
            if A[i][c] != 0:
                f = A[i][c] / piv
                A[i] = [x - f * y if y != 0 else x for x, y in zip(A[i], A[c])]
    return result
