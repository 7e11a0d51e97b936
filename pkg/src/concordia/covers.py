"""Homology of cyclic branched covers, computed from a Seifert matrix.

With Gamma = (V - V^t)^-1 V, the group H_1(M_q) is the cokernel of
Gamma^q - (Gamma - I)^q.  Every order is cross-checked against the
resultant of Delta with 1 + t + ... + t^(q-1).
"""
from dataclasses import dataclass, field
from itertools import combinations, product
from math import prod

from . import linalg
from .errors import (DimensionMismatch, NotElementaryAbelian, NotInvertibleModP,
                     OracleMismatch, PreconditionFailed, TooLarge)
from .seifert import alexander_polynomial, validate
from .signatures import prime_power_base

INFINITE = "INFINITE"
ENUMERATION_LIMIT = 10 ** 7


@dataclass
class DeckAction:
    q: int
    p: int
    matrix: list          # on the quotient H_1(M_q) (x) Z_p, in ``basis`` coordinates
    basis: list           # representatives in Z_p^r
    full_matrix: list     # V^-1 V^t mod p on Z_p^r
    eigenvalues: list
    eigenbases: dict


@dataclass
class CoverHomology:
    q: int
    presentation: list
    snf: list
    order: object
    deck_mod_p: DeckAction = None

    @property
    def group(self):
        """Nontrivial invariant factors."""
        return [d for d in self.snf if d != 1]


@dataclass
class LinkingFormZp:
    p: int
    dim: int
    gram: list
    generators: list = field(default_factory=list)

    @property
    def discriminant(self):
        """Legendre symbol of det(gram): +1 or -1 (1 for dim 0)."""
        if not self.dim:
            return 1
        d = linalg.det_int(self.gram) % self.p
        return 1 if pow(d, (self.p - 1) // 2, self.p) == 1 else -1


@dataclass(frozen=True)
class Metabolizer:
    basis: tuple
    equivariant: object = None


# -- presentation and order ---------------------------------------------------

def _gamma(V):
    M = V.matrix()
    S = [[M[i][j] - M[j][i] for j in range(len(M))] for i in range(len(M))]
    return linalg.matmul(linalg.inverse_unimodular(S), M)


def _mat_pow(A, k):
    n = len(A)
    out = linalg.identity(n)
    base = A
    while k:
        if k & 1:
            out = linalg.matmul(out, base)
        base = linalg.matmul(base, base)
        k >>= 1
    return out


def presentation_matrix(V, q):
    V = validate(V)
    G = _gamma(V)
    n = len(G)
    Gm = [[G[i][j] - (i == j) for j in range(n)] for i in range(n)]
    A, B = _mat_pow(G, q), _mat_pow(Gm, q)
    return [[A[i][j] - B[i][j] for j in range(n)] for i in range(n)]


def resultant(f, g):
    """Sylvester resultant of integer coefficient lists (constant term first)."""
    while f and f[-1] == 0:
        f = f[:-1]
    while g and g[-1] == 0:
        g = g[:-1]
    m, n = len(f) - 1, len(g) - 1
    if m < 0 or n < 0:
        return 0
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + f[::-1] + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + g[::-1] + [0] * (size - n - 1 - i))
    return linalg.det_int(rows)


def order_oracle(V, q):
    """|prod_{j=1}^{q-1} Delta(zeta_q^j)| as an exact resultant."""
    delta = alexander_polynomial(V)
    f = [int(c) for c in delta.coeffs]
    return abs(resultant(f, [1] * q))


def cover_homology(V, q, p=None):
    if q < 2:
        raise PreconditionFailed("cover degree must be at least 2")
    V = validate(V)
    R = presentation_matrix(V, q)
    if R:
        snf = linalg.smith_normal_form(R)[0]
    else:
        snf = []
    order = INFINITE if 0 in snf else prod(snf)
    oracle = order_oracle(V, q)
    if (order == INFINITE) != (oracle == 0) or (order != INFINITE and order != oracle):
        raise OracleMismatch(f"Smith form order {order} but resultant gives {oracle}")
    out = CoverHomology(q, R, snf, order)
    if p is not None:
        out.deck_mod_p = deck_action(V, q, p, presentation=R)
    return out


# -- deck transformation ------------------------------------------------------

def _is_prime(p):
    return p >= 2 and prime_power_base(p) == p


def _reduce_mod(v, rows, pivots, p):
    v = [x % p for x in v]
    for row, c in zip(rows, pivots):
        if v[c]:
            f = v[c]
            v = [(x - f * y) % p for x, y in zip(v, row)]
    return v


def deck_action(V, q, p, presentation=None):
    """Action of V^-1 V^t on H_1(M_q) (x) Z_p with its eigenspaces."""
    if not _is_prime(p) or p == 2:
        raise PreconditionFailed(f"{p} is not an odd prime")
    V = validate(V)
    R = presentation if presentation is not None else presentation_matrix(V, q)
    n = V.rank
    try:
        Vinv = linalg.inverse_mod(V.matrix(), p)
    except ZeroDivisionError:
        raise NotInvertibleModP(f"V is singular mod {p}") from None
    D = linalg.matmul_mod(Vinv, V.transpose(), p)
    # image of R mod p and a complement made of standard vectors
    rows, pivots = linalg.rref_mod(linalg.transpose(R), p) if n else ([], [])
    if len(pivots) == n:
        raise PreconditionFailed(f"{p} does not divide the order of H_1(M_{q})")
    free = [c for c in range(n) if c not in pivots]
    basis = [[int(i == c) for i in range(n)] for c in free]
    # D must preserve the relation lattice mod p
    for row in rows:
        img = linalg.matvec(D, row)
        if any(_reduce_mod(img, rows, pivots, p)):
            raise OracleMismatch("deck action does not preserve the relations")
    k = len(free)
    M = [[0] * k for _ in range(k)]
    for j, e in enumerate(basis):
        img = _reduce_mod(linalg.matvec(D, e), rows, pivots, p)
        for i, c in enumerate(free):
            M[i][j] = img[c]
    Mq = linalg.identity(k)
    for _ in range(q):
        Mq = linalg.matmul_mod(Mq, M, p)
    if Mq != linalg.identity(k):
        raise OracleMismatch(f"deck action does not have order dividing {q}")
    eigen = {}
    for lam in range(1, p):
        shifted = [[(M[i][j] - lam * (i == j)) % p for j in range(k)] for i in range(k)]
        ker = linalg.nullspace_mod(shifted, p, k)
        if ker:
            eigen[lam] = ker
    return DeckAction(q, p, M, basis, D, sorted(eigen), eigen)


# -- linking form of the 2-fold cover -----------------------------------------

def linking_form_2fold(V, p):
    """Gram matrix of p times the linking form on the p-part of H_1(M_2),
    which must be elementary abelian."""
    if not _is_prime(p) or p == 2:
        raise PreconditionFailed(f"{p} is not an odd prime")
    V = validate(V)
    M = V.matrix()
    n = len(M)
    S = [[M[i][j] + M[j][i] for j in range(n)] for i in range(n)]
    if n and linalg.det_int(S) == 0:
        raise PreconditionFailed("V + V^t is singular")
    if not n:
        return LinkingFormZp(p, 0, [], [])
    d, L, Rm = linalg.smith_normal_form(S)
    idx = [i for i, di in enumerate(d) if di % p == 0]
    for i in idx:
        if d[i] % (p * p) == 0:
            raise NotElementaryAbelian(f"H_1(M_2) has a Z_{d[i]} summand")
    # S^-1 L = R^-1 diag(1/d), so the pairing of g_i = (d_i/p) L e_i with
    # g_j is (d_i/p) (L^t R^-1)_ij / p
    LtRinv = linalg.matmul(linalg.transpose(L), linalg.inverse_unimodular(Rm))
    gram = [[(d[i] // p) * LtRinv[i][j] % p for j in idx] for i in idx]
    k = len(idx)
    if any(gram[i][j] != gram[j][i] for i in range(k) for j in range(k)):
        raise OracleMismatch("linking form is not symmetric")
    if linalg.rank_mod(gram, p) != k:
        raise OracleMismatch("linking form is singular")
    gens = [[(d[i] // p) * L[r][i] % p for r in range(n)] for i in idx]
    return LinkingFormZp(p, k, gram, gens)


# -- metabolizers -------------------------------------------------------------

def _bilinear(G, u, v, p):
    return sum(u[i] * G[i][j] * v[j] for i in range(len(u)) for j in range(len(v))) % p


def _isotropic_rref(G, n, k, p):
    """All k x n RREF matrices over Z_p whose rows span an isotropic space."""
    for pivots in combinations(range(n), k):
        slots = [[c for c in range(pc + 1, n) if c not in pivots] for pc in pivots]
        rows = []

        def extend(i):
            if i == k:
                yield [list(r) for r in rows]
                return
            for values in product(range(p), repeat=len(slots[i])):
                row = [0] * n
                row[pivots[i]] = 1
                for c, x in zip(slots[i], values):
                    row[c] = x
                if _bilinear(G, row, row, p):
                    continue
                if any(_bilinear(G, r, row, p) for r in rows):
                    continue
                rows.append(row)
                yield from extend(i + 1)
                rows.pop()

        yield from extend(0)


def _invariant(rows, D, p):
    k = len(rows)
    for r in rows:
        img = [sum(D[i][j] * r[j] for j in range(len(r))) % p for i in range(len(D))]
        if linalg.rank_mod(rows + [img], p) != k:
            return False
    return True


def enumerate_metabolizers(f, deck=None, equivariant_only=False):
    """Every half-dimensional totally isotropic subspace of f, as RREF bases."""
    n, p = f.dim, f.p
    if n % 2:
        raise DimensionMismatch(f"form of odd dimension {n} has no metabolizer")
    if p ** n > ENUMERATION_LIMIT or p ** ((n // 2) ** 2) > ENUMERATION_LIMIT:
        raise TooLarge(f"{p}^{n} exceeds the enumeration guard")
    if deck is not None and (len(deck) != n or any(len(r) != n for r in deck)):
        raise DimensionMismatch(f"deck matrix must be {n}x{n}")
    G = f.gram
    out = []
    for rows in _isotropic_rref(G, n, n // 2, p):
        eq = None if deck is None else _invariant(rows, deck, p)
        if equivariant_only and not eq:
            continue
        out.append(Metabolizer(tuple(tuple(r) for r in rows), eq))
    out.sort(key=lambda m: m.basis)
    return out


def verify_metabolizer(f, m):
    rows = [list(r) for r in m.basis]
    if len(rows) * 2 != f.dim or (rows and linalg.rank_mod(rows, f.p) != len(rows)):
        return False
    return all(_bilinear(f.gram, u, v, f.p) == 0 for u in rows for v in rows)


# -- report -------------------------------------------------------------------

def cover_report(V, q, p=None):
    """{q, p, snf, order, eigenvalues, metabolizer_count}."""
    H = cover_homology(V, q, p)
    eig = None
    count = None
    if p is not None:
        eig = H.deck_mod_p.eigenvalues
        if q == 2:
            try:
                count = len(enumerate_metabolizers(linking_form_2fold(V, p)))
            except (NotElementaryAbelian, DimensionMismatch, TooLarge):
                count = None
    return {
        "q": q,
        "p": p,
        "snf": H.snf,
        "order": H.order,
        "eigenvalues": eig,
        "metabolizer_count": count,
    }
