"""Hermitian forms over Q(t) with the involution t -> 1/t.

The Witt layer is deliberately three-valued.  A class is called trivial
only when an exact certificate exists (the reduced diagonal is empty, or a
metabolizer has been checked), nontrivial only when some certified
signature is nonzero, and undecided otherwise.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from . import linalg
from .errors import (DimensionMismatch, NotSymmetric, SingularAtSample,
                     SingularBaseChange, SingularForm)
from .intervals import certified_signature, eval_ratfunc_ball
from .laurent import (LaurentPoly, RatFunc, content, exact_quotient, rat,
                      squarefree_decomposition, vanishes_at_root_of_unity)

ZERO = RatFunc(0)
ONE = RatFunc(1)
Z2 = RatFunc(LaurentPoly({-1: 1, 0: -2, 1: 1}))
ONE_MINUS_T = RatFunc(LaurentPoly({0: 1, 1: -1}))
ONE_MINUS_TBAR = RatFunc(LaurentPoly({0: 1, -1: -1}))

TRIVIAL = "TRIVIAL"
NONTRIVIAL = "NONTRIVIAL"
UNDECIDED = "UNDECIDED"


def conj_transpose(M):
    return [[M[j][i].involute() for j in range(len(M))] for i in range(len(M[0]) if M else 0)]


def _rat_matrix(M):
    return [[rat(x) for x in row] for row in M]


class HermitianForm:
    """Square matrix over Q(t) equal to its conjugate transpose."""

    __slots__ = ("entries", "_det")

    def __init__(self, entries, check=True):
        rows = _rat_matrix(entries)
        if any(len(row) != len(rows) for row in rows):
            raise DimensionMismatch("hermitian form must be square")
        if check:
            n = len(rows)
            for i in range(n):
                for j in range(i, n):
                    if rows[j][i] != rows[i][j].involute():
                        raise NotSymmetric(f"entry ({j},{i}) is not the conjugate of ({i},{j})")
        self.entries = tuple(tuple(row) for row in rows)
        self._det = None

    @classmethod
    def diagonal(cls, values):
        vals = [rat(v) for v in values]
        n = len(vals)
        return cls([[vals[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @property
    def n(self):
        return len(self.entries)

    def __len__(self):
        return self.n

    def matrix(self):
        return [list(row) for row in self.entries]

    def det(self):
        if self._det is None:
            self._det = linalg.det(self.matrix(), one=ONE) if self.n else ONE
        return self._det

    def is_diagonal(self):
        return all(self.entries[i][j].is_zero()
                   for i in range(self.n) for j in range(self.n) if i != j)

    def diag(self):
        return [self.entries[i][i] for i in range(self.n)]

    def direct_sum(self, *others):
        blocks = [self.matrix()] + [o.matrix() for o in others]
        return HermitianForm(linalg.block_diag(*blocks, zero=ZERO), check=False)

    def __neg__(self):
        return HermitianForm([[-x for x in row] for row in self.entries], check=False)

    def transpose(self):
        return HermitianForm(linalg.transpose(self.matrix()), check=False)

    def __eq__(self, other):
        if isinstance(other, HermitianForm):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        rows = "; ".join(", ".join(str(x) for x in row) for row in self.entries)
        return f"HermitianForm([{rows}])"


def hermitianize(V):
    """V_t = (1 - t) V + (1 - 1/t) V^t."""
    M = V.matrix() if hasattr(V, "matrix") else V
    n = len(M)
    return HermitianForm(
        [[RatFunc(LaurentPoly({0: M[i][j] + M[j][i], 1: -M[i][j], -1: -M[j][i]}))
          for j in range(n)] for i in range(n)],
        check=False)


def congruence(M, P):
    """conj(P)^t M P."""
    P = _rat_matrix(P)
    if len(P) != M.n or any(len(row) != M.n for row in P):
        raise DimensionMismatch(f"base change must be {M.n}x{M.n}")
    if M.n and linalg.det(P, one=ONE).is_zero():
        raise SingularBaseChange("base change matrix is singular")
    return HermitianForm(_congruent(M.matrix(), P), check=True)


def _congruent(H, P):
    left = linalg.matmul(conj_transpose(P), H, zero=ZERO)
    return linalg.matmul(left, P, zero=ZERO)


# -- diagonalization ----------------------------------------------------------

@dataclass
class Diagonalization:
    """Diagonal entries d and base change Q with conj(Q)^t M Q = diag(d)."""
    diag: list
    Q: list
    provenance: list = field(default_factory=list)


@dataclass
class WittRepresentative:
    diag: list
    provenance: list = field(default_factory=list)

    def is_empty(self):
        return not self.diag


def _step(kind, **data):
    return {"kind": kind, "data": {k: _plain(v) for k, v in data.items()}}


def _plain(v):
    if isinstance(v, (RatFunc, LaurentPoly, Fraction)):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v


def diagonalize(M):
    """Symmetric elimination, pivoting on the lowest-index nonzero diagonal
    entry; when the trailing diagonal vanishes, e_i + mu e_j is used with
    mu = 1, or mu = conj(h_ij) if that still gives zero."""
    n = M.n
    H = M.matrix()
    Q = linalg.identity(n, ONE, ZERO)
    log = []
    for k in range(n):
        i = next((i for i in range(k, n) if not H[i][i].is_zero()), None)
        if i is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n)
                         if not H[i][j].is_zero()), None)
            if pair is None:
                raise SingularForm("form is singular; split off the radical first")
            i, j = pair
            h = H[i][j]
            mu = ONE
            if (h + h.involute()).is_zero():
                mu = h.involute()
            _combine(H, Q, i, j, mu, k)
            log.append(_step("pivot", combine=[i, j], mu=mu))
        if i != k:
            H[i], H[k] = H[k], H[i]
            for row in H:
                row[i], row[k] = row[k], row[i]
            for row in Q:
                row[i], row[k] = row[k], row[i]
            log.append(_step("swap", rows=[k, i]))
        d = H[k][k]
        log.append(_step("pivot", index=k, value=d))
        factors = {}
        for j in range(k + 1, n):
            if not H[k][j].is_zero():
                factors[j] = H[k][j] / d
        for j, f in factors.items():
            for row in Q:
                if not row[k].is_zero():
                    row[j] = row[j] - f * row[k]
        # Schur complement on the upper triangle, mirrored afterwards
        for j, f in factors.items():
            for i2 in range(k + 1, j + 1):
                hik = H[i2][k]
                if not hik.is_zero():
                    H[i2][j] = H[i2][j] - hik * f
        for i2 in range(k + 1, n):
            H[k][i2] = ZERO
            H[i2][k] = ZERO
            for j in range(i2 + 1, n):
                H[j][i2] = H[i2][j].involute()
    return Diagonalization([H[k][k] for k in range(n)], Q, log)


def _combine(H, Q, i, j, mu, start):
    """Replace e_i by e_i + mu e_j."""
    n = len(H)
    mub = mu.involute()
    for k in range(start, n):
        H[k][i] = H[k][i] + H[k][j] * mu
    for k in range(start, n):
        H[i][k] = H[i][k] + mub * H[j][k]
    for row in Q:
        row[i] = row[i] + row[j] * mu


# -- Witt reduction -----------------------------------------------------------

def norm_rescale(f, g):
    """<f> ~ <g conj(g) f>."""
    g = rat(g)
    return rat(f) * g * g.involute()


def _squarefree_int(c):
    """Square-free integer in the square class of the positive rational c."""
    n = c.numerator * c.denominator
    out = 1
    p = 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
        if n % p == 0:
            out *= p
            n //= p
        p += 1
    return out * n


def square_class_rep(f):
    """Return (g, h) with h = g conj(g) f in a normalized shape: a
    symmetric Laurent polynomial, square-free away from units, with
    square-free integer content."""
    f = rat(f)
    if f.is_zero():
        raise SingularForm("zero diagonal entry")
    g = RatFunc(f.den)
    L = (f * f.den * f.den.involute()).to_laurent()
    F = LaurentPoly({0: 1})
    for P, mult in squarefree_decomposition(L):
        if mult >= 2:
            F = F * P ** (mult // 2)
    if F.span() > 0:
        norm = F * F.involute()
        L = exact_quotient(L, norm)
        g = g / RatFunc(F)
    c = content(L)
    unit = Fraction(_squarefree_int(c), 1)
    scale = unit / c
    # scale is a rational square, so it is a norm
    root = Fraction(_exact_isqrt(scale.numerator), _exact_isqrt(scale.denominator))
    L = L * scale
    g = g * root
    return g, RatFunc(L)


def _exact_isqrt(n):
    r = isqrt(n)
    if r * r != n:
        raise ArithmeticError("not a square")
    return r


def witt_reduce(diag, provenance=None):
    """Normalize each entry up to norms, then cancel pairs d, -d."""
    if isinstance(diag, (Diagonalization, WittRepresentative)):
        provenance = list(diag.provenance) if provenance is None else provenance
        diag = diag.diag
    log = list(provenance or [])
    entries = []
    for d in diag:
        d = rat(d)
        if d.is_zero():
            raise SingularForm("zero diagonal entry")
        g, h = square_class_rep(d)
        if h != d:
            log.append(_step("norm-rescale", entry=d, factor=g, result=h))
        entries.append(h)
    kept = []
    for h in entries:
        neg = -h
        idx = next((i for i, k in enumerate(kept) if k == neg), None)
        if idx is not None:
            log.append(_step("cancel", pair=[kept[idx], h]))
            kept.pop(idx)
        else:
            kept.append(h)
    return WittRepresentative(kept, log)


# -- metabolizers -------------------------------------------------------------

def pairing(M, u, v):
    """conj(u)^t M v."""
    H = M.entries
    u = [rat(x) for x in u]
    v = [rat(x) for x in v]
    total = ZERO
    for i, ui in enumerate(u):
        if ui.is_zero():
            continue
        row = H[i]
        s = ZERO
        for j, vj in enumerate(v):
            if not vj.is_zero() and not row[j].is_zero():
                s = s + row[j] * vj
        total = total + ui.involute() * s
    return total


def _rank(vectors):
    rows = [[rat(x) for x in v] for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        k = next((i for i in range(rank, len(rows)) if not rows[i][c].is_zero()), None)
        if k is None:
            continue
        rows[rank], rows[k] = rows[k], rows[rank]
        piv = rows[rank][c]
        for i in range(rank + 1, len(rows)):
            if not rows[i][c].is_zero():
                f = rows[i][c] / piv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def verify_metabolizer(M, basis):
    """True iff ``basis`` spans a half-dimensional subspace on which the
    form vanishes identically."""
    n = M.n
    if n % 2 or len(basis) != n // 2:
        raise DimensionMismatch(f"need {n // 2} vectors for a form of rank {n}")
    if any(len(v) != n for v in basis):
        raise DimensionMismatch(f"vectors must have length {n}")
    if basis and _rank(basis) != len(basis):
        return False
    for i, u in enumerate(basis):
        for v in basis[i:]:
            if not pairing(M, u, v).is_zero():
                return False
    return True


# -- signatures ---------------------------------------------------------------

def _ball_matrix(M, a, b, p):
    n = M.n
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            z = eval_ratfunc_ball(M.entries[i][j], a, b, p)
            out[i][j] = z
            out[j][i] = (z[0], (-z[1][0], z[1][1]))
        re = out[i][i][0]
        out[i][i] = (re, (0, 0))
    return out


def signature_at(M, a, b, cap=None):
    """Signature of M at omega = exp(2 pi i a / b)."""
    if M.n == 0:
        return 0
    for row in M.entries:
        for x in row:
            if not x.is_laurent() and vanishes_at_root_of_unity(x.den, a, b):
                raise SingularAtSample(a, b, f"an entry has a pole at exp(2 pi i {a}/{b})")
    if vanishes_at_root_of_unity(M.det().num, a, b):
        raise SingularAtSample(a, b)
    return certified_signature(lambda p: _ball_matrix(M, a, b, p), cap)


def signature_profile(M, samples, cap=None):
    return [signature_at(M, a, b, cap) for a, b in samples]


def verdict(M, samples=(), diagonal=None):
    """Three-valued Witt verdict for the class of M."""
    diag = diagonal if diagonal is not None else diagonalize(M)
    rep = witt_reduce(diag)
    if rep.is_empty():
        return TRIVIAL, rep
    for a, b in samples:
        try:
            if signature_at(M, a, b):
                return NONTRIVIAL, rep
        except SingularAtSample:
            continue
    return UNDECIDED, rep
