"""Seifert matrices and the block constructions built from them.

Every assembled matrix lists the base block first and the auxiliary band
generators last, in the order they are introduced, so that base changes in
other modules can address fixed indices.
"""
import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import (EquivarianceViolated, InvalidBlock, NotSeifert, OddRank,
                     OracleMismatch, ParseError)
from .laurent import LaurentPoly, conway_from_s
from .linalg import det_int, matmul, transpose


def _check_square(M):
    if any(len(row) != len(M) for row in M):
        raise ParseError("matrix is not square")


def _skew_det(M):
    return det_int([[M[i][j] - M[j][i] for j in range(len(M))] for i in range(len(M))])


@dataclass(frozen=True)
class SeifertMatrix:
    """Integer r x r matrix V with det(V - V^t) = +-1 (knot case).

    Odd-rank matrices only occur as the smoothing in a crossing triple;
    they are admitted with ``is_knot = False``.
    """
    entries: tuple
    label: str = ""
    is_knot: bool = True
    rationally_nonsingular: bool = True

    @property
    def rank(self):
        return len(self.entries)

    def matrix(self):
        return [list(row) for row in self.entries]

    def transpose(self):
        return transpose(self.matrix())

    def __len__(self):
        return self.rank

    def __eq__(self, other):
        if isinstance(other, SeifertMatrix):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def to_json(self):
        return {"label": self.label, "matrix": self.matrix()}


def validate(V, label="", allow_link=False):
    """Wrap V as a SeifertMatrix, checking det(V - V^t) = +-1.

    With ``allow_link`` an odd-rank matrix is accepted and flagged as a
    link form.
    """
    if isinstance(V, SeifertMatrix):
        label = label or V.label
        V = V.matrix()
    V = [[int(x) for x in row] for row in V]
    _check_square(V)
    r = len(V)
    d = _skew_det(V)
    is_knot = r % 2 == 0
    if is_knot and d not in (1, -1):
        raise NotSeifert(d)
    if not is_knot and not allow_link:
        raise NotSeifert(d)
    sym = [[V[i][j] + V[j][i] for j in range(r)] for i in range(r)]
    nonsingular = is_knot and det_int(sym) != 0
    return SeifertMatrix(tuple(tuple(row) for row in V), label, is_knot, nonsingular)


def _as_matrix(V):
    return V.matrix() if isinstance(V, SeifertMatrix) else [list(row) for row in V]


def mirror(V):
    M = _as_matrix(V)
    label = f"mirror({V.label})" if isinstance(V, SeifertMatrix) and V.label else ""
    return validate([[-x for x in row] for row in transpose(M)], label)


def reverse(V):
    label = f"reverse({V.label})" if isinstance(V, SeifertMatrix) and V.label else ""
    return validate(transpose(_as_matrix(V)), label)


def connected_sum(*Vs):
    blocks = [_as_matrix(V) for V in Vs]
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    k = 0
    for b in blocks:
        for i, row in enumerate(b):
            out[k + i][k:k + len(row)] = row
        k += len(b)
    labels = [V.label for V in Vs if isinstance(V, SeifertMatrix) and V.label]
    return validate(out, " # ".join(labels))


def _band_matrix(A, a, b, eps):
    """The (r+2)-square matrix [[A, a, 0], [a^t, b, 1], [0, 0, eps]]."""
    A = _as_matrix(A)
    r = len(A)
    a = [int(x) for x in a]
    if len(a) != r:
        raise InvalidBlock(f"column has height {len(a)}, expected {r}")
    out = [list(row) + [a[i], 0] for i, row in enumerate(A)]
    out.append(a + [b, 1])
    out.append([0] * r + [0, eps])
    return out


def s_enlarge(A, a, b):
    """Elementary S-equivalence enlargement of A."""
    return validate(_band_matrix(A, a, b, 0), allow_link=True)


@dataclass(frozen=True)
class CrossingTriple:
    plus: SeifertMatrix
    minus: SeifertMatrix
    smooth: SeifertMatrix
    base: SeifertMatrix
    column: tuple
    b: int


def crossing_triple(A, a, b):
    """Seifert matrices of L+, L- and the smoothing L_s for a band pair
    attached to the surface with Seifert matrix A."""
    base = A if isinstance(A, SeifertMatrix) else validate(A, allow_link=True)
    plus = _band_matrix(base.matrix(), a, b, -1)
    minus = _band_matrix(base.matrix(), a, b, 0)
    smooth = [row[:-1] for row in plus[:-1]]
    return CrossingTriple(
        plus=validate(plus, "L+", allow_link=True),
        minus=validate(minus, "L-", allow_link=True),
        smooth=validate(smooth, "Ls", allow_link=True),
        base=base,
        column=tuple(int(x) for x in a),
        b=int(b),
    )


@dataclass(frozen=True)
class Genus2MutationPair:
    A: tuple
    C: tuple
    b: tuple
    V: SeifertMatrix
    Vstar: SeifertMatrix


def _assemble(A, B, C):
    m, n = len(A), len(C)
    Bt = transpose(B) if B else [[] for _ in range(m)]
    top = [list(A[i]) + list(Bt[i]) for i in range(m)]
    bottom = [list(B[i]) + list(C[i]) for i in range(n)]
    return top + bottom


def genus2_mutant(A, C, b):
    """Seifert matrices [[A, B^t], [B, C]] and [[A, B^t], [B, C^t]] with
    B = (0 | b)."""
    A = _as_matrix(A)
    C = _as_matrix(C)
    b = [int(x) for x in b]
    if not A:
        raise InvalidBlock("the A block must be nonempty")
    for name, X in (("A", A), ("C", C)):
        if len(X) % 2 or _skew_det(X) not in (1, -1):
            raise InvalidBlock(f"{name} fails det({name} - {name}^t) = +-1")
    if len(b) != len(C):
        raise InvalidBlock(f"b has height {len(b)}, expected {len(C)}")
    m = len(A)
    B = [[0] * (m - 1) + [bi] for bi in b]
    V = validate(_assemble(A, B, C), "K")
    Vstar = validate(_assemble(A, B, transpose(C)), "K*")
    return Genus2MutationPair(
        tuple(map(tuple, A)), tuple(map(tuple, C)), tuple(b), V, Vstar)


# -- polynomials --------------------------------------------------------------

def _det_pencil(M):
    """Coefficients of P(u) = det(M - u M^t), by interpolation at u = 0..r."""
    r = len(M)
    Mt = transpose(M)
    values = [det_int([[M[i][j] - u * Mt[i][j] for j in range(r)] for i in range(r)])
              for u in range(r + 1)]
    # Newton divided differences, then expand to monomials
    coef = [Fraction(v) for v in values]
    for k in range(1, r + 1):
        for i in range(r, k - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / k
    poly = [Fraction(0)] * (r + 1)
    for k in range(r, -1, -1):
        # poly = poly * (u - k) + coef[k]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [s - k * p for s, p in zip(shifted, poly)]
        poly[0] += coef[k]
    if any(c.denominator != 1 for c in poly):
        raise OracleMismatch("non-integral determinant pencil")
    return [int(c) for c in poly]


def alexander_polynomial(V):
    """Delta(t) = t^(-r/2) det(V - t V^t), normalized so Delta(1) = 1."""
    M = _as_matrix(V)
    r = len(M)
    if r % 2:
        raise OddRank(f"rank {r} is odd; the Alexander polynomial needs a knot")
    coeffs = _det_pencil(M)
    delta = LaurentPoly({k - r // 2: c for k, c in enumerate(coeffs)})
    if delta(1) != 1:
        raise OracleMismatch(f"Delta(1) = {delta(1)}, expected 1")
    return delta


def conway_polynomial(V):
    """Conway polynomial in z = t^(-1/2) - t^(1/2) for a knot or link form."""
    M = _as_matrix(V)
    r = len(M)
    coeffs = _det_pencil(M)
    sign = -1 if r % 2 else 1
    # (-1)^r s^(-r) P(s^2) as a Laurent polynomial in s = t^(1/2)
    in_s = LaurentPoly({2 * k - r: sign * c for k, c in enumerate(coeffs)})
    return conway_from_s(in_s)


# -- strongly positive amphicheiral data -------------------------------------

@dataclass(frozen=True)
class AmphicheiralData:
    A: tuple
    T: tuple
    a: tuple
    b: int
    epsilon: int = -1

    @classmethod
    def make(cls, A, T, a, b, epsilon=-1):
        return cls(tuple(map(tuple, _as_matrix(A))), tuple(map(tuple, T)),
                   tuple(int(x) for x in a), int(b), int(epsilon))

    def with_epsilon(self, eps):
        return AmphicheiralData(self.A, self.T, self.a, self.b, eps)


def check_equivariance(A, T):
    """True iff T^2 = I and T^t A T = -A^t."""
    A = _as_matrix(A)
    T = [list(row) for row in T]
    n = len(A)
    if len(T) != n:
        return False
    I = [[int(i == j) for j in range(n)] for i in range(n)]
    if matmul(T, T) != I:
        return False
    lhs = matmul(matmul(transpose(T), A), T) if n else []
    return lhs == [[-x for x in row] for row in transpose(A)]


def build_v_epsilon(d, epsilon=None):
    """The (r+4)-square Seifert matrix on (A-block, x, y, tau x, tau y)."""
    eps = d.epsilon if epsilon is None else epsilon
    A = [list(row) for row in d.A]
    T = [list(row) for row in d.T]
    if not check_equivariance(A, T):
        raise EquivarianceViolated("T^2 = I and T^t A T = -A^t must hold")
    r = len(A)
    a = list(d.a)
    if len(a) != r:
        raise InvalidBlock(f"a has height {len(a)}, expected {r}")
    Tta = [sum(T[k][i] * a[k] for k in range(r)) for i in range(r)]
    atT = [sum(a[k] * T[k][j] for k in range(r)) for j in range(r)]
    n = r + 4
    x, y, tx, ty = r, r + 1, r + 2, r + 3
    V = [[0] * n for _ in range(n)]
    for i in range(r):
        V[i][:r] = A[i]
        V[i][x] = a[i]
        V[i][tx] = -Tta[i]
        V[x][i] = a[i]
        V[tx][i] = -atT[i]
    V[x][x] = d.b
    V[x][y] = 1
    V[y][y] = eps
    V[tx][tx] = -d.b
    V[ty][tx] = -1
    V[ty][ty] = -eps
    return validate(V, f"V^{eps}")


def generator_family(m, n, a=(1, 0, 0, 0), b=1, epsilon=-1):
    """Equivariant data A = [[0, M], [N, 0]], T = block swap, with M, N
    skew 2x2 blocks; requires m + n = +-1."""
    A = [[0, 0, 0, m], [0, 0, -m, 0], [0, n, 0, 0], [-n, 0, 0, 0]]
    T = [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]
    return AmphicheiralData.make(A, T, a, b, epsilon)


# -- random generators --------------------------------------------------------

def _symplectic_part(r):
    K = [[0] * r for _ in range(r)]
    for i in range(0, r, 2):
        K[i][i + 1] = 1
    return K


def random_unimodular(rng, r, steps=None):
    """Product of random elementary integer matrices."""
    P = [[int(i == j) for j in range(r)] for i in range(r)]
    for _ in range(steps if steps is not None else 2 * r):
        i, j = rng.sample(range(r), 2)
        c = rng.choice((-1, 1))
        for row in P:
            row[j] += c * row[i]
    return P


def random_seifert(rng, rank, bound=2, congruence=True):
    """Random knot-case Seifert matrix: symplectic part plus a random
    symmetric matrix, optionally moved by a unimodular congruence."""
    if rank % 2:
        raise ValueError("knot Seifert matrices have even rank")
    V = _symplectic_part(rank)
    for i in range(rank):
        for j in range(i, rank):
            s = rng.randint(-bound, bound)
            V[i][j] += s
            if i != j:
                V[j][i] += s
    if congruence and rank >= 2:
        P = random_unimodular(rng, rank, steps=rank)
        V = matmul(matmul(transpose(P), V), P)
    return validate(V)


def random_triple(rng, max_genus=2, bound=2):
    """Crossing triple on a random base surface; plus and minus are knots."""
    r = 2 * rng.randint(0, max_genus)
    A = random_seifert(rng, r, bound)
    a = [rng.randint(-bound, bound) for _ in range(r)]
    return crossing_triple(A, a, rng.randint(-bound, bound))


def random_genus2_pair(rng, bound=2):
    A = random_seifert(rng, 2 * rng.randint(1, 2), bound)
    C = random_seifert(rng, 2, bound)
    b = [rng.randint(-bound, bound) for _ in range(2)]
    return genus2_mutant(A, C, b)


# -- named matrices -----------------------------------------------------------

UNKNOT = validate([], "unknot")
TREFOIL_R = validate([[-1, 1], [0, -1]], "trefoil_R")
TREFOIL_L = validate([[1, 0], [-1, 1]], "trefoil_L")
FIGURE_EIGHT = validate([[-1, 1], [0, 1]], "figure-eight")
K_J = validate([[0, 2], [1, 0]], "K_J")


# -- text and JSON formats ----------------------------------------------------

def parse_text(text, label=""):
    """One row per line, whitespace-separated integers; blank lines and
    lines starting with '#' are ignored."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.split("#", 1)[0]
        if not stripped.strip():
            continue
        row = []
        col = 0
        for tok in stripped.split():
            col = stripped.index(tok, col) + 1
            try:
                row.append(int(tok))
            except ValueError:
                raise ParseError(f"not an integer: {tok!r}", lineno, col) from None
            col += len(tok) - 1
        if rows and len(row) != len(rows[0]):
            raise ParseError(f"row has {len(row)} entries, expected {len(rows[0])}", lineno, 1)
        rows.append(row)
    if rows and len(rows) != len(rows[0]):
        raise ParseError(f"{len(rows)} rows but {len(rows[0])} columns")
    return validate(rows, label)


def to_text(V):
    return "\n".join(" ".join(str(x) for x in row) for row in _as_matrix(V)) + "\n"


def loads_json(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return from_json(obj)


def from_json(obj):
    if isinstance(obj, list):
        obj = {"matrix": obj}
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise ParseError('expected an object with a "matrix" field')
    M = obj["matrix"]
    if not isinstance(M, list) or not all(
            isinstance(row, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in row)
            for row in M):
        raise ParseError('"matrix" must be a list of integer rows')
    if any(len(row) != len(M) for row in M):
        raise ParseError("matrix is not square")
    return validate(M, str(obj.get("label", "")))


def dumps_json(V):
    return json.dumps(V.to_json())
