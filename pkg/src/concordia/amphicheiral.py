"""Paired crossing changes on strongly positive amphicheiral knots.

For equivariant data (A, T, a, b) the two Seifert matrices V^-1 and V^0
differ by a symmetric pair of crossing changes.  One unipotent base change
P splits V^eps_t as A_t + C + (-C^t), which yields both the square
factorization Delta(V^-1) = (c + 1)^2 Delta(V^0) and the Witt triviality
of the difference.
"""
from dataclasses import dataclass, field

from . import linalg
from .concordance import (REFUTED, UNDECIDED, VERIFIED, _column_clearing,
                          _inverse, _quad)
from .errors import ChainMismatch, IdentityFailure
from .laurent import LaurentPoly, RatFunc, is_square_up_to_units
from .samples import regular_samples
from .seifert import (AmphicheiralData, SeifertMatrix, alexander_polynomial,
                      build_v_epsilon, check_equivariance, validate)
from .signatures import sigma
from .witt import (ONE, ONE_MINUS_T, ONE_MINUS_TBAR, ZERO, Z2, HermitianForm,
                   congruence, diagonalize, hermitianize, verify_metabolizer,
                   witt_reduce)

__all__ = [
    "AmphicheiralData", "HKCertificate", "LongCertificate", "check_equivariance",
    "hk_factorize", "long_certificate", "paired_crossing_walk", "minus_minus",
    "square_metabolizer",
]

IDENTITIES = ("i", "ii", "iii", "iv", "v")


@dataclass
class HKCertificate:
    data: AmphicheiralData
    v_minus_plus: SeifertMatrix
    v_plus_minus: SeifertMatrix
    c_of_t: RatFunc
    F: LaurentPoly
    flags: dict
    delta_plus_minus: LaurentPoly = None
    delta_minus_plus: LaurentPoly = None
    C: list = field(default_factory=list)

    def to_json(self):
        return {
            "kind": "hartley-kawauchi",
            "verdict": VERIFIED if all(self.flags.values()) else REFUTED,
            "c_of_t": str(self.c_of_t),
            "F": None if self.F is None else str(self.F),
            "delta_plus_minus": str(self.delta_plus_minus),
            "delta_minus_plus": str(self.delta_minus_plus),
            "checks": dict(self.flags),
            "samples": [],
            "provenance": [],
        }


def _c_block(c, eps):
    return [[c, ONE_MINUS_T], [ONE_MINUS_TBAR, -Z2 * eps]]


def _neg_transpose(C):
    return [[-C[j][i] for j in range(len(C))] for i in range(len(C))]


def hk_factorize(d):
    """Run the P-congruence on both V^eps and check identities (i)-(v)."""
    v_pm = build_v_epsilon(d, -1)
    v_mp = build_v_epsilon(d, 0)
    A = [list(row) for row in d.A]
    T = [list(row) for row in d.T]
    a = list(d.a)
    r = len(A)
    Tta = [sum(T[k][i] * a[k] for k in range(r)) for i in range(r)]
    if r:
        At = hermitianize(A)
        Ainv = _inverse(At)
        col = lambda v: [Z2 * sum((Ainv[i][j] * v[j] for j in range(r) if v[j]), ZERO)
                         for i in range(r)]
        P = _column_clearing(r + 4, r, {r: col(a), r + 2: [-x for x in col(Tta)]})
        quad = _quad(a, Ainv, a)
        dt = Z2 * Z2 * _quad(a, Ainv, Tta)
    else:
        At = HermitianForm([])
        P = linalg.identity(4, ONE, ZERO)
        quad = dt = ZERO
    c = -Z2 * d.b - Z2 * Z2 * quad
    flags = {}
    flags["i"] = c == c.involute()
    x, tx = r, r + 2
    W = {eps: congruence(hermitianize(v), P) for eps, v in ((-1, v_pm), (0, v_mp))}
    flags["ii"] = all(w.entries[tx][tx] == -c for w in W.values())
    flags["iii"] = dt.is_zero() and all(
        w.entries[x][tx].is_zero() and w.entries[tx][x].is_zero() for w in W.values())
    blocks_ok = True
    for eps, w in W.items():
        C = _c_block(c, eps)
        target = linalg.block_diag([list(row) for row in At.entries], C, _neg_transpose(C), zero=ZERO)
        blocks_ok = blocks_ok and [list(row) for row in w.entries] == target
    flags["iv"] = blocks_ok
    d_pm = alexander_polynomial(v_pm)
    d_mp = alexander_polynomial(v_mp)
    d_A = alexander_polynomial(A) if r % 2 == 0 else None
    flags["v"] = (RatFunc(d_pm) == (c + 1) * (c + 1) * RatFunc(d_mp)
                  and (d_A is None or d_mp == d_A))
    F = is_square_up_to_units(d_pm)
    for name in IDENTITIES:
        if not flags[name]:
            raise IdentityFailure(name, f"c(t) = {c}")
    return HKCertificate(d, v_mp, v_pm, c, F, flags, d_pm, d_mp, _c_block(c, -1))


def minus_minus(d):
    """The intermediate knot with only the first crossing of the pair changed."""
    V = build_v_epsilon(d, 0).matrix()
    V[-1][-1] = 1
    return validate(V, "K--")


def square_metabolizer(F, G, delta):
    """Check that (G, F) spans a metabolizer of <F^2 delta> + <-G^2 delta>."""
    F, G, delta = RatFunc(F), RatFunc(G), RatFunc(delta)
    M = HermitianForm.diagonal([F * F * delta, -(G * G * delta)])
    return verify_metabolizer(M, [[G, F]])


@dataclass
class LongCertificate:
    hk: HKCertificate
    F: LaurentPoly
    G: LaurentPoly
    delta_mm: LaurentPoly
    checks: dict
    provenance: list
    samples: list

    @property
    def verified(self):
        return all(self.checks.values())

    def to_json(self):
        return {
            "kind": "long",
            "verdict": VERIFIED if self.verified else UNDECIDED,
            "c_of_t": str(self.hk.c_of_t),
            "F": None if self.F is None else str(self.F),
            "G": None if self.G is None else str(self.G),
            "delta_minus_minus": str(self.delta_mm),
            "checks": dict(self.checks),
            "hk_checks": dict(self.hk.flags),
            "samples": [list(s) for s in self.samples],
            "provenance": self.provenance,
        }


def long_certificate(d, samples=50, cap=None):
    """Algebraic sliceness of the difference W_t(V^-1) - W_t(V^0)."""
    hk = hk_factorize(d)
    c = hk.c_of_t
    d_mm = alexander_polynomial(minus_minus(d))
    d_A = alexander_polynomial([list(row) for row in d.A])
    checks = {"delta_minus_minus": RatFunc(d_mm) == (c + 1) * RatFunc(d_A)}
    F = hk.F
    G = is_square_up_to_units(hk.delta_minus_plus)
    if F is not None and G is not None:
        checks["squares"] = F * F == hk.delta_plus_minus and G * G == hk.delta_minus_plus
        checks["metabolizer"] = square_metabolizer(F, G, d_mm)
    else:
        checks["metabolizer"] = False
    C = HermitianForm(hk.C)
    dC = diagonalize(C)
    Qbar = [[q.involute() for q in row] for row in dC.Q]
    checks["transpose_diagonalizes"] = (
        congruence(C.transpose(), Qbar) == HermitianForm.diagonal(dC.diag))
    red = witt_reduce(dC.diag + [-x for x in dC.diag], dC.provenance)
    checks["C_minus_Ct_trivial"] = red.is_empty()
    pts = regular_samples(samples, avoid=(hk.delta_plus_minus, hk.delta_minus_plus)) if samples else []
    checks["signatures"] = all(
        sigma(hk.v_plus_minus, a, b, cap) == sigma(hk.v_minus_plus, a, b, cap) for a, b in pts)
    return LongCertificate(hk, F, G, d_mm, checks, red.provenance, pts)


def paired_crossing_walk(steps, samples=10, cap=None):
    """Each step turns V^-1 into V^0 by a paired crossing change; the next
    step must start where the last one ended and the walk must end at a
    form with trivial Alexander polynomial."""
    prev = None
    for i, d in enumerate(steps):
        start = alexander_polynomial(build_v_epsilon(d, -1))
        if prev is not None and start != prev:
            raise ChainMismatch(f"step {i} does not continue step {i - 1}")
        cert = long_certificate(d, samples=samples, cap=cap)
        if not cert.verified:
            return False
        prev = cert.hk.delta_minus_plus
    if prev is not None and prev != LaurentPoly({0: 1}):
        raise ChainMismatch(f"walk ends at Alexander polynomial {prev}, not 1")
    return True
