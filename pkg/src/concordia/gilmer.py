"""Gilmer's bound as executable inequalities.

Casson-Gordon invariants enter only through closed formulas in s_7(J):
a character built from eigenvector coefficients (a_i, b_i) mod 7 has
value (sum eps(a_i) + sum eps(b_i)) s_7(J), negated on the 4-eigenspace.
Nothing here computes a Casson-Gordon invariant from a 4-manifold.
Upper bounds on the 4-genus come from geometric constructions; they are
carried as asserted metadata and never recomputed.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import ceil, floor

from .errors import BadFamily, OracleMismatch, PreconditionFailed, TooLarge
from .seifert import validate
from .signatures import s7, sigma

FAMILIES = ("K_J", "L_J", "mLJ", "T_J")
EIGENCLASSES = (2, 4)
TUPLE_LIMIT = 7 ** 6

HYPOTHESES = (
    "m L_J is algebraically slice, so Gilmer's theorem applies",
    "Casson-Gordon values are taken from the closed s_7 formula, not computed",
)
ASSERTED_UPPER_BOUND_SOURCE = (
    "asserted: g_4(L_J) <= 1 by surgery on a genus-2 Seifert surface in the "
    "4-ball, hence g_4(m L_J) <= m; geometric, not recomputed"
)


def epsilon(x):
    return 0 if x % 7 == 0 else 1


@dataclass(frozen=True)
class CGFormulaContext:
    J: object
    s7_value: int
    family: str
    m: int = 1

    @classmethod
    def make(cls, J, family="L_J", m=1):
        if family not in FAMILIES:
            raise BadFamily(f"unknown family {family!r}")
        J = validate(J)
        return cls(J, s7(J), family, m)

    @property
    def length(self):
        """Number of eigenvector coefficients in one eigenclass."""
        return {"K_J": 1, "L_J": 2, "mLJ": 2 * self.m}.get(self.family)


def cg_value(ctx, coeffs, eigenclass=2):
    """Closed-form Casson-Gordon value of the character dual to
    sum a_i e_i + sum b_i e_i' in the given eigenclass."""
    if ctx.family == "T_J":
        raise BadFamily("T_J has no closed 3-fold cover formula; use growth_bound_check")
    if ctx.family not in FAMILIES:
        raise BadFamily(f"unknown family {ctx.family!r}")
    if eigenclass not in EIGENCLASSES:
        raise BadFamily(f"eigenclass must be 2 or 4, not {eigenclass}")
    coeffs = tuple(coeffs)
    if len(coeffs) != ctx.length:
        raise BadFamily(f"{ctx.family} needs {ctx.length} coefficients, got {len(coeffs)}")
    value = sum(epsilon(x) for x in coeffs) * ctx.s7_value
    return value if eigenclass == 2 else -value


def gilmer_dimension_bound(q, g, dimH1):
    """Smallest dim D allowed by dim H - 2 dim D <= 2 (q - 1) g."""
    if q < 2 or g < 0 or dimH1 < 0:
        raise PreconditionFailed("need q >= 2 and nonnegative g, dim H_1")
    return max(0, ceil(Fraction(dimH1 - 2 * (q - 1) * g, 2)))


@dataclass
class GapRecord:
    k: int
    dimD_min: int
    cg_min: int
    bound: int

    @property
    def contradiction(self):
        return self.cg_min > self.bound

    def to_json(self):
        return {"k": self.k, "dimD_min": self.dimD_min, "cg_min": self.cg_min,
                "bound": self.bound, "contradiction": self.contradiction}


@dataclass
class GenusGapCertificate:
    n: int
    m: int
    J: object
    s7: int
    per_k_records: list
    tuples_enumerated: int
    hypotheses: tuple = HYPOTHESES

    @property
    def lower_bound(self):
        """g_4(m L_J) >= m when every k < m is contradicted."""
        return self.m if all(r.contradiction for r in self.per_k_records) else None

    def to_json(self):
        return {
            "n": self.n,
            "m": self.m,
            "s7": self.s7,
            "records": [r.to_json() for r in self.per_k_records],
            "lower_bound": self.lower_bound,
            "tuples_enumerated": self.tuples_enumerated,
            "hypotheses": list(self.hypotheses),
            "asserted_upper_bound": {"value": self.m, "source": ASSERTED_UPPER_BOUND_SOURCE},
        }


@dataclass
class GenusGapResult:
    n: int
    s7: int
    certificates: list = field(default_factory=list)

    def to_json(self):
        return {"n": self.n, "s7": self.s7,
                "certificates": [c.to_json() for c in self.certificates]}


def _min_abs_cg(ctx):
    """Minimum |cg_value| over nonzero coefficient tuples in both eigenclasses."""
    best = None
    count = 0
    for coeffs in product(range(7), repeat=ctx.length):
        if not any(coeffs):
            continue
        count += 1
        for cls in EIGENCLASSES:
            v = abs(cg_value(ctx, coeffs, cls))
            if best is None or v < best:
                best = v
    return best, count


def genus_gap_certify(n, J):
    """Certify g_4(m L_J) >= m for every m <= n; needs s_7(J) > 6n."""
    J = validate(J)
    s = s7(J)
    if s <= 6 * n:
        raise PreconditionFailed(f"s_7(J) = {s} must exceed 6n = {6 * n}")
    if 7 ** (2 * n) > TUPLE_LIMIT:
        raise TooLarge(f"7^{2 * n} coefficient tuples exceed the guard 7^6")
    result = GenusGapResult(n, s)
    for m in range(1, n + 1):
        ctx = CGFormulaContext(J, s, "mLJ", m)
        cg_min, count = _min_abs_cg(ctx)
        if cg_min != abs(s):
            raise OracleMismatch(f"enumerated minimum {cg_min} differs from |s_7| = {abs(s)}")
        records = []
        for k in range(m):
            dim_d = gilmer_dimension_bound(3, k, 4 * m)
            if dim_d < 2 * (m - k):
                raise OracleMismatch(f"dimension bound {dim_d} below 2(m - k)")
            records.append(GapRecord(k, dim_d, cg_min, 6 * k))
        result.certificates.append(GenusGapCertificate(n, m, J, s, records, count))
    return result


@dataclass
class GrowthReport:
    epsilon: Fraction
    n: int
    sigma_third: int
    bound: Fraction
    certifies: bool
    chain: list

    def to_json(self):
        return {
            "epsilon": str(self.epsilon),
            "n": self.n,
            "sigma_1_3": self.sigma_third,
            "bound": str(self.bound),
            "certifies": self.certifies,
            "chain": self.chain,
        }


def growth_bound_check(epsilon_num, J, n=None):
    """Does |sigma_{1/3}(J)| exceed 2(1 - eps)/eps?  If so, no genus
    k <= (1 - eps) n surface for n T_J survives Gilmer's bound.

    The chain is also evaluated at a concrete n, by default the
    denominator of eps so that (1 - eps) n is an integer.
    """
    eps = Fraction(epsilon_num)
    if not 0 < eps < 1:
        raise PreconditionFailed("epsilon must lie strictly between 0 and 1")
    if n is None:
        n = eps.denominator
    if n < 1:
        raise PreconditionFailed("n must be positive")
    s = sigma(J, 1, 3)
    bound = 2 * (1 - eps) / eps
    k = floor((1 - eps) * n)
    lhs = abs((n - k) * 2 * s)
    chain = [
        {"claim": "dim H_1(n M_2; Z_3)", "value": 2 * n},
        {"claim": "largest genus k <= (1 - eps) n", "value": k},
        {"claim": "dim D >= n - k", "value": n - k},
        {"claim": "|(n - k) 2 sigma_1/3(J)| <= 4k", "lhs": lhs, "rhs": 4 * k, "holds": lhs <= 4 * k},
        {"claim": "|sigma_1/3(J)| <= 2(1 - eps)/eps", "lhs": abs(s), "rhs": str(bound),
         "holds": abs(s) <= bound},
    ]
    return GrowthReport(eps, n, s, bound, abs(s) > bound, chain)
