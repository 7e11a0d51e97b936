"""Exact Laurent polynomials in t, rational functions with the involution
t -> 1/t, and Conway polynomials in z = t^(-1/2) - t^(1/2).

Coefficients are Python ints or Fractions; a coefficient that happens to
be integral is always stored as an int so that equality and hashing are
structural.
"""
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .errors import NotInImage, NotSymmetric, ParseError
from .intervals import ball_bounds, eval_laurent_ball


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _as_coeff(c):
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    raise TypeError(f"unsupported coefficient {c!r}")


class LaurentPoly:
    """Finitely supported polynomial in t and 1/t.

    Stored densely: ``coeffs[i]`` is the coefficient of ``t**(low + i)``;
    the first and last stored coefficients are nonzero.  The zero
    polynomial has ``coeffs == ()`` and ``low == 0``.
    """

    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, LaurentPoly):
            self.low, self.coeffs, self._hash = terms.low, terms.coeffs, terms._hash
            return
        elif not isinstance(terms, dict):
            terms = {0: terms}
        items = [(int(e), _as_coeff(c)) for e, c in terms.items() if c != 0]
        if not items:
            self.low, self.coeffs = 0, ()
        else:
            lo = min(e for e, _ in items)
            hi = max(e for e, _ in items)
            dense = [0] * (hi - lo + 1)
            for e, c in items:
                dense[e - lo] += c
            self.low, self.coeffs = _trim(lo, dense)
        self._hash = None

    @classmethod
    def _raw(cls, low, coeffs):
        p = cls.__new__(cls)
        p.low, p.coeffs = _trim(low, coeffs)
        p._hash = None
        return p

    @classmethod
    def from_dense(cls, low, coeffs):
        return cls._raw(low, [_as_coeff(c) for c in coeffs])

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    # -- basic structure --------------------------------------------------

    @property
    def high(self):
        return self.low + len(self.coeffs) - 1

    def span(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return not self.coeffs or (len(self.coeffs) == 1 and self.low == 0)

    def terms(self):
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c != 0}

    def __getitem__(self, exp):
        i = exp - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_integral(self):
        return all(isinstance(c, int) for c in self.coeffs)

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - lo + i] += c
        return LaurentPoly._raw(lo, [_norm(c) for c in out])

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.low, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return ZERO
            return LaurentPoly._raw(self.low, [_norm(c * other) for c in self.coeffs])
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly._raw(self.low + other.low, [_norm(c) for c in out])

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("LaurentPoly powers must be nonnegative ints")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LaurentPoly._raw(self.low, [_norm(Fraction(c) / other) for c in self.coeffs])
        return RatFunc(self) / other

    def __rtruediv__(self, other):
        return RatFunc(other) / RatFunc(self)

    def shift(self, k):
        """Multiply by t**k."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(self.low + k, self.coeffs)

    def involute(self):
        """Apply t -> 1/t."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(-self.high, tuple(reversed(self.coeffs)))

    def is_symmetric(self):
        return self == self.involute()

    def __call__(self, x):
        """Evaluate at a nonzero rational x (or any field element)."""
        total = 0
        for i, c in enumerate(self.coeffs):
            e = self.low + i
            total += c * (x ** e if e >= 0 else Fraction(1) / x ** (-e))
        return _norm(total) if isinstance(total, Fraction) else total

    def derivative(self):
        return LaurentPoly({self.low + i - 1: c * (self.low + i)
                            for i, c in enumerate(self.coeffs)})

    # -- equality / display -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.low == other.low and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return not self.coeffs
            return self.low == 0 and self.coeffs == (other,)
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.low, self.coeffs)) if len(self.coeffs) > 1 or self.low else \
                hash(self.coeffs[0] if self.coeffs else 0)
        return self._hash

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c:
                parts.append(f"{c}*t^{self.low + i}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text):
        return parse_laurent(text)


def _trim(low, coeffs):
    n = len(coeffs)
    start = 0
    while start < n and coeffs[start] == 0:
        start += 1
    if start == n:
        return 0, ()
    end = n
    while coeffs[end - 1] == 0:
        end -= 1
    return low + start, tuple(coeffs[start:end])


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return LaurentPoly({0: x})
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
T = LaurentPoly({1: 1})
TBAR = LaurentPoly({-1: 1})
#: z^2 with z = t^(-1/2) - t^(1/2); equivalently -(1 - t)(1 - 1/t).
Z2 = LaurentPoly({-1: 1, 0: -2, 1: 1})
ONE_MINUS_T = LaurentPoly({0: 1, 1: -1})
ONE_MINUS_TBAR = LaurentPoly({0: 1, -1: -1})


_TERM = re.compile(r"\s*([+-]?\d+(?:/\d+)?)\*t\^([+-]?\d+)\s*")


def parse_laurent(text):
    """Parse the canonical text form, e.g. ``"-2*t^1 + 5*t^0 + -2*t^-1"``.

    Terms must appear with strictly decreasing exponents and nonzero
    coefficients; the zero polynomial is written ``0``.
    """
    if text.strip() == "0":
        return ZERO
    terms = {}
    last = None
    col = 1
    for chunk in text.split(" + "):
        m = _TERM.fullmatch(chunk)
        if m is None:
            raise ParseError(f"bad term {chunk!r}", line=1, column=col)
        c = _norm(Fraction(m.group(1)))
        e = int(m.group(2))
        if c == 0:
            raise ParseError("zero coefficient", line=1, column=col)
        if last is not None and e >= last:
            raise ParseError("exponents must strictly decrease", line=1, column=col)
        terms[e] = c
        last = e
        col += len(chunk) + 3
    return LaurentPoly(terms)


# ---------------------------------------------------------------------------
# polynomial algebra over Q (ignoring powers of t)
# ---------------------------------------------------------------------------

def _poly_part(p):
    """Dense ascending coefficient list of p with the t-power stripped."""
    return list(p.coeffs)


def _divmod_dense(a, b):
    """Quotient and remainder of ascending dense lists over Q."""
    a = [Fraction(c) for c in a]
    db = len(b) - 1
    lead = Fraction(b[-1])
    if len(a) - 1 < db:
        return [0], a
    q = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c = a[i + db] / lead
        q[i] = c
        if c:
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    r = a[:db] if db > 0 else []
    while r and r[-1] == 0:
        r.pop()
    return [_norm(c) for c in q], [_norm(c) for c in r]


def poly_divmod(p, q):
    """Division with remainder of ordinary polynomials (low == 0 assumed
    after stripping t-powers is the caller's business)."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if p.low < 0 or q.low < 0:
        raise ValueError("poly_divmod needs ordinary polynomials")
    a = [0] * p.low + list(p.coeffs)
    b = [0] * q.low + list(q.coeffs)
    if not a:
        return ZERO, ZERO
    qq, rr = _divmod_dense(a, b)
    return LaurentPoly._raw(0, qq), LaurentPoly._raw(0, rr)


def monic(p):
    if p.is_zero():
        return p
    lc = Fraction(p.leading())
    return LaurentPoly._raw(p.low, [_norm(c / lc) for c in p.coeffs])


def poly_gcd(p, q):
    """Monic gcd of p and q in Q[t], ignoring factors of t."""
    a = LaurentPoly._raw(0, p.coeffs)
    b = LaurentPoly._raw(0, q.coeffs)
    while not b.is_zero():
        _, r = poly_divmod(a, b)
        a, b = b, monic(r) if not r.is_zero() else r
    return monic(a)


def exact_quotient(p, q):
    """p / q as a LaurentPoly; raises ValueError if q does not divide p."""
    if q.is_zero():
        raise ZeroDivisionError
    if p.is_zero():
        return ZERO
    a = LaurentPoly._raw(0, p.coeffs)
    b = LaurentPoly._raw(0, q.coeffs)
    quo, rem = poly_divmod(a, b)
    if not rem.is_zero():
        raise ValueError("inexact Laurent division")
    return quo.shift(p.low - q.low)


def content(p):
    """Positive rational c with p / c primitive integral."""
    if p.is_zero():
        return Fraction(0)
    den = 1
    for c in p.coeffs:
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    num = 0
    for c in p.coeffs:
        num = gcd(num, int(c * den))
    return Fraction(num, den)


def squarefree_decomposition(p):
    """Yun's algorithm.  Returns a list of (factor, multiplicity) with
    monic ordinary-polynomial factors whose product (with multiplicities),
    times the leading coefficient and a power of t, equals p."""
    f = LaurentPoly._raw(0, p.coeffs)
    if f.span() <= 0:
        return []
    out = []
    df = f.derivative()
    a = poly_gcd(f, df)
    b = exact_quotient(f, a)
    c = exact_quotient(df, a) if not df.is_zero() else ZERO
    d = c - b.derivative()
    i = 1
    while b.span() > 0:
        a = poly_gcd(b, d)
        if a.span() > 0:
            out.append((monic(a), i))
        b = exact_quotient(b, a)
        c = exact_quotient(d, a) if not d.is_zero() else ZERO
        d = c - b.derivative()
        i += 1
    return out


@lru_cache(maxsize=None)
def cyclotomic(n):
    """The n-th cyclotomic polynomial as a LaurentPoly in t."""
    p = LaurentPoly({n: 1, 0: -1})
    for d in range(1, n):
        if n % d == 0:
            p = exact_quotient(p, cyclotomic(d))
    return p


def vanishes_at_root_of_unity(p, a, b):
    """Exact test of p(exp(2 pi i a / b)) == 0."""
    if p.is_zero():
        return True
    order = b // gcd(a % b, b) if a % b else 1
    _, r = poly_divmod(LaurentPoly._raw(0, p.coeffs), cyclotomic(order))
    return r.is_zero()


def poly_sqrt(p):
    """Return (lc, F) with p = lc * F**2, F monic ordinary polynomial and
    p an ordinary polynomial with p(0) != 0, or None."""
    if p.is_zero() or p.span() % 2:
        return None
    lc = Fraction(p.leading())
    q = [Fraction(c) / lc for c in p.coeffs]
    n = len(q) - 1
    m = n // 2
    # root coefficients from the top: F = t^m + f_{m-1} t^{m-1} + ...
    f = [Fraction(0)] * (m + 1)
    f[m] = Fraction(1)
    for k in range(m - 1, -1, -1):
        # coefficient of t^{m + k} in F^2 is 2 f_k + sum_{i+j = m+k, i,j > k} f_i f_j
        s = sum(f[i] * f[m + k - i] for i in range(k + 1, m + 1) if k < m + k - i <= m)
        f[k] = (q[m + k] - s) / 2
    F = LaurentPoly._raw(0, [_norm(c) for c in f])
    if F * F != LaurentPoly._raw(0, [_norm(c) for c in q]):
        return None
    return _norm(lc), F


def _rational_sqrt(x):
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = _isqrt_exact(n), _isqrt_exact(d)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


def _isqrt_exact(n):
    r = isqrt(n)
    return r if r * r == n else None


def is_square_up_to_units(p):
    """Return symmetric F with p = +-t^k F^2 and F(1) >= 0, else None."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    P = LaurentPoly._raw(0, p.coeffs)
    found = poly_sqrt(P)
    if found is None:
        return None
    lc, G = found
    s = _rational_sqrt(abs(lc))
    if s is None:
        return None
    F = G * s
    if F.span() % 2:
        return None
    F = F.shift(-(F.span() // 2))
    if F.involute() != F:
        return None
    v = F(1)
    if v < 0 or (v == 0 and F.leading() < 0):
        F = -F
    return F


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

class RatFunc:
    """Element of Q(t) with the involution t -> 1/t.

    Canonical form: ``num`` is a LaurentPoly, ``den`` an ordinary monic
    polynomial with nonzero constant term, gcd(num, den) = 1.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if isinstance(num, RatFunc):
            if den is None:
                self.num, self.den, self._hash = num.num, num.den, num._hash
                return
            q = num / den
            self.num, self.den, self._hash = q.num, q.den, q._hash
            return
        num = _coerce(num)
        if num is NotImplemented:
            raise TypeError("RatFunc numerator must be a LaurentPoly or rational")
        if den is None:
            self.num, self.den, self._hash = num, ONE, None
            return
        if isinstance(den, RatFunc):
            q = RatFunc(num) / den
            self.num, self.den, self._hash = q.num, q.den, q._hash
            return
        den = _coerce(den)
        if den is NotImplemented:
            raise TypeError("RatFunc denominator must be a LaurentPoly or rational")
        self.num, self.den = _canonical(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        r = cls.__new__(cls)
        r.num, r.den, r._hash = num, den, None
        return r

    def is_zero(self):
        return self.num.is_zero()

    def is_laurent(self):
        return self.den.coeffs == (1,) and self.den.low == 0

    def to_laurent(self):
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def __add__(self, other):
        other = _rcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_laurent() and other.is_laurent():
            return RatFunc._raw(self.num + other.num, ONE)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _rcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _rcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_laurent() and other.is_laurent():
            return RatFunc._raw(self.num * other.num, ONE)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _rcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("RatFunc division by zero")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _rcoerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return RatFunc(ONE) / self ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def involute(self):
        return RatFunc(self.num.involute(), self.den.involute())

    def is_symmetric(self):
        return self == self.involute()

    def __call__(self, x):
        return Fraction(self.num(x)) / self.den(x)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.is_laurent() and self.num == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.num) if self.is_laurent() else hash((self.num, self.den))
        return self._hash

    def __str__(self):
        if self.is_laurent():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    __repr__ = lambda self: f"RatFunc({str(self)!r})"


def _rcoerce(x):
    if isinstance(x, RatFunc):
        return x
    p = _coerce(x)
    if p is NotImplemented:
        return NotImplemented
    return RatFunc._raw(p, ONE)


def _canonical(num, den):
    if den.is_zero():
        raise ZeroDivisionError("RatFunc with zero denominator")
    if num.is_zero():
        return ZERO, ONE
    if den.span() == 0:
        c = Fraction(den.coeffs[0])
        return (num / c).shift(-den.low), ONE
    # move the t-power of den into num, so den(0) != 0
    num = num.shift(-den.low)
    den = LaurentPoly._raw(0, den.coeffs)
    g = poly_gcd(LaurentPoly._raw(0, num.coeffs), den)
    if g.span() > 0:
        num = exact_quotient(num, g)
        den = exact_quotient(den, g)
    lc = Fraction(den.leading())
    if lc != 1:
        num = num / lc
        den = den / lc
    if den.span() == 0:
        return num, ONE
    return num, den


def rat(x):
    """Coerce an int, Fraction, LaurentPoly or RatFunc to RatFunc."""
    r = _rcoerce(x)
    if r is NotImplemented:
        raise TypeError(f"cannot coerce {x!r} to RatFunc")
    return r


# ---------------------------------------------------------------------------
# Conway polynomials
# ---------------------------------------------------------------------------

class ConwayPoly:
    """Integer polynomial in z = t^(-1/2) - t^(1/2)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        coeffs = coeffs or {}
        self.coeffs = {int(k): _as_coeff(v) for k, v in coeffs.items() if v != 0}

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return ConwayPoly(out)

    def __neg__(self):
        return ConwayPoly({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def times_z(self, power=1):
        return ConwayPoly({k + power: v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        if isinstance(other, ConwayPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def degree(self):
        return max(self.coeffs) if self.coeffs else -1

    def to_s_poly(self):
        """Back-substitute z = s^(-1) - s, returning a LaurentPoly in s = t^(1/2)."""
        z = LaurentPoly({-1: 1, 1: -1})
        out = ZERO
        for k, v in self.coeffs.items():
            out = out + (z ** k) * v
        return out

    def to_laurent(self):
        """Back-substitute into t; defined only when every power of z is even."""
        if any(k % 2 for k in self.coeffs):
            raise ValueError("odd powers of z have no expression in t")
        s = self.to_s_poly()
        return LaurentPoly({e // 2: c for e, c in s.terms().items()})

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{v}*z^{k}" for k, v in sorted(self.coeffs.items(), reverse=True))

    __repr__ = lambda self: f"ConwayPoly({str(self)!r})"


def conway_from_s(p):
    """Rewrite a LaurentPoly in s as a polynomial in z = s^(-1) - s."""
    out = {}
    rest = p
    while not rest.is_zero():
        k = rest.high
        if k < 0:
            raise NotInImage(f"{p} is not a polynomial in z")
        c = rest[k] * (-1) ** k
        if not isinstance(_norm(Fraction(c)), int):
            raise NotInImage(f"{p} has no integral z-expansion")
        out[k] = _norm(Fraction(c))
        rest = rest - LaurentPoly({-1: 1, 1: -1}) ** k * c
        if rest.high == k and not rest.is_zero():
            raise NotInImage(f"{p} is not a polynomial in z")
    return ConwayPoly(out)


def to_conway(p):
    """Conway polynomial C with C(z) = p(t), z^2 = t^(-1) - 2 + t."""
    if p.involute() != p:
        raise NotSymmetric(f"{p} is not fixed by t -> 1/t")
    doubled = LaurentPoly({2 * e: c for e, c in p.terms().items()})
    return conway_from_s(doubled)


def eval_circle(p, a, b, precision=64):
    """Certified enclosure of p(exp(2 pi i a/b)).

    Returns ``((re_lo, re_hi), (im_lo, im_hi))`` with Fraction endpoints;
    ``precision`` is the number of working bits.
    """
    re, im = eval_laurent_ball(p, a, b, precision)
    return ball_bounds(re, precision), ball_bounds(im, precision)
