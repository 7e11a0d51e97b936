"""Tristram-Levine signatures at rational points of the unit circle.

The signature at omega = exp(2 pi i a/b) is the signature of the complex
hermitian matrix (1 - omega) V + (1 - conj omega) V^t.  Points where the
Alexander polynomial vanishes are refused, never averaged.  Every sign
used in the count is certified with ball arithmetic.
"""
import csv
import io
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

from .errors import NotPrimePower, SingularAtRoot
from .intervals import (bscale, certified_real_sign, certified_signature,
                        circle_point, eval_laurent_ball)
from .laurent import vanishes_at_root_of_unity
from .samples import farey_points
from .seifert import alexander_polynomial as alexander
from .seifert import validate


@dataclass(frozen=True)
class SignatureSample:
    a: int
    b: int
    value: int


def _reduce(a, b):
    if b <= 0:
        raise ValueError("b must be positive")
    a %= b
    g = gcd(a, b)
    return a // g, b // g


def _tl_balls(V, a, b, p):
    """Ball matrix of (1 - w) V + (1 - conj w) V^t."""
    n = len(V)
    c, s = circle_point(a, b, p)
    one = (1 << p, 0)
    one_minus_c = (one[0] - c[0], c[1])
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            sym = V[i][j] + V[j][i]
            skew = V[j][i] - V[i][j]
            re = bscale(one_minus_c, sym)
            im = bscale(s, skew) if i != j else (0, 0)
            out[i][j] = (re, im)
            out[j][i] = (re, (-im[0], im[1]))
    return out


@lru_cache(maxsize=65536)
def _tl_cached(entries, a, b, cap):
    V = [list(row) for row in entries]
    if not V or a == 0:
        return 0
    if vanishes_at_root_of_unity(alexander(V), a, b):
        raise SingularAtRoot(a, b)
    return certified_signature(lambda p: _tl_balls(V, a, b, p), cap)


def tristram_levine(V, a, b, cap=None):
    """SignatureSample for V at omega = exp(2 pi i a/b)."""
    V = validate(V)
    ra, rb = _reduce(a, b)
    return SignatureSample(a, b, _tl_cached(V.entries, ra, rb, cap))


def sigma(V, a, b, cap=None):
    return tristram_levine(V, a, b, cap).value


def s7(V, cap=None):
    """sigma_{1/7} + sigma_{2/7} + sigma_{3/7}."""
    return sum(sigma(V, k, 7, cap) for k in (1, 2, 3))


def signature_function(V, denominator_cap, cap=None):
    """Samples at every reduced a/b with b <= denominator_cap, skipping
    roots of the Alexander polynomial; sorted by angle."""
    V = validate(V)
    delta = alexander(V)
    out = []
    for a, b in farey_points(denominator_cap):
        if vanishes_at_root_of_unity(delta, a, b):
            continue
        out.append(SignatureSample(a, b, _tl_cached(V.entries, a, b, cap)))
    return out


def prime_power_base(n):
    """The prime p with n = p^k, or None."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        p = n
    while n % p == 0:
        n //= p
    return p if n == 1 else None


def murasugi_check(V, a, b, cap=None):
    """sign(Delta(omega)) == (-1)^(sigma_omega / 2) at a prime-power root."""
    if prime_power_base(b) is None:
        raise NotPrimePower(f"{b} is not a prime power")
    V = validate(V)
    delta = alexander(V)
    ra, rb = _reduce(a, b)
    if ra == 0:
        raise NotPrimePower("omega = 1 is excluded")
    if vanishes_at_root_of_unity(delta, ra, rb):
        raise SingularAtRoot(ra, rb)
    # Delta is symmetric, so Delta(omega) is real
    sign = certified_real_sign(lambda p: eval_laurent_ball(delta, ra, rb, p)[0], cap)
    value = _tl_cached(V.entries, ra, rb, cap)
    return sign == (-1) ** (abs(value) // 2)


def to_csv(samples):
    """CSV with columns a, b, angle_numerator, value; angle_numerator is
    a * (L / b) for L the common denominator of the table."""
    L = 1
    for s in samples:
        L = lcm(L, s.b)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["a", "b", "angle_numerator", "value"])
    for s in samples:
        w.writerow([s.a, s.b, s.a * (L // s.b), s.value])
    return buf.getvalue()
