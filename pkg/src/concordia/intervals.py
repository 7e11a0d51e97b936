"""Dyadic ball arithmetic for certified signs on the unit circle.

A real ball at precision ``p`` is a pair of ints ``(m, r)`` standing for
the closed interval ``[(m - r) / 2**p, (m + r) / 2**p]``.  Every operation
rounds outward, so the true value always lies inside the ball.  A complex
ball is a pair of real balls.

Nothing here touches floating point.
"""
import os
from fractions import Fraction
from functools import lru_cache

from .errors import PrecisionExhausted

DEFAULT_CAP = 4096
START_PRECISION = 64
_GUARD = 24


def precision_cap():
    """Working-bit ceiling; ``CONCORDIA_PRECISION_CAP`` overrides it."""
    env = os.environ.get("CONCORDIA_PRECISION_CAP")
    return int(env) if env else DEFAULT_CAP


class Uncertified(Exception):
    """Raised inside a computation when the current precision is too low."""


# -- real balls ---------------------------------------------------------------

def ball(x, p):
    """Ball around an int or Fraction."""
    if isinstance(x, int):
        return (x << p, 0)
    x = Fraction(x)
    q, rem = divmod(x.numerator << p, x.denominator)
    return (q, 0) if rem == 0 else (q, 1)


def badd(x, y):
    return (x[0] + y[0], x[1] + y[1])


def bsub(x, y):
    return (x[0] - y[0], x[1] + y[1])


def bneg(x):
    return (-x[0], x[1])


def bmul(x, y, p):
    m1, r1 = x
    m2, r2 = y
    if r1 == 0 and r2 == 0:
        prod = m1 * m2
        m = prod >> p
        return (m, 0) if (m << p) == prod else (m, 1)
    m = (m1 * m2) >> p
    r = ((abs(m1) * r2 + abs(m2) * r1 + r1 * r2) >> p) + 2
    return (m, r)


def bscale(x, k):
    """Multiply by an exact int."""
    return (x[0] * k, x[1] * abs(k))


def brecip(x, p):
    m, r = x
    if abs(m) <= r:
        raise Uncertified("reciprocal of a ball containing zero")
    one = 1 << (2 * p)
    am = abs(m)
    mid = one // am
    rad = -((-one * r) // (am * (am - r))) + 1
    return (mid if m > 0 else -mid, rad)


def sign(x):
    """+1, -1, or 0 when the ball still contains zero."""
    m, r = x
    if m - r > 0:
        return 1
    if m + r < 0:
        return -1
    return 0


def ball_bounds(x, p):
    m, r = x
    return (Fraction(m - r, 1 << p), Fraction(m + r, 1 << p))


# -- complex balls ------------------------------------------------------------

def cmul(x, y, p):
    a, b = x
    c, d = y
    return (bsub(bmul(a, c, p), bmul(b, d, p)), badd(bmul(a, d, p), bmul(b, c, p)))


def cadd(x, y):
    return (badd(x[0], y[0]), badd(x[1], y[1]))


def csub(x, y):
    return (bsub(x[0], y[0]), bsub(x[1], y[1]))


def cconj(x):
    return (x[0], bneg(x[1]))


def cscale_real(x, s, p):
    return (bmul(x[0], s, p), bmul(x[1], s, p))


def cabs2(x, p):
    return badd(bmul(x[0], x[0], p), bmul(x[1], x[1], p))


def cdiv(x, y, p):
    inv = brecip(cabs2(y, p), p)
    return cscale_real(cmul(x, cconj(y), p), inv, p)


def cnonzero(x):
    return sign(x[0]) != 0 or sign(x[1]) != 0


# -- pi, cos, sin -------------------------------------------------------------

def _atan_inv(x, w):
    """atan(1/x) * 2**w, with an error bound in ulps."""
    power = (1 << w) // x
    total = power
    x2 = x * x
    k = 1
    n = 1
    while power:
        power //= x2
        term = power // (2 * k + 1)
        total += -term if k % 2 else term
        k += 1
        n += 1
    return total, 2 * n + 2


@lru_cache(maxsize=None)
def _pi_fixed(w):
    a, ea = _atan_inv(5, w)
    b, eb = _atan_inv(239, w)
    return 16 * a - 4 * b, 16 * ea + 4 * eb


def _taylor(theta, w, start):
    """sum_k (-1)^k theta^(2k+start) / (2k+start)! in fixed point."""
    one = 1 << w
    term = one if start == 0 else theta
    total = term
    n = start
    steps = 1
    while term:
        term = (term * theta >> w) * theta >> w
        term //= (n + 1) * (n + 2)
        n += 2
        total += -term if (n - start) % 4 == 2 else term
        steps += 1
    # per-term floor error <= 3 ulps, damped by theta^2 < 1; plus the tail
    return total, 8 * steps + 8


@lru_cache(maxsize=4096)
def circle_point(j, b, p):
    """Balls for (cos, sin)(2 pi j / b) at precision p."""
    f = Fraction(j % b, b)
    w = p + _GUARD
    cs, sn = 1, 1
    swap = False
    if f > Fraction(1, 2):
        f = 1 - f
        sn = -1
    if f > Fraction(1, 4):
        f = Fraction(1, 2) - f
        cs = -cs
    if f > Fraction(1, 8):
        f = Fraction(1, 4) - f
        swap = True
    pi_m, pi_e = _pi_fixed(w)
    theta = (2 * pi_m * f.numerator) // f.denominator
    theta_err = 2 * pi_e * f.numerator // f.denominator + 2
    c, ec = _taylor(theta, w, 0)
    s, es = _taylor(theta, w, 1)
    if swap:
        c, s, ec, es = s, c, es, ec
    err_c = ec + 2 * theta_err
    err_s = es + 2 * theta_err
    cos_ball = ((cs * c) >> _GUARD, (err_c >> _GUARD) + 2)
    sin_ball = ((sn * s) >> _GUARD, (err_s >> _GUARD) + 2)
    if f == 0:
        # exact values on the axes
        if not swap:
            cos_ball, sin_ball = (cs << p, 0), (0, 0)
        else:
            cos_ball, sin_ball = (0, 0), (sn << p, 0)
    return cos_ball, sin_ball


def eval_laurent_ball(poly, a, b, p):
    """Complex ball containing poly(exp(2 pi i a / b))."""
    re = (0, 0)
    im = (0, 0)
    for i, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        e = poly.low + i
        cb, sb = circle_point((a * e) % b, b, p)
        if isinstance(c, int):
            re = badd(re, bscale(cb, c))
            im = badd(im, bscale(sb, c))
        else:
            cc = ball(c, p)
            re = badd(re, bmul(cb, cc, p))
            im = badd(im, bmul(sb, cc, p))
    return re, im


def eval_ratfunc_ball(f, a, b, p):
    num = eval_laurent_ball(f.num, a, b, p)
    if f.is_laurent():
        return num
    den = eval_laurent_ball(f.den, a, b, p)
    return cdiv(num, den, p)


# -- certified signature of a hermitian ball matrix ---------------------------

def _ldl_signature(H, p):
    """Signature by symmetric elimination.  Every pivot sign is certified;
    raises Uncertified when a pivot cannot be separated from zero."""
    H = [list(row) for row in H]
    n = len(H)
    pos = neg = 0
    while n:
        k = None
        for i in range(n):
            if sign(H[i][i][0]):
                k = i
                break
        if k is None:
            k = _make_pivot(H, n, p)
        if k != 0:
            H[0], H[k] = H[k], H[0]
            for row in H:
                row[0], row[k] = row[k], row[0]
        d = H[0][0][0]
        s = sign(d)
        if s > 0:
            pos += 1
        else:
            neg += 1
        inv = brecip(d, p)
        col = [cscale_real(H[i][0], inv, p) for i in range(1, n)]
        new = []
        for i in range(1, n):
            li = col[i - 1]
            row = []
            for j in range(1, n):
                # H_ij - H_i0 H_00^-1 H_0j
                row.append(csub(H[i][j], cmul(li, H[0][j], p)))
            # the diagonal of a hermitian matrix is real
            row[i - 1] = (row[i - 1][0], (0, 0))
            new.append(row)
        H = new
        n -= 1
    return pos - neg


def _make_pivot(H, n, p):
    """All diagonal balls straddle zero: combine e_i with mu * e_j so the new
    diagonal entry is certified nonzero.  Returns the index i."""
    for i in range(n):
        for j in range(i + 1, n):
            h = H[i][j]
            if not cnonzero(h):
                continue
            one = ((1 << p, 0), (0, 0))
            for mu in (one, cconj(h), ((0, 0), (1 << p, 0))):
                # diag' = h_ii + conj(mu) h_ji + mu h_ij + |mu|^2 h_jj
                t1 = cmul(cconj(mu), H[j][i], p)
                t2 = cmul(mu, h, p)
                t3 = cscale_real(H[j][j], cabs2(mu, p), p)
                d = cadd(cadd(H[i][i], t1), cadd(t2, t3))
                if sign(d[0]):
                    _apply_combination(H, n, i, j, mu, p)
                    H[i][i] = ((d[0]), (0, 0))
                    return i
    raise Uncertified("no certified pivot")


def _apply_combination(H, n, i, j, mu, p):
    mub = cconj(mu)
    # row i += conj(mu) * row j ; column i += mu * column j
    for k in range(n):
        H[i][k] = cadd(H[i][k], cmul(mub, H[j][k], p))
    for k in range(n):
        H[k][i] = cadd(H[k][i], cmul(mu, H[k][j], p))


def certified_signature(build, cap=None):
    """Signature of the hermitian matrix produced by ``build(p)``.

    ``build`` returns a square list of complex balls at precision ``p``.
    The caller must already know the matrix is nonsingular; precision is
    doubled until every pivot sign is certified.
    """
    cap = precision_cap() if cap is None else cap
    p = START_PRECISION
    while True:
        try:
            return _ldl_signature(build(p), p)
        except Uncertified:
            p *= 2
            if p > cap:
                raise PrecisionExhausted(f"signature not certified within {cap} bits")


def certified_real_sign(build, cap=None):
    """Sign of a nonzero real quantity whose ball at precision p is build(p)."""
    cap = precision_cap() if cap is None else cap
    p = START_PRECISION
    while True:
        s = sign(build(p))
        if s:
            return s
        p *= 2
        if p > cap:
            raise PrecisionExhausted(f"sign not certified within {cap} bits")
