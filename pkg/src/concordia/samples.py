"""Rational sample points on the unit circle."""
from math import gcd

from .laurent import vanishes_at_root_of_unity


def farey_points(cap, upper_half=False):
    """Reduced fractions a/b with 0 < a < b <= cap, sorted by angle.

    With ``upper_half`` only angles in (0, 1/2] are kept; the signature
    at the conjugate point is the same.
    """
    pts = {(a // gcd(a, b), b // gcd(a, b)) for b in range(2, cap + 1) for a in range(1, b)}
    if upper_half:
        pts = {(a, b) for a, b in pts if 2 * a <= b}
    return sorted(pts, key=lambda ab: ab[0] / ab[1])


def regular_samples(count, avoid=(), upper_half=True):
    """The first ``count`` circle points, by increasing denominator, at
    which none of the polynomials in ``avoid`` vanishes."""
    out = []
    b = 2
    while len(out) < count:
        for a in range(1, b):
            if gcd(a, b) != 1 or (upper_half and 2 * a > b):
                continue
            if any(vanishes_at_root_of_unity(p, a, b) for p in avoid):
                continue
            out.append((a, b))
            if len(out) == count:
                break
        b += 1
    return out
