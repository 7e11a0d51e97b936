from fractions import Fraction
from math import cos, pi, sin

import pytest

from concordia.errors import NotInImage, NotSymmetric, ParseError
from concordia.laurent import (ConwayPoly, LaurentPoly, RatFunc, cyclotomic,
                               eval_circle, is_square_up_to_units, parse_laurent,
                               squarefree_decomposition, to_conway,
                               vanishes_at_root_of_unity)

from conftest import random_poly

T = LaurentPoly({1: 1})
TREF = LaurentPoly({-1: 1, 0: -1, 1: 1})


def convolve(p, q):
    out = {}
    for e1, c1 in p.terms().items():
        for e2, c2 in q.terms().items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return LaurentPoly(out)


def test_symmetric_poly_is_fixed_by_involution():
    p = LaurentPoly({1: -2, 0: 5, -1: -2})
    assert p.involute() == p
    assert (T + 3).involute() == LaurentPoly({-1: 1, 0: 3})


def test_add_cancels_to_zero():
    z = T + (-T)
    assert z.is_zero() and z.span() == -1 and z.coeffs == ()


def test_product_matches_convolution():
    q = LaurentPoly({-1: 1, 0: 1, 1: 1})
    assert TREF * q == convolve(TREF, q) == LaurentPoly({-2: 1, 0: 1, 2: 1})


def test_ring_laws_on_random_polynomials(rng):
    for _ in range(300):
        p, q, r = (random_poly(rng) for _ in range(3))
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p * q == convolve(p, q)
        assert (p * q).involute() == p.involute() * q.involute()
        assert p.involute().involute() == p


def test_text_round_trip():
    p = LaurentPoly({1: -2, 0: 5, -1: -2})
    assert str(p) == "-2*t^1 + 5*t^0 + -2*t^-1"
    assert parse_laurent(str(p)) == p
    assert str(LaurentPoly({0: 1})) == "1*t^0"
    with pytest.raises(ParseError):
        parse_laurent("2t + 1")


@pytest.mark.parametrize("poly, a, b, expected", [
    (LaurentPoly({1: -2, 0: 5, -1: -2}), 1, 3, 7),
    (LaurentPoly({0: 1}), 2, 5, 1),
    (TREF, 1, 2, -3),
])
def test_eval_circle_encloses_value(poly, a, b, expected):
    (re_lo, re_hi), (im_lo, im_hi) = eval_circle(poly, a, b, 80)
    assert re_lo <= expected <= re_hi
    assert im_lo <= 0 <= im_hi


def test_eval_circle_contains_float_value_and_shrinks(rng):
    for _ in range(40):
        p = random_poly(rng, -4, 4)
        b = rng.randint(1, 12)
        a = rng.randrange(b)
        theta = 2 * pi * a / b
        re = sum(c * cos(e * theta) for e, c in p.terms().items())
        im = sum(c * sin(e * theta) for e, c in p.terms().items())
        widths = []
        for prec in (64, 128):
            (rl, rh), (il, ih) = eval_circle(p, a, b, prec)
            assert rl - Fraction(1, 10**9) <= Fraction(re) <= rh + Fraction(1, 10**9)
            assert il - Fraction(1, 10**9) <= Fraction(im) <= ih + Fraction(1, 10**9)
            widths.append(rh - rl)
        assert widths[1] <= widths[0]


@pytest.mark.parametrize("poly, z_coeffs", [
    (LaurentPoly({0: 1}), {0: 1}),
    (TREF, {2: 1, 0: 1}),
    (LaurentPoly({1: -1, 0: 3, -1: -1}), {2: -1, 0: 1}),
])
def test_to_conway(poly, z_coeffs):
    C = to_conway(poly)
    assert C == ConwayPoly(z_coeffs)
    assert C.to_laurent() == poly


def test_to_conway_rejects_bad_input():
    with pytest.raises(NotSymmetric):
        to_conway(T)
    with pytest.raises(NotInImage):
        to_conway(LaurentPoly({1: Fraction(1, 2), -1: Fraction(1, 2)}))


def test_conway_back_substitution_on_random_symmetric(rng):
    for _ in range(100):
        C = ConwayPoly({2 * k: rng.randint(-5, 5) for k in range(4)})
        assert to_conway(C.to_laurent()) == C


def test_square_detection():
    assert is_square_up_to_units(TREF * TREF) == TREF
    assert is_square_up_to_units(LaurentPoly({0: 1})) == LaurentPoly({0: 1})
    assert is_square_up_to_units(TREF) is None
    # units t^k and sign are absorbed
    assert is_square_up_to_units(-(TREF * TREF * T ** 3)) == TREF


def test_square_detection_brute_force(rng):
    for _ in range(60):
        F = LaurentPoly({k: rng.randint(-3, 3) for k in range(-2, 3)})
        F = F + F.involute()
        if F.is_zero():
            continue
        got = is_square_up_to_units(F * F)
        assert got is not None and got * got == F * F and got(1) >= 0


def test_ratfunc_canonical_form():
    r = RatFunc(TREF * (T - 1), (T - 1) * 2)
    assert r == RatFunc(TREF, 2)
    assert r.den.low == 0 and r.den.leading() > 0
    assert (r * RatFunc(2, TREF)) == RatFunc(1)
    assert r.involute().involute() == r


def test_squarefree_and_roots_of_unity():
    p = (T - 1) ** 3 * (T + 1)
    parts = dict((m, f) for f, m in squarefree_decomposition(p))
    assert parts[3] == T - 1 and parts[1] == T + 1
    assert vanishes_at_root_of_unity(TREF, 1, 6)
    assert not vanishes_at_root_of_unity(TREF, 1, 2)
    assert cyclotomic(6) == LaurentPoly({0: 1, 1: -1, 2: 1})
