import pytest

from concordia.errors import NotPrimePower, SingularAtRoot
from concordia.seifert import (K_J, TREFOIL_L, TREFOIL_R, UNKNOT,
                               connected_sum, mirror, random_seifert, reverse)
from concordia.signatures import (murasugi_check, prime_power_base, s7, sigma,
                                  signature_function, to_csv, tristram_levine)


def test_examples():
    assert tristram_levine(TREFOIL_R, 1, 2).value == -2
    assert sigma(K_J, 1, 2) == 0
    assert sigma(UNKNOT, 3, 7) == 0
    with pytest.raises(SingularAtRoot):
        sigma(TREFOIL_R, 1, 6)


def test_s7():
    assert s7(TREFOIL_R) == -4
    assert s7(mirror(TREFOIL_R)) == 4
    assert mirror(TREFOIL_R) == TREFOIL_L
    assert s7(connected_sum(TREFOIL_L, TREFOIL_L)) == 8
    assert [sigma(TREFOIL_R, k, 7) for k in (1, 2, 3)] == [0, -2, -2]


def test_signature_function():
    assert all(s.value == 0 for s in signature_function(UNKNOT, 5))
    for s in signature_function(TREFOIL_R, 6):
        angle = s.a / s.b
        assert s.value == (-2 if 1 / 6 < angle < 5 / 6 else 0)
    assert (1, 6) not in [(s.a, s.b) for s in signature_function(TREFOIL_R, 6)]
    assert all(s.value == 0 for s in signature_function(K_J, 12))
    angles = [s.a / s.b for s in signature_function(K_J, 12)]
    assert angles == sorted(angles)


def test_csv_export():
    text = to_csv(signature_function(TREFOIL_R, 4))
    lines = text.splitlines()
    assert lines[0] == "a,b,angle_numerator,value"
    # common denominator 12: 1/4 -> 3, 1/3 -> 4, 1/2 -> 6
    assert "1,4,3,-2" in lines and "1,2,6,-2" in lines


def test_murasugi_examples():
    assert murasugi_check(TREFOIL_R, 1, 2)
    assert murasugi_check(UNKNOT, 1, 5)
    assert murasugi_check(K_J, 1, 3)
    with pytest.raises(NotPrimePower):
        murasugi_check(TREFOIL_R, 1, 6)
    assert prime_power_base(8) == 2 and prime_power_base(12) is None


def test_symmetries(rng):
    points = [(1, 2), (1, 3), (2, 5), (3, 8)]
    for _ in range(30):
        V, W = random_seifert(rng, 2), random_seifert(rng, 4)
        for a, b in points:
            try:
                s, t = sigma(V, a, b), sigma(W, a, b)
            except SingularAtRoot:
                continue
            assert sigma(connected_sum(V, W), a, b) == s + t
            assert sigma(mirror(V), a, b) == -s
            assert sigma(reverse(V), a, b) == s
            assert s % 2 == 0
