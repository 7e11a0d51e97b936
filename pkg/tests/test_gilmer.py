from fractions import Fraction

import pytest

from concordia.errors import BadFamily, PreconditionFailed, TooLarge
from concordia.gilmer import (ASSERTED_UPPER_BOUND_SOURCE, CGFormulaContext,
                              cg_value, epsilon, genus_gap_certify,
                              gilmer_dimension_bound, growth_bound_check)
from concordia.seifert import TREFOIL_L, TREFOIL_R, connected_sum

TWO = connected_sum(TREFOIL_L, TREFOIL_L)
FOUR = connected_sum(TWO, TWO)


def test_epsilon():
    assert [epsilon(x) for x in (0, 7, 1, 6, -3)] == [0, 0, 1, 1, 1]


def test_cg_values():
    ctx = CGFormulaContext.make(TWO, "L_J")
    assert ctx.s7_value == 8
    assert cg_value(ctx, (1, 0)) == 8
    assert cg_value(ctx, (3, 5)) == 16
    assert cg_value(ctx, (3, 5), eigenclass=4) == -16
    assert cg_value(CGFormulaContext.make(TWO, "K_J"), (2,)) == 8
    with pytest.raises(BadFamily):
        cg_value(ctx, (1,))
    with pytest.raises(BadFamily):
        cg_value(ctx, (1, 0), eigenclass=3)
    with pytest.raises(BadFamily):
        cg_value(CGFormulaContext.make(TWO, "T_J"), (1, 0))
    with pytest.raises(BadFamily):
        CGFormulaContext.make(TWO, "Q")


def test_dimension_bound():
    assert gilmer_dimension_bound(3, 0, 4) == 2
    assert gilmer_dimension_bound(3, 1, 8) == 2
    assert gilmer_dimension_bound(3, 5, 4) == 0
    with pytest.raises(PreconditionFailed):
        gilmer_dimension_bound(1, 0, 4)


def test_genus_gap_n1():
    res = genus_gap_certify(1, TWO)
    (cert,) = res.certificates
    (rec,) = cert.per_k_records
    assert (rec.k, rec.cg_min, rec.bound, rec.contradiction) == (0, 8, 0, True)
    assert cert.lower_bound == 1
    data = cert.to_json()
    assert data["asserted_upper_bound"] == {"value": 1, "source": ASSERTED_UPPER_BOUND_SOURCE}
    assert "not recomputed" in data["asserted_upper_bound"]["source"]


def test_genus_gap_n2():
    res = genus_gap_certify(2, FOUR)
    assert res.s7 == 16
    assert [c.m for c in res.certificates] == [1, 2]
    assert [c.lower_bound for c in res.certificates] == [1, 2]
    assert res.certificates[-1].tuples_enumerated == 7 ** 4 - 1
    assert all(r.cg_min == 16 for c in res.certificates for r in c.per_k_records)


def test_genus_gap_preconditions():
    with pytest.raises(PreconditionFailed):
        genus_gap_certify(2, TWO)
    with pytest.raises(PreconditionFailed):
        genus_gap_certify(1, TREFOIL_R)
    with pytest.raises(TooLarge):
        genus_gap_certify(4, connected_sum(FOUR, FOUR, FOUR))


def test_growth_bound_boundary():
    one = growth_bound_check(Fraction(1, 2), TREFOIL_R)
    two = growth_bound_check(Fraction(1, 2), connected_sum(TREFOIL_R, TREFOIL_R))
    assert (abs(one.sigma_third), one.bound, one.certifies) == (2, 2, False)
    assert (abs(two.sigma_third), two.certifies) == (4, True)
    assert two.chain[-1]["holds"] is False
    assert growth_bound_check("1/3", TREFOIL_R).certifies is False
    assert growth_bound_check("2/3", TREFOIL_R).certifies is True
    with pytest.raises(PreconditionFailed):
        growth_bound_check(1, TREFOIL_R)
