import cmath
import math

import pytest

from concordia.covers import (INFINITE, LinkingFormZp, Metabolizer,
                              cover_homology, cover_report, deck_action,
                              enumerate_metabolizers, linking_form_2fold,
                              order_oracle, presentation_matrix, resultant,
                              verify_metabolizer)
from concordia.errors import (DimensionMismatch, NotElementaryAbelian,
                              PreconditionFailed, TooLarge)
from concordia.seifert import (FIGURE_EIGHT, K_J, TREFOIL_R, UNKNOT,
                               alexander_polynomial,
                               random_seifert, random_unimodular, validate)
from concordia import linalg


def numeric_order(V, q):
    """|prod Delta(zeta^j)| in floating point, rounded."""
    d = alexander_polynomial(V)
    total = 1
    for j in range(1, q):
        w = cmath.exp(2j * math.pi * j / q)
        total *= sum(float(c) * w ** (d.low + k) for k, c in enumerate(d.coeffs))
    return round(abs(total))


def test_k_j_three_fold():
    H = cover_homology(K_J, 3, p=7)
    assert H.snf == [7, 7] and H.order == 49 and H.group == [7, 7]
    assert set(H.deck_mod_p.eigenvalues) == {2, 4}
    for lam, vecs in H.deck_mod_p.eigenbases.items():
        M = H.deck_mod_p.matrix
        for v in vecs:
            assert [x % 7 for x in linalg.matvec(M, v)] == [lam * x % 7 for x in v]


def test_known_groups():
    assert cover_homology(TREFOIL_R, 2).group == [3]
    assert cover_homology(TREFOIL_R, 3).group == [2, 2]
    assert cover_homology(FIGURE_EIGHT, 2).order == 5
    assert cover_homology(K_J, 2).group == [3, 3]
    assert cover_homology(UNKNOT, 5).order == 1
    # trefoil 6-fold cover has infinite homology: Delta vanishes at exp(i pi/3)
    assert cover_homology(TREFOIL_R, 6).order == INFINITE
    with pytest.raises(PreconditionFailed):
        cover_homology(K_J, 1)


def test_resultant():
    assert resultant([1, -1], [1, 1]) == -2
    assert resultant([-2, 5, -2], [1, 1]) == -9
    assert resultant([3], [1, 1, 1]) == 9


def test_order_matches_float_oracle(rng):
    for _ in range(40):
        V = random_seifert(rng, 2 * rng.randint(1, 2))
        for q in (2, 3, 4):
            H = cover_homology(V, q)
            expected = numeric_order(V, q)
            if H.order == INFINITE:
                assert expected == 0
            else:
                assert H.order == expected == order_oracle(V, q)


def test_presentation_is_integral(rng):
    V = random_seifert(rng, 4)
    R = presentation_matrix(V, 3)
    assert all(isinstance(x, int) for row in R for x in row)


def test_deck_action_trefoil():
    D = deck_action(TREFOIL_R, 2, 3)
    assert D.matrix == [[2]] and D.eigenvalues == [2]
    with pytest.raises(PreconditionFailed):
        deck_action(TREFOIL_R, 2, 5)
    with pytest.raises(PreconditionFailed):
        deck_action(TREFOIL_R, 2, 4)


def test_deck_action_has_order_q(rng):
    for _ in range(20):
        V = random_seifert(rng, 4)
        H = cover_homology(V, 3)
        if H.order in (INFINITE, 1):
            continue
        p = next((f for f in range(3, H.order + 1)
                  if H.order % f == 0 and all(f % k for k in range(2, f))), None)
        if p is None:
            continue
        try:
            D = deck_action(V, 3, p)
        except Exception as exc:  # V singular mod p
            assert type(exc).__name__ == "NotInvertibleModP"
            continue
        k = len(D.matrix)
        Mq = linalg.identity(k)
        for _ in range(3):
            Mq = linalg.matmul_mod(Mq, D.matrix, p)
        assert Mq == linalg.identity(k)


def test_linking_forms():
    f = linking_form_2fold(K_J, 3)
    assert f.dim == 2
    assert f.discriminant == -1
    assert len(enumerate_metabolizers(f)) == 2
    assert linking_form_2fold(TREFOIL_R, 3).dim == 1


def test_stevedore_is_not_elementary_abelian():
    # same Alexander polynomial as K_J, but H_1(M_2) = Z_9
    V = validate([[2, 1], [0, -1]])
    assert alexander_polynomial(V) == alexander_polynomial(K_J)
    assert cover_homology(V, 2).group == [9]
    with pytest.raises(NotElementaryAbelian):
        linking_form_2fold(V, 3)


def test_linking_form_congruence_invariant(rng):
    for _ in range(25):
        V = random_seifert(rng, 4)
        P = random_unimodular(rng, 4)
        W = validate(linalg.matmul(linalg.matmul(linalg.transpose(P), V.matrix()), P))
        for p in (3, 5):
            try:
                f = linking_form_2fold(V, p)
            except (NotElementaryAbelian, PreconditionFailed):
                continue
            g = linking_form_2fold(W, p)
            assert (f.dim, f.discriminant) == (g.dim, g.discriminant)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_metabolizer_counts(p):
    hyperbolic = LinkingFormZp(p, 2, [[0, 1], [1, 0]])
    split = LinkingFormZp(p, 2, [[1, 0], [0, p - 1]])
    assert len(enumerate_metabolizers(hyperbolic)) == 2
    assert len(enumerate_metabolizers(split)) == 2
    # a non-split plane has no isotropic line when -1 is not a square mod p
    if p % 4 == 3:
        assert enumerate_metabolizers(LinkingFormZp(p, 2, [[1, 0], [0, 1]])) == []


def test_split_four_dimensional_count():
    p = 3
    G = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    ms = enumerate_metabolizers(LinkingFormZp(p, 4, G))
    assert len(ms) == 2 * (p + 1)
    f = LinkingFormZp(p, 4, G)
    assert all(verify_metabolizer(f, m) for m in ms)
    assert not verify_metabolizer(f, Metabolizer(((1, 0, 1, 0), (0, 1, 0, 0))))


def test_equivariant_filter():
    f = LinkingFormZp(3, 2, [[0, 1], [1, 0]])
    swap = [[0, 1], [1, 0]]
    ms = enumerate_metabolizers(f, deck=swap)
    assert all(m.equivariant is False for m in ms)
    assert enumerate_metabolizers(f, deck=swap, equivariant_only=True) == []
    diag = [[1, 0], [0, 2]]
    assert len(enumerate_metabolizers(f, deck=diag, equivariant_only=True)) == 2


def test_guards():
    with pytest.raises(DimensionMismatch):
        enumerate_metabolizers(LinkingFormZp(3, 1, [[1]]))
    with pytest.raises(TooLarge):
        enumerate_metabolizers(LinkingFormZp(101, 4, [[int(i == j) for j in range(4)] for i in range(4)]))


def test_report():
    rep = cover_report(K_J, 2, 3)
    assert rep == {"q": 2, "p": 3, "snf": [3, 3], "order": 9, "eigenvalues": [2],
                   "metabolizer_count": 2}
    assert cover_report(K_J, 3)["eigenvalues"] is None
