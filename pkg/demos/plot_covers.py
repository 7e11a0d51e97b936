"""
Branched covers of K_J
======================

The matrix K_J = [[0, 2], [1, 0]] has the Alexander polynomial of the
stevedore knot. Its 3-fold cover splits into two eigenspaces of the deck
transformation mod 7.
"""

from concordia import covers
from concordia.seifert import K_J, alexander_polynomial

print("Delta =", alexander_polynomial(K_J))

# the 3-fold cover: invariant factors, order and the deck action mod 7
H = covers.cover_homology(K_J, 3, p=7)
print("H_1(M_3) =", " + ".join(f"Z_{d}" for d in H.group))
print("deck eigenvalues mod 7:", H.deck_mod_p.eigenvalues)

# the order agrees with the resultant of Delta and 1 + t + t^2
print("resultant order:", covers.order_oracle(K_J, 3))

# the 2-fold cover carries a linking form on Z_3 + Z_3
form = covers.linking_form_2fold(K_J, 3)
print("linking form gram matrix mod 3:", form.gram)
for m in covers.enumerate_metabolizers(form):
    print("  metabolizer spanned by", m.basis)
