"""
One crossing change in the Witt group
=====================================

Changing one crossing turns the unknot into the right-handed trefoil. The
Witt classes of the two hermitianized forms differ by <Delta+ Delta-> + <-1>.
"""

from concordia.concordance import crossing_difference, skein_verify
from concordia.seifert import alexander_polynomial, conway_polynomial, crossing_triple
from concordia.signatures import sigma

# attach one band to a disk; b = -1 gives the trefoil on the plus side
T = crossing_triple([], [], -1)
print("Delta+ =", alexander_polynomial(T.plus))
print("Delta- =", alexander_polynomial(T.minus))

# Conway skein relation: C(L+) - C(L-) = z C(L0)
print("C+ =", conway_polynomial(T.plus), "  skein holds:", skein_verify(T))

cert = crossing_difference(T, samples=8)
print("c(t) =", cert.c_of_t)
print("claimed class:", [str(x) for x in cert.claimed_class.diag()])
for name, ok in cert.checks.items():
    print(f"  {name:20s} {ok}")

# the signature jump at omega = -1
print("sigma jump at -1:", sigma(T.plus, 1, 2) - sigma(T.minus, 1, 2))
