"""
Paired crossing changes on an amphicheiral knot
===============================================

A symmetric pair of crossing changes multiplies the Alexander polynomial
by a square, and the Witt class does not move.
"""

from concordia.amphicheiral import hk_factorize, long_certificate, paired_crossing_walk
from concordia.seifert import generator_family

d = generator_family(1, 0)
hk = hk_factorize(d)
print("c(t) =", hk.c_of_t)
print("Delta(V^-1) =", hk.delta_plus_minus, " = F^2 with F =", hk.F)
print("Delta(V^0)  =", hk.delta_minus_plus)
print("identities:", hk.flags)

cert = long_certificate(d, samples=10)
for name, ok in cert.checks.items():
    print(f"  {name:24s} {ok}")

# this single step already unknots algebraically
print("walk ends at Delta = 1:", paired_crossing_walk([d], samples=5))
