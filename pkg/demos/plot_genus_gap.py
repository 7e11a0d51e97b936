"""
Four-genus lower bounds from closed-form Casson-Gordon values
=============================================================

For J with s_7(J) > 6n, every m <= n gives g_4(m L_J) >= m. The
Casson-Gordon values come from a closed formula in s_7(J); the matching
upper bound is geometric and only recorded.
"""

from fractions import Fraction

from concordia.gilmer import genus_gap_certify, growth_bound_check
from concordia.seifert import TREFOIL_L, TREFOIL_R, connected_sum

J = connected_sum(*[TREFOIL_L] * 4)
result = genus_gap_certify(2, J)
print("s_7(J) =", result.s7)
for cert in result.certificates:
    for r in cert.per_k_records:
        print(f"  m={cert.m} k={r.k}: min |CG| {r.cg_min} > {r.bound}? {r.contradiction}")
    print(f"  => g_4({cert.m} L_J) >= {cert.lower_bound}  ({cert.tuples_enumerated} characters)")

# the growth bound at eps = 1/2 separates one trefoil from two
for k in (1, 2):
    rep = growth_bound_check(Fraction(1, 2), connected_sum(*[TREFOIL_R] * k))
    print(f"{k} trefoil(s): |sigma_1/3| = {abs(rep.sigma_third)}, certifies {rep.certifies}")
