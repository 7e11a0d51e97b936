"""
Tristram-Levine signature profiles
==================================

Signatures are evaluated exactly at roots of unity. The right-handed
trefoil jumps at exp(2 pi i / 6); K_J is flat.
"""

from concordia.seifert import K_J, TREFOIL_L, TREFOIL_R, connected_sum
from concordia.signatures import s7, signature_function, to_csv

# every reduced a/b with b <= 8, skipping roots of Delta
print(to_csv(signature_function(TREFOIL_R, 8)))

print("K_J profile:", {(s.a, s.b): s.value for s in signature_function(K_J, 6)})

# s_7 = sigma_1/7 + sigma_2/7 + sigma_3/7 grows linearly under connected sum
J = TREFOIL_L
for k in range(1, 4):
    print(f"s_7 of {k} left trefoils:", s7(J))
    J = connected_sum(J, TREFOIL_L)
