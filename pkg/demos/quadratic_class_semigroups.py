"""t-class semigroups of three imaginary quadratic orders.

In an order every nonzero ideal is divisorial, so the t-class semigroup is the
full class semigroup: invertible classes plus one group per overorder.
"""
from tclass import QuadOrder
from tclass.regularity import boole_at, strongly_stable_at

for d_K, f in [(-20, 1), (-3, 2), (-4, 3)]:
    D = QuadOrder(d_K, f)
    S = D.enumerate_class_semigroup()
    print(f"discriminant {d_K}, conductor {f}: {len(S)} classes")
    for k, lab in enumerate(S.labels):
        print(f"  [{k}] {lab}   multiplier ring conductor {S.tags[k]}")
    for row in S.table:
        print("   ", *row)
    print("  idempotents", S.idempotents, " Clifford", S.is_clifford(), " Boole", S.is_boolean())
    print()

# the prime above 2 in Z[sqrt -5] is invertible but not principal
D = QuadOrder(-20)
P2 = D.parse_ideal("(2, 1+w)")
print("P2 * P2 =", P2 * P2)
print("boole at P2:", boole_at(P2).result, " strongly stable:", strongly_stable_at(P2).result)
