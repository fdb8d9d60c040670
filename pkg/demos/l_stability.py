"""Why two equal multiplier rings do not settle L-stability.

In k[[t^4, t^6, t^9]] the ideal I with values {11, 12, 15, ...} has
(I:I) = (I^2:I^2), yet (I^3:I^3) is strictly bigger.  The decision procedure
therefore relies on certificates rather than on the first repetition.
"""
from tclass import NumericalSemigroup, colon, power
from tclass.regularity import l_stable_at

S = NumericalSemigroup((4, 6, 9))
I = S.parse_ideal("{11,12,15,...}")
for n in range(1, 5):
    In = power(I, n)
    print(f"I^{n} = {In}   (I^{n}:I^{n}) = {colon(In, In)}")

v = l_stable_at(I)
print()
print("L-stable:", v.result)
print("certificate:", v.trace["certificate"])

# the other certificates on <3, 5>
T = NumericalSemigroup((3, 5))
for text in ["{10,...}", "{3,6,8,9,11,...}", "{7,9,10,12,...}"]:
    v = l_stable_at(T.parse_ideal(text))
    print(f"{text:20} {str(v.result):6} {v.trace['certificate']}")
