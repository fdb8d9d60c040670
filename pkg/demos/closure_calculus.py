"""Divisorial closure on a numerical semigroup ring.

k[[t^2, t^3]] is the simplest non-normal one-dimensional local domain.  Its
ideals are value sets, and every closure below is a finite computation.
"""
from tclass import NumericalSemigroup, colon, inverse, t_closure, v_closure
from tclass.regularity import clifford_at, l_stable_at

S = NumericalSemigroup((2, 3))
R, M = S.one(), S.maximal()
print("R      =", R)
print("M      =", M)
print("M^2    =", M * M)

# M is divisorial, so is its square
print("(R:M)  =", inverse(M))
print("v(M)   =", v_closure(M))
print("t(M^2) =", t_closure(M * M))

# the endomorphism ring of M is the normalization k[[t]]
print("(M:M)  =", colon(M, M))

I = S.parse_ideal("{3,...}")
print()
print("I =", I, " v(I) =", v_closure(I))
v = clifford_at(I)
print("clifford at I:", v.result)
for k, val in v.trace.items():
    print("   ", k, "=", val)
print("L-stable at I:", l_stable_at(I).result, "/", l_stable_at(I).trace["certificate"])
