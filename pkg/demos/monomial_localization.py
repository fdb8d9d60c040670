"""Localizing monomial ideals of k[[x, y]] at one variable.

Inverting x sends a staircase to the ideal generated by its lowest power of y.
Divisorial closure and multiplier rings both commute with that step.
"""
import random

from tclass import Monomial2, colon, v_closure

D = Monomial2()
I = D.parse_ideal("[x^3 y, x^2 y^2, x y^4]")
print("I       =", I)
print("v(I)    =", v_closure(I))
print("(I:I)   =", colon(I, I))
for var in ("x", "y"):
    L = D.localize(var, I)
    other = "y" if var == "x" else "x"
    print(f"invert {other}: I_S = {L}, v(I_S) = {L.v_closure()}, v(I)_S = {D.localize(var, v_closure(I))}")

rng = random.Random(0)
bad = 0
for _ in range(500):
    J = D.random_ideal(rng)
    for var in ("x", "y"):
        L = D.localize(var, J)
        bad += L.v_closure() != D.localize(var, v_closure(J))
        bad += D.localize(var, colon(J, J)) != L.colon(L)
print("mismatches on 500 random staircases:", bad)
