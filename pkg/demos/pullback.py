"""The pullback R = k + (x, y)K[[x, y]] with k a proper subfield of K.

R has t-dimension two and its maximal ideal M is divisorial and
t-idempotent.  M is not stable, yet every sampled t-ideal passes the Boole
test with an explicit monomial witness.
"""
import random

from tclass import Pullback, colon, t_closure, v_closure
from tclass.pullback import prop23_transfer_check
from tclass.regularity import boole_at, stable_at

P = Pullback()
R, M, T = P.one(), P.M(), P.T()
print("v(M)   =", v_closure(M))
print("t(M^2) =", t_closure(M * M))
print("(R:M)  =", colon(R, M))
print("(R:T)  =", colon(R, T))
print("t-prime chain:", " < ".join(str(Q) for Q in P.t_dim_witness()))
print("M stable:", stable_at(M).result, " M boole witness:", boole_at(M).witness)

print()
rng = random.Random(4)
for _ in range(6):
    I = t_closure(P.random_ideal(rng))
    r = prop23_transfer_check(I)
    print(f"{str(I):24} {r['branch']:13} witness over R: {r['witness_R']}")

print()
D = Pullback("dvr")
S = D.enumerate_classes_dvr()
print("over a DVR base:", len(S), "classes, table", S.table, " Boole", S.is_boolean())
