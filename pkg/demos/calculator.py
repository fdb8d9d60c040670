"""The expression calculator, as used by `tclass eval`."""
from tclass import NumericalSemigroup, Pullback, QuadOrder
from tclass.expr import calc, parse

print(parse("(M : M*M)"))
print()

sessions = [
    (NumericalSemigroup((2, 3)), ["t(M*M)", "(M : M*M)", "inv(M)", "v(<t^3>*R)"]),
    (QuadOrder(-20), ["(2, 1+w)*(2, 1+w)", "((2, 1+w) : (2, 1+w)*(2, 1+w))", "<1+w>"]),
    (Pullback(), ["(R : M)", "t(M*M)", "endo(B([x]))", "(R : B([x]))"]),
]
for D, exprs in sessions:
    print(D)
    for e in exprs:
        print(f"  {e} = {calc(e, D)}")
