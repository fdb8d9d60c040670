"""Per-ideal regularity and stability predicates.

Each predicate takes a t-ideal I and returns a :class:`Verdict` whose trace
lists the intermediate ideals in normal form, so a verdict can be re-checked
by hand or through the expression calculator.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .core import colon, endo_ring, iso_witness, mul, t_closure, v_closure_rel
from .errors import NotTIdeal

INCONCLUSIVE = None


@dataclass
class Verdict:
    predicate: str
    ideal: str
    # True / False, or None for inconclusive
    result: Optional[bool]
    witness: Any = None
    trace: dict[str, str] = field(default_factory=dict)
    closed_input: bool = False

    def __bool__(self):
        return self.result is True

    @property
    def inconclusive(self) -> bool:
        return self.result is None

    def to_dict(self) -> dict:
        d = {
            "predicate": self.predicate,
            "ideal": self.ideal,
            "result": "inconclusive" if self.result is None else self.result,
            "witness": None if self.witness is None else str(self.witness),
            "trace": self.trace,
        }
        if self.closed_input:
            d["auto_closed"] = True
        return d


def _require_t_ideal(I):
    if t_closure(I) != I:
        raise NotTIdeal(f"{I} is not a t-ideal (its t-closure is {t_closure(I)})")


def _fmt(I, c):
    return None if c is None else I.domain.format_scalar(c)


def clifford_at(I) -> Verdict:
    """I = (I^2 (I : I^2))_t."""
    _require_t_ideal(I)
    I2 = mul(I, I)
    Q = colon(I, I2)
    J = t_closure(mul(I2, Q))
    return Verdict("clifford", str(I), J == I, trace={"I^2": str(I2), "(I:I^2)": str(Q), "(I^2(I:I^2))_t": str(J)})


def boole_at(I) -> Verdict:
    """(I^2)_t = cI for some nonzero c; the witness is that c."""
    _require_t_ideal(I)
    J = t_closure(mul(I, I))
    c = iso_witness(I, J)
    return Verdict("boole", str(I), c is not None, _fmt(I, c), trace={"(I^2)_t": str(J)})


def stable_at(I) -> Verdict:
    """I is invertible in its endomorphism ring T = (I : I)."""
    _require_t_ideal(I)
    T = endo_ring(I).ideal
    TI = colon(T, I)
    P = mul(I, TI)
    return Verdict("stable", str(I), P == T, trace={"(I:I)": str(T), "(T:I)": str(TI), "I(T:I)": str(P)})


def strongly_stable_at(I) -> Verdict:
    """I = cT with T = (I : I)."""
    _require_t_ideal(I)
    T = endo_ring(I).ideal
    c = iso_witness(T, I)
    return Verdict("strongly_stable", str(I), c is not None, _fmt(I, c), trace={"(I:I)": str(T)})


def t_invertible_in_endo(I) -> Verdict:
    """(I (T : I))_{v_T} = T, closures taken over T = (I : I)."""
    _require_t_ideal(I)
    T = endo_ring(I)
    TI = colon(T.ideal, I)
    P = mul(I, TI)
    V = v_closure_rel(T, P)
    return Verdict(
        "t_invertible",
        str(I),
        V == T.ideal,
        trace={"(I:I)": str(T), "(T:I)": str(TI), "I(T:I)": str(P), "(I(T:I))_vT": str(V)},
    )


def l_stable_at(I, n_max: int = 8) -> Verdict:
    """The union of the increasing chain (I^n : I^n), n >= 1, equals (I : I).

    Equality of two consecutive terms does not end the chain, so the verdict
    needs a certificate:

    * growth: some (I^n : I^n) differs from (I : I), so the union is larger;
    * homothety: I^(n+1) = x I^n, after which every term equals (I^n : I^n);
    * ceiling: (I : I) is already the complete integral closure, which bounds every term;
    * invertibility: I(T : I) = T for T = (I : I) pins every term to T.

    With no certificate up to ``n_max`` the verdict is inconclusive.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    _require_t_ideal(I)
    ceiling = I.domain.integral_closure()
    E1 = colon(I, I)
    trace = {"(I^1:I^1)": str(E1)}

    def verdict(result, why):
        trace["certificate"] = why
        return Verdict("l_stable", str(I), result, trace=trace)

    if E1 == ceiling:
        return verdict(True, "(I:I) is the complete integral closure")
    if mul(I, colon(E1, I)) == E1:
        return verdict(True, "I is invertible in (I:I)")
    prev = I
    for n in range(2, n_max + 1):
        In = mul(prev, I)
        En = colon(In, In)
        trace[f"(I^{n}:I^{n})"] = str(En)
        if En != E1:
            return verdict(False, f"(I^{n}:I^{n}) strictly contains (I:I)")
        x = iso_witness(prev, In)
        if x is not None:
            return verdict(True, f"I^{n} = x I^{n - 1} with x = {I.domain.format_scalar(x)}")
        prev = In
    return verdict(INCONCLUSIVE, f"no certificate up to n = {n_max}")


def t_idempotent_at(I) -> Verdict:
    _require_t_ideal(I)
    J = t_closure(mul(I, I))
    return Verdict("t_idempotent", str(I), J == I, trace={"(I^2)_t": str(J)})


PREDICATES = {
    "clifford": clifford_at,
    "boole": boole_at,
    "stable": stable_at,
    "strongly_stable": strongly_stable_at,
    "t_invertible": t_invertible_in_endo,
    "l_stable": l_stable_at,
    "t_idempotent": t_idempotent_at,
}


def check(name: str, I, auto_close: bool = False) -> Verdict:
    """Run a predicate by name; with ``auto_close`` the input is t-closed first and flagged."""
    fn = PREDICATES[name.replace("-", "_")]
    closed = False
    if auto_close:
        J = t_closure(I)
        closed = J != I
        I = J
    v = fn(I)
    v.closed_input = closed
    return v
