"""Pullbacks R = k + M of a local base (T, M) over a proper subfield k of K = T/M.

Two bases are supported: the discrete valuation ring K[[t]] (encoded as the
numerical semigroup <1>) and the two-dimensional K[[x, y]] with M = (x, y).

An ideal of R is stored as one of two variants:

* ``P(c)``: the principal ideal cR, c a monomial;
* ``B(J)``: an R-submodule that is already a T-module, J an ideal of the base.

Noninvertible t-ideals of R are T-modules and invertible ones are principal,
so for monomial data these two shapes are closed under the operations below.
The fields k and K are symbolic; the only fact used about them is k != K,
which makes R != T and (R : T) = M.  Colon rules:

    (cR : dR)  = (c/d)R          (B(J) : dR) = B(J/d)
    (B(J) : B(J')) = B((J :_T J'))
    (cR : B(J)) = B(c (M :_T J))   since a T-submodule of R lies in M.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any

from . import core
from .core import Domain, Ideal
from .errors import InvalidDomain, NotTIdeal, Unrepresentable, WitnessCheckFailed
from .monomial import Monomial2, is_variable_prime
from .numsemigroup import NumericalSemigroup
from .semigroup import ClassSemigroup, build_class_semigroup

BASES = ("monomial2_local", "dvr")


@dataclass(frozen=True)
class Pullback(Domain):
    base_kind: str = "monomial2_local"
    subfield_proper: bool = True

    kind = "pullback"

    def __post_init__(self):
        if self.base_kind not in BASES:
            raise InvalidDomain(f"unknown pullback base {self.base_kind!r}; expected one of {BASES}")
        if not self.subfield_proper:
            raise InvalidDomain("k must be a proper subfield of K (otherwise R = T)")
        if self.colon(self.one(), self.T()) != self.M():
            raise InvalidDomain("conductor check (R : T) = M failed")

    @property
    def base(self) -> Domain:
        if self.base_kind == "dvr":
            return NumericalSemigroup((1,))
        return Monomial2(local=True)

    @property
    def t_dim(self) -> int:
        return 1 if self.base_kind == "dvr" else 2

    def __str__(self):
        K = "K[[t]]" if self.base_kind == "dvr" else "K[[x,y]]"
        return f"k + M in {K}"

    def to_config(self):
        return {"kind": self.kind, "base": {"kind": self.base_kind}, "subfield_proper": True}

    # -- constructors

    def P(self, c) -> "PBIdeal":
        return PBIdeal(self, "P", c)

    def B(self, J) -> "PBIdeal":
        if J.domain != self.base:
            raise InvalidDomain(f"{J} is not an ideal of the base {self.base}")
        return PBIdeal(self, "B", J)

    def one(self):
        return self.P(self.base.unit_scalar())

    def T(self):
        return self.B(self.base.one())

    def M(self):
        return self.B(self.base.maximal())

    def integral_closure(self):
        # T is a UFD/DVR, hence completely integrally closed, and almost integral over R
        return self.T()

    def named_ideals(self):
        return {"R": self.one(), "T": self.T(), "M": self.M()}

    # -- scalar helpers

    def _smul(self, c, d):
        if isinstance(c, tuple):
            return (c[0] + d[0], c[1] + d[1])
        return c + d

    def _sinv(self, c):
        if isinstance(c, tuple):
            return (-c[0], -c[1])
        return -c

    def _cT(self, c):
        return self.base.scale(c, self.base.one())

    # -- arithmetic

    def contains(self, I, J):
        bd = self.base
        if I.variant == "P" and J.variant == "P":
            return bd.contains(self._cT(I.data), self._cT(J.data))
        if I.variant == "B" and J.variant == "P":
            return bd.contains(I.data, self._cT(J.data))
        if I.variant == "P" and J.variant == "B":
            return bd.contains(bd.scale(I.data, bd.maximal()), J.data)
        return bd.contains(I.data, J.data)

    def add(self, I, J):
        if I.variant == "B" and J.variant == "B":
            return self.B(self.base.add(I.data, J.data))
        if self.contains(I, J):
            return I
        if self.contains(J, I):
            return J
        raise Unrepresentable(f"{I} + {J} is neither principal nor a T-module")

    def mul(self, I, J):
        bd = self.base
        if I.variant == "P" and J.variant == "P":
            return self.P(self._smul(I.data, J.data))
        if I.variant == "P":
            return self.B(bd.scale(I.data, J.data))
        if J.variant == "P":
            return self.B(bd.scale(J.data, I.data))
        return self.B(bd.mul(I.data, J.data))

    def colon(self, I, J):
        bd = self.base
        if J.variant == "P":
            d = self._sinv(J.data)
            if I.variant == "P":
                return self.P(self._smul(I.data, d))
            return self.B(bd.scale(d, I.data))
        if I.variant == "P":
            return self.B(bd.scale(I.data, bd.colon(bd.maximal(), J.data)))
        return self.B(bd.colon(I.data, J.data))

    def scale(self, c, I):
        if I.variant == "P":
            return self.P(self._smul(c, I.data))
        return self.B(self.base.scale(c, I.data))

    def iso_witness(self, I, J):
        if I.variant != J.variant:
            return None
        if I.variant == "P":
            return self._smul(J.data, self._sinv(I.data))
        return self.base.iso_witness(I.data, J.data)

    def unit_scalar(self):
        return self.base.unit_scalar()

    def format_scalar(self, c):
        return self.base.format_scalar(c)

    def parse_scalar(self, text):
        return self.base.parse_scalar(text)

    def random_scalar(self, rng):
        return self.base.random_scalar(rng)

    def random_ideal(self, rng):
        if rng.random() < 0.25:
            return self.P(self.random_scalar(rng))
        return self.B(self.base.random_ideal(rng))

    def parse_ideal(self, text: str):
        m = re.fullmatch(r"\s*([PB])\s*\((.*)\)\s*", text, re.S)
        if not m:
            raise ValueError(f"not a pullback literal (P(scalar) or B(base ideal)): {text!r}")
        if m.group(1) == "P":
            return self.P(self.parse_scalar(m.group(2)))
        return self.B(self.base.parse_ideal(m.group(2)))

    # -- T-side helpers

    def T_colon(self, I):
        """(T : I) as a T-module."""
        return core.colon(self.T(), I)

    def T_v_closure(self, I):
        return core.v_closure_rel(self.T(), I)

    # -- structure

    def t_dim_witness(self) -> list["PBIdeal"]:
        """A verified chain of nonzero t-primes, shortest first."""
        bd = self.base
        M = self.M()
        if self.base_kind == "dvr":
            chain = [M]
        else:
            chain = [self.B(bd.principal((1, 0))), M]
        for k, P in enumerate(chain):
            if core.v_closure(P) != P:
                raise WitnessCheckFailed(f"{P} is not divisorial")
            if not self.contains(M, P):
                raise WitnessCheckFailed(f"{P} is not inside M")
            # a prime of T inside M is a prime of R
            if self.base_kind == "dvr":
                prime = P.data == bd.maximal()
            else:
                prime = is_variable_prime(P.data)
            if not prime:
                raise WitnessCheckFailed(f"{P} is not a recognized prime of T")
            if k and (P == chain[k - 1] or not self.contains(P, chain[k - 1])):
                raise WitnessCheckFailed("chain is not strictly increasing")
        return chain

    def enumerate_classes_dvr(self) -> ClassSemigroup:
        """S_t(R) for the DVR base: every ideal is t^n R or t^n T, so [R] and [T] exhaust it."""
        if self.base_kind != "dvr":
            raise InvalidDomain("class enumeration is only available for the DVR base")
        reps = [self.one(), self.T()]

        def classify(I):
            for k, rep in enumerate(reps):
                if core.iso_witness(rep, I) is not None:
                    return k
            raise Unrepresentable(f"{I} is in no enumerated class")

        return build_class_semigroup(
            reps,
            product=lambda I, J: core.t_closure(core.mul(I, J)),
            classify=classify,
            tags=["R", "T"],
        )


@dataclass(frozen=True)
class PBIdeal(Ideal):
    domain: Pullback
    variant: str
    data: Any

    def __str__(self):
        if self.variant == "P":
            return f"P({self.domain.format_scalar(self.data)})"
        return f"B({self.data})"

    __repr__ = __str__


def prop23_transfer_check(I: PBIdeal) -> dict:
    """Compare Boole behaviour of a t-ideal of R with that of the matching T-ideal.

    Noninvertible t-ideals are T-modules; when they are not invertible over T
    either, the R- and T-duals coincide and the same scalar c satisfies
    (I^2)_t = cI over R and over T.
    """
    D = I.domain
    if core.t_closure(I) != I:
        raise NotTIdeal(str(I))
    bd = D.base
    out: dict[str, Any] = {"ideal": str(I)}
    cR = core.iso_witness(I, core.t_closure(I * I))
    out["boole_R"] = cR is not None
    out["witness_R"] = None if cR is None else D.format_scalar(cR)
    if I.variant == "P":
        out["branch"] = "invertible"
        J = D._cT(I.data)
    else:
        J = I.data
        TI = D.T_colon(I)
        if bd.mul(J, TI.data) == bd.one():
            out["branch"] = "T-invertible"
        else:
            out["branch"] = "general"
            RI = core.inverse(I)
            out["R_colon"] = str(RI)
            out["T_colon"] = str(TI)
            out["colon_equal"] = RI == TI
    vT = core.v_closure_rel(bd.one(), J)
    cT = core.iso_witness(vT, core.v_closure_rel(bd.one(), bd.mul(J, J)))
    out["boole_T"] = cT is not None
    out["witness_T"] = None if cT is None else D.format_scalar(cT)
    out["passed"] = bool(out["boole_R"] and out["boole_T"] and cR == cT and out.get("colon_equal", True))
    return out
