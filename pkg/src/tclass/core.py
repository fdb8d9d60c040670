"""Generic fractional-ideal calculus on top of the backend contract.

Every backend supplies a :class:`Domain` subclass that knows how to add,
multiply, divide (colon) and rescale its own ideals, and how to decide
containment.  Inverses, divisorial closure, endomorphism rings and
homothety witnesses are then written once here in terms of those
primitives.

All backends describe Noetherian domains and every ideal they can represent
is finitely generated, so the t-closure coincides with the v-closure.  That
identity is encoded exactly once, in :func:`t_closure`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import DomainMismatch, RingCheckFailed, WitnessCheckFailed, ZeroScalar


class Ideal:
    """Mixin giving backend ideal classes operator syntax.

    Concrete ideal types are frozen dataclasses carrying a ``domain`` field
    plus their canonical normal form, so ``==`` is normal-form equality.
    """

    domain: "Domain"

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __pow__(self, n: int):
        return power(self, n)

    def __le__(self, other):
        return contains(other, self)

    def __ge__(self, other):
        return contains(self, other)


class Domain:
    """Backend contract.

    Subclasses implement the ``_``-free primitive methods below on their own
    ideal type.  ``contains(I, J)`` decides ``J ⊆ I``.
    """

    kind: str = "abstract"
    # length of the longest chain of t-primes
    t_dim: int = 1

    def one(self) -> Ideal:
        raise NotImplementedError

    def add(self, I, J) -> Ideal:
        raise NotImplementedError

    def mul(self, I, J) -> Ideal:
        raise NotImplementedError

    def colon(self, I, J) -> Ideal:
        raise NotImplementedError

    def scale(self, c, I) -> Ideal:
        raise NotImplementedError

    def contains(self, I, J) -> bool:
        raise NotImplementedError

    def iso_witness(self, I, J):
        """Return c with J = cI, or None."""
        raise NotImplementedError

    def unit_scalar(self):
        raise NotImplementedError

    def integral_closure(self) -> Ideal:
        """The complete integral closure of R, as a fractional ideal."""
        raise NotImplementedError

    def is_zero_scalar(self, c) -> bool:
        return False

    def random_ideal(self, rng) -> Ideal:
        raise NotImplementedError

    def random_scalar(self, rng):
        raise NotImplementedError

    def parse_ideal(self, text: str) -> Ideal:
        raise NotImplementedError

    def parse_scalar(self, text: str):
        raise NotImplementedError

    def format_scalar(self, c) -> str:
        return str(c)

    def named_ideals(self) -> dict[str, Ideal]:
        return {"R": self.one()}

    def to_config(self) -> dict[str, Any]:
        raise NotImplementedError


def _same(I, J):
    if I.domain != J.domain:
        raise DomainMismatch(f"{I.domain!r} vs {J.domain!r}")
    return I.domain


def add(I, J):
    return _same(I, J).add(I, J)


def mul(I, J):
    return _same(I, J).mul(I, J)


def power(I, n: int):
    if n < 1:
        raise ValueError("power needs n >= 1")
    out = I
    for _ in range(n - 1):
        out = mul(out, I)
    return out


def colon(I, J):
    """(I : J) = {x in qf(R) : xJ ⊆ I}."""
    return _same(I, J).colon(I, J)


def contains(I, J) -> bool:
    """True iff J ⊆ I."""
    return _same(I, J).contains(I, J)


def scale(c, I):
    D = I.domain
    if D.is_zero_scalar(c):
        raise ZeroScalar("homothety by zero")
    return D.scale(c, I)


def inverse(I):
    return colon(I.domain.one(), I)


def v_closure(I):
    return inverse(inverse(I))


def t_closure(I):
    # finitely generated ideals over Noetherian rings: I_t = I_v
    return v_closure(I)


def is_t_ideal(I) -> bool:
    return t_closure(I) == I


@dataclass(frozen=True)
class OverringHandle:
    """A fractional ideal verified to be an overring of R."""

    ideal: Any

    def __post_init__(self):
        T = self.ideal
        if mul(T, T) != T:
            raise RingCheckFailed(f"{T} is not closed under multiplication")
        if not contains(T, T.domain.one()):
            raise RingCheckFailed(f"{T} does not contain R")

    def __str__(self):
        return str(self.ideal)


def overring(T) -> OverringHandle:
    if isinstance(T, OverringHandle):
        return T
    return OverringHandle(T)


def v_closure_rel(T, I):
    """Divisorial closure computed relative to the overring T: (T : (T : I))."""
    T = overring(T).ideal
    return colon(T, colon(T, I))


def endo_ring(I) -> OverringHandle:
    return OverringHandle(colon(I, I))


def iso_witness(I, J):
    """A scalar c with J = cI, or None when I and J are not homothetic.

    Any witness produced by a backend is re-checked here.
    """
    D = _same(I, J)
    c = D.iso_witness(I, J)
    if c is not None and D.scale(c, I) != J:
        raise WitnessCheckFailed(f"{D.format_scalar(c)} * {I} != {J}")
    return c
