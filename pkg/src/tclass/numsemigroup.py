"""Monomial fractional ideals of k[[t^S]] for a numerical semigroup S.

An ideal is a set E of integers, bounded below, with E + S ⊆ E.  Such a set
is eventually everything, so it is stored as the members below a tail plus
the tail itself (every n >= tail is a member).  The tail is kept minimal,
which makes the representation canonical.

With S = <1> this is the discrete valuation ring k[[t]], which the pullback
backend uses as its one-dimensional base.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from functools import reduce

from .core import Domain, Ideal
from .errors import InvalidDomain


def apery_set(gens: tuple[int, ...]) -> list[int]:
    """Apéry set of S with respect to its smallest generator (shortest paths mod m)."""
    m = min(gens)
    dist = [None] * m
    dist[0] = 0
    # Bellman-Ford style relaxation; m is small
    changed = True
    while changed:
        changed = False
        for r in range(m):
            if dist[r] is None:
                continue
            for g in gens:
                r2 = (r + g) % m
                d2 = dist[r] + g
                if dist[r2] is None or d2 < dist[r2]:
                    dist[r2] = d2
                    changed = True
    return dist


@dataclass(frozen=True)
class NumericalSemigroup(Domain):
    generators: tuple[int, ...]
    frobenius: int = field(init=False, compare=False)
    gaps: tuple[int, ...] = field(init=False, compare=False, repr=False)

    kind = "numerical_semigroup"
    t_dim = 1

    def __post_init__(self):
        gens = tuple(sorted(set(int(g) for g in self.generators)))
        if not gens or gens[0] <= 0:
            raise InvalidDomain("generators must be positive integers")
        if reduce(gcd, gens) != 1:
            raise InvalidDomain(f"generators {gens} are not coprime")
        # drop redundant generators so the descriptor is canonical
        minimal = []
        for g in gens:
            if not _in_span(g, minimal):
                minimal.append(g)
        object.__setattr__(self, "generators", tuple(minimal))
        ap = apery_set(self.generators)
        m = self.generators[0]
        frob = max(ap) - m
        object.__setattr__(self, "frobenius", frob)
        gaps = tuple(n for n in range(max(frob + 1, 0)) if n < ap[n % m])
        object.__setattr__(self, "gaps", gaps)

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    def __contains__(self, n: int) -> bool:
        return n >= 0 and n not in self.gaps

    def __str__(self):
        return "<" + ",".join(map(str, self.generators)) + ">"

    def to_config(self):
        return {"kind": self.kind, "generators": list(self.generators)}

    # -- construction helpers

    def ideal(self, members, tail=None) -> "NSIdeal":
        """The smallest ideal containing ``members`` (and everything >= tail)."""
        members = sorted(set(members))
        if not members and tail is None:
            raise ValueError("empty ideal")
        lo = members[0] if members else tail
        hi = (members[-1] if members else tail) + self.conductor
        if tail is not None:
            hi = min(hi, tail)
        gens = members

        def pred(n):
            if tail is not None and n >= tail:
                return True
            return any((n - g) in self for g in gens if g <= n)

        return self._from_pred(pred, lo, hi)

    def _from_pred(self, pred, lo: int, hi: int) -> "NSIdeal":
        """Normalize a set known to be empty below ``lo`` and full from ``hi`` on."""
        flags = [pred(n) for n in range(lo, hi)]
        tail = hi
        while tail > lo and flags[tail - lo - 1]:
            tail -= 1
        members = tuple(n for n, f in zip(range(lo, tail), flags) if f)
        return NSIdeal(self, members, tail)

    def one(self):
        return NSIdeal(self, tuple(n for n in range(self.conductor) if n in self), max(self.conductor, 0))

    def integral_closure(self):
        return NSIdeal(self, (), 0)

    def maximal(self):
        return self.ideal(self.generators)

    # -- arithmetic

    def add(self, I, J):
        lo = min(I.min, J.min)
        hi = min(I.tail, J.tail)
        return self._from_pred(lambda n: n in I or n in J, lo, max(lo, hi))

    def mul(self, I, J):
        lo = I.min + J.min
        hi = max(lo, I.tail + J.min)
        gi = I.generators()

        def pred(n):
            return any((n - g) in J for g in gi)

        return self._from_pred(pred, lo, hi)

    def colon(self, I, J):
        lo = I.min - J.min
        hi = max(lo, I.tail - J.min)

        def pred(x):
            # x + f >= I.tail is automatic, so only finitely many f matter
            return all(x + f in I for f in range(J.min, I.tail - x) if f in J)

        return self._from_pred(pred, lo, hi)

    def scale(self, c: int, I):
        return NSIdeal(self, tuple(m + c for m in I.members), I.tail + c)

    def contains(self, I, J):
        top = max(I.tail, J.tail)
        return all(n in I for n in range(J.min, top) if n in J)

    def iso_witness(self, I, J):
        c = J.min - I.min
        return c if self.scale(c, I) == J else None

    def unit_scalar(self):
        return 0

    def format_scalar(self, c):
        return {0: "1", 1: "t"}.get(c, f"t^{c}")

    def parse_scalar(self, text: str) -> int:
        text = text.strip()
        m = re.fullmatch(r"t(?:\^\(?(-?\d+)\)?)?", text)
        if m:
            return int(m.group(1)) if m.group(1) is not None else 1
        if text == "1":
            return 0
        raise ValueError(f"bad scalar {text!r}; expected t^n")

    def random_ideal(self, rng):
        k = rng.randint(1, 3)
        span = self.conductor + max(self.generators) + 2
        gens = [rng.randint(-span, span) for _ in range(k)]
        return self.ideal(gens)

    def random_scalar(self, rng):
        return rng.randint(-6, 6)

    def named_ideals(self):
        return {"R": self.one(), "M": self.maximal()}

    def parse_ideal(self, text: str):
        """Parse ``{a,b,c,...}`` (all integers past c) or ``{a,b;t}`` (explicit tail)."""
        body = text.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise ValueError(f"not a semigroup-ideal literal: {text!r}")
        body = body[1:-1].replace(" ", "")
        tail = None
        if ";" in body:
            body, tail_txt = body.split(";", 1)
            tail = int(tail_txt)
        parts = [p for p in body.split(",") if p]
        if parts and parts[-1] in ("...", "…"):
            parts.pop()
            if not parts:
                raise ValueError("'...' needs a preceding element")
            last = int(parts[-1])
            tail = last if tail is None else min(tail, last)
        members = [int(p) for p in parts]
        return self.ideal(members, tail)


def _in_span(n: int, gens: list[int]) -> bool:
    if n == 0:
        return True
    reach = [False] * (n + 1)
    reach[0] = True
    for i in range(1, n + 1):
        reach[i] = any(i >= g and reach[i - g] for g in gens)
    return reach[n]


@dataclass(frozen=True, eq=True)
class NSIdeal(Ideal):
    domain: NumericalSemigroup
    members: tuple[int, ...]
    tail: int

    @property
    def min(self) -> int:
        return self.members[0] if self.members else self.tail

    def __contains__(self, n: int) -> bool:
        return n >= self.tail or n in self.members

    def generators(self) -> list[int]:
        """Minimal generators: members not reachable as e + s with s a nonzero element of S."""
        S = self.domain
        pts = list(self.members) + list(range(self.tail, self.tail + S.generators[0]))
        return [e for e in pts if not any((e - g) in self for g in S.generators)]

    def __str__(self):
        return "{" + ",".join(str(m) for m in self.members + (self.tail,)) + ",...}"

    __repr__ = __str__
