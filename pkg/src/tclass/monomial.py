"""Monomial fractional ideals of K[x, y] (equivalently K[[x, y]]) as staircases.

A staircase is a finite antichain of exponent pairs g in Z^2; it denotes the
union of the quadrants g + N^2.  All computations are pure exponent
combinatorics, so they agree for the polynomial ring localized at the origin
and for the power-series ring.

Homotheties between monomial ideals are taken to be monomial.  If cI = J with
I, J monomial, comparing the lowest x-degree and lowest y-degree corners
forces the exponent translation, and the translated ideal is then checked
exactly, so a monomial search never misses a witness on this data.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .core import Domain, Ideal


Exp = tuple[int, int]


def minimalize(points) -> tuple[Exp, ...]:
    """Minimal elements under the componentwise order, sorted by x-exponent."""
    pts = sorted(set((int(a), int(b)) for a, b in points))
    out = []
    best_y = None
    for a, b in pts:
        # sorted by (a, b): a point survives iff its y is below every earlier y
        if best_y is None or b < best_y:
            out.append((a, b))
            best_y = b
    return tuple(out)


def _meet(A, B):
    """Intersection of two staircases: pairwise componentwise maxima."""
    return minimalize((max(a[0], b[0]), max(a[1], b[1])) for a in A for b in B)


@dataclass(frozen=True)
class Monomial2(Domain):
    """Two-variable monomial ring; the same data serves as the local base K[[x, y]]."""

    local: bool = False

    kind = "monomial2"
    # UFD: every t-prime has height one
    t_dim = 1

    def __str__(self):
        return "K[[x,y]]" if self.local else "K[x,y]"

    def to_config(self):
        return {"kind": "monomial2_local" if self.local else "monomial2"}

    def staircase(self, gens) -> "Staircase":
        gens = list(gens)
        if not gens:
            raise ValueError("a staircase needs at least one generator")
        return Staircase(self, minimalize(gens))

    def one(self):
        return Staircase(self, ((0, 0),))

    def integral_closure(self):
        return self.one()

    def maximal(self):
        return self.staircase([(1, 0), (0, 1)])

    def principal(self, e: Exp):
        return Staircase(self, (tuple(e),))

    def add(self, I, J):
        return Staircase(self, minimalize(I.gens + J.gens))

    def mul(self, I, J):
        return Staircase(self, minimalize((a[0] + b[0], a[1] + b[1]) for a in I.gens for b in J.gens))

    def colon(self, I, J):
        out = None
        for g in J.gens:
            shifted = tuple((a - g[0], b - g[1]) for a, b in I.gens)
            out = shifted if out is None else _meet(out, shifted)
        return Staircase(self, minimalize(out))

    def scale(self, c: Exp, I):
        return Staircase(self, tuple((a + c[0], b + c[1]) for a, b in I.gens))

    def contains(self, I, J):
        return all(any(g[0] >= h[0] and g[1] >= h[1] for h in I.gens) for g in J.gens)

    def iso_witness(self, I, J):
        c = (J.gens[0][0] - I.gens[0][0], J.gens[-1][1] - I.gens[-1][1])
        return c if self.scale(c, I) == J else None

    def unit_scalar(self):
        return (0, 0)

    def format_scalar(self, c: Exp) -> str:
        return format_monomial(c)

    def parse_scalar(self, text: str) -> Exp:
        return parse_monomial(text)

    def random_ideal(self, rng, box=(-2, 5)):
        k = rng.randint(1, 4)
        return self.staircase([(rng.randint(*box), rng.randint(*box)) for _ in range(k)])

    def random_scalar(self, rng):
        return (rng.randint(-3, 3), rng.randint(-3, 3))

    def named_ideals(self):
        return {"R": self.one(), "M": self.maximal()}

    def parse_ideal(self, text: str):
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"not a staircase literal: {text!r}")
        parts = [p for p in body[1:-1].split(",") if p.strip()]
        return self.staircase(parse_monomial(p) for p in parts)

    # -- localization and prime shapes

    def localize(self, var: str, I) -> "Local1":
        """Invert the other variable: the result is generated by var^(least var-exponent)."""
        k = _var_index(var)
        return Local1(var, min(g[k] for g in I.gens))


def _var_index(var: str) -> int:
    if var not in ("x", "y"):
        raise ValueError(f"unknown variable {var!r}")
    return 0 if var == "x" else 1


def is_variable_prime(I: "Staircase") -> bool:
    """Recognize the primes (x), (y) and (x, y) by generator shape."""
    return I.gens in (((1, 0),), ((0, 1),), ((0, 1), (1, 0)))


def format_monomial(e: Exp) -> str:
    parts = []
    for v, n in zip("xy", e):
        if n == 1:
            parts.append(v)
        elif n != 0:
            parts.append(f"{v}^{n}")
    return " ".join(parts) or "1"


_MONO_RE = re.compile(r"\s*([xy])\s*(?:\^\s*\(?\s*(-?\d+)\s*\)?)?")


def parse_monomial(text: str) -> Exp:
    s = text.strip().replace("*", " ")
    if s == "1":
        return (0, 0)
    e = [0, 0]
    pos = 0
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _MONO_RE.match(s, pos)
        if not m:
            raise ValueError(f"bad monomial {text!r}")
        e[_var_index(m.group(1))] += int(m.group(2)) if m.group(2) is not None else 1
        pos = m.end()
    return (e[0], e[1])


@dataclass(frozen=True)
class Staircase(Ideal):
    domain: Monomial2
    gens: tuple[Exp, ...]

    def __str__(self):
        return "[" + ", ".join(format_monomial(g) for g in reversed(self.gens)) + "]"

    __repr__ = __str__


@dataclass(frozen=True)
class Local1:
    """A monomial ideal of the one-variable localization: principal, var^exponent."""

    var: str
    exponent: int

    def __mul__(self, other):
        return Local1(self.var, self.exponent + other.exponent)

    def colon(self, other):
        return Local1(self.var, self.exponent - other.exponent)

    def v_closure(self):
        one = Local1(self.var, 0)
        return one.colon(one.colon(self))

    def __str__(self):
        return f"({self.var}^{self.exponent})"
