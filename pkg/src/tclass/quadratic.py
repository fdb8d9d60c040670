"""Orders in imaginary quadratic fields and their fractional ideals.

Field elements are written x + y*w with rational x, y, where w is the
standard generator of the maximal order: w = sqrt(m) when d_K = 4m and
w = (1 + sqrt(d_K))/2 when d_K = 1 mod 4.  The order of conductor f is
Z + Z*f*w.

A fractional ideal is a full lattice (1/q)(Z*a + Z*(b + c*w)) with
a, c > 0, 0 <= b < a and q minimal.  That tuple is unique for the lattice,
so ideal equality is tuple equality.

Every lattice in an imaginary quadratic field is homothetic to exactly one
Z + Z*tau with tau in the standard fundamental domain, which gives canonical
class representatives and complete homothety witnesses.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .core import Domain, Ideal
from .errors import BoundExceeded, InvalidDomain, NotFullRank
from .semigroup import ClassSemigroup, build_class_semigroup


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _xgcd(a: int, b: int):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _crt(r1: int, m1: int, r2: int, m2: int) -> int:
    g = gcd(m1, m2)
    if (r2 - r1) % g:
        raise ArithmeticError("incompatible congruences")
    m2g = m2 // g
    t = ((r2 - r1) // g) * pow(m1 // g, -1, m2g) % m2g if m2g > 1 else 0
    return (r1 + m1 * t) % _lcm(m1, m2)


def hnf2(vectors) -> tuple[int, int, int]:
    """(a, b, c) with span(vectors) = Z*(a, 0) + Z*(b, c), a, c > 0, 0 <= b < a."""
    a = 0
    piv = None
    for u, v in vectors:
        if v == 0:
            a = gcd(a, u)
        elif piv is None:
            piv = (u, v)
        else:
            pu, pv = piv
            g, s, t = _xgcd(pv, v)
            a = gcd(a, (v // g) * pu - (pv // g) * u)
            piv = (s * pu + t * u, g)
    if piv is None or a == 0:
        raise NotFullRank("generators do not span a full lattice")
    pu, pv = piv
    if pv < 0:
        pu, pv = -pu, -pv
    return a, pu % a, pv


def is_fundamental_discriminant(d: int) -> bool:
    def squarefree(n):
        n = abs(n)
        k = 2
        while k * k <= n:
            if n % (k * k) == 0:
                return False
            k += 1
        return True

    if d % 4 == 1:
        return squarefree(d) and d != 1
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and squarefree(m)
    return False


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class QuadNumber:
    """x + y*w."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __bool__(self):
        return bool(self.x or self.y)

    def __str__(self):
        q = _lcm(self.x.denominator, self.y.denominator)
        X, Y = int(self.x * q), int(self.y * q)
        if q == 1:
            return format_element(X, Y)
        if Y == 0:
            return f"{X}/{q}"
        return f"({format_element(X, Y)})/{q}"

    __repr__ = __str__


def format_element(X: int, Y: int) -> str:
    if Y == 0:
        return str(X)
    w = "w" if abs(Y) == 1 else f"{abs(Y)}w"
    if X == 0:
        return ("-" if Y < 0 else "") + w
    return f"{X}{'-' if Y < 0 else '+'}{w}"


_TERM_RE = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(\*?w)?")


def parse_element(text: str) -> QuadNumber:
    s = text.replace(" ", "")
    m = re.fullmatch(r"\((.*)\)/(\d+)", s)
    if m:
        inner = parse_element(m.group(1))
        q = int(m.group(2))
        return QuadNumber(inner.x / q, inner.y / q)
    if not s:
        raise ValueError("empty element")
    x = y = Fraction(0)
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"bad quadratic element {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3):
            y += sign * coef
        else:
            x += sign * coef
        pos = m.end()
    return QuadNumber(x, y)


@dataclass(frozen=True)
class QuadOrder(Domain):
    d_K: int
    f: int = 1

    kind = "quadratic"
    t_dim = 1
    bound = 20000

    def __post_init__(self):
        if self.d_K > 0:
            raise InvalidDomain("real quadratic orders are not supported (need d_K < 0)")
        if not is_fundamental_discriminant(self.d_K):
            raise InvalidDomain(f"{self.d_K} is not a fundamental discriminant")
        if self.f < 1:
            raise InvalidDomain("conductor must be a positive integer")

    @property
    def s(self) -> int:
        return self.d_K % 2

    @property
    def n(self) -> int:
        return (self.s - self.d_K) // 4

    @property
    def discriminant(self) -> int:
        return self.f * self.f * self.d_K

    def __str__(self):
        return f"O(d_K={self.d_K}, f={self.f})"

    def to_config(self):
        return {"kind": self.kind, "d_K": self.d_K, "f": self.f}

    # -- field arithmetic on integer triples (X, Y, d) = (X + Y*w)/d, d > 0

    def emul(self, a, b):
        X1, Y1, d1 = a
        X2, Y2, d2 = b
        YY = Y1 * Y2
        return (X1 * X2 - self.n * YY, X1 * Y2 + X2 * Y1 + self.s * YY, d1 * d2)

    def enorm_int(self, X: int, Y: int) -> int:
        return X * X + self.s * X * Y + self.n * Y * Y

    def enorm(self, a) -> Fraction:
        X, Y, d = a
        return Fraction(self.enorm_int(X, Y), d * d)

    def einv(self, a):
        X, Y, d = a
        return (d * (X + self.s * Y), -d * Y, self.enorm_int(X, Y))

    # -- lattices

    def lattice(self, gens) -> "QuadIdeal":
        """Z-span of the given field elements (triples), in normal form; no module check."""
        D = 1
        for _, _, d in gens:
            D = _lcm(D, d)
        a, b, c = hnf2([(X * (D // d), Y * (D // d)) for X, Y, d in gens])
        g = gcd(gcd(D, a), gcd(b, c))
        return QuadIdeal(self, D // g, a // g, b // g, c // g)

    def ideal(self, gens) -> "QuadIdeal":
        """R-module generated by the given elements."""
        fw = (0, self.f, 1)
        pts = []
        for g in gens:
            g = _triple(g)
            pts += [g, self.emul(g, fw)]
        return self.lattice(pts)

    def order(self, g: int) -> "QuadIdeal":
        """Z + Z*g*w, the order of conductor g (as a fractional ideal of R when g | f)."""
        return QuadIdeal(self, 1, 1, 0, g)

    def one(self):
        return self.order(self.f)

    def integral_closure(self):
        return self.order(1)

    def add(self, I, J):
        return self.lattice(I.basis() + J.basis())

    def mul(self, I, J):
        return self.lattice([self.emul(u, v) for u in I.basis() for v in J.basis()])

    def _integral(self, I, D):
        k = D // I.q
        return I.a * k, I.b * k, I.c * k

    def intersect(self, I, J):
        D = _lcm(I.q, J.q)
        a1, b1, c1 = self._integral(I, D)
        a2, b2, c2 = self._integral(J, D)
        C0 = _lcm(c1, c2)
        g = gcd(a1, a2)
        delta = (C0 // c1) * b1 - (C0 // c2) * b2
        k0 = g // gcd(g, delta)
        C = C0 * k0
        A = _lcm(a1, a2)
        B = _crt((C // c1) * b1 % a1, a1, (C // c2) * b2 % a2, a2) % A
        gg = gcd(gcd(D, A), gcd(B, C))
        return QuadIdeal(self, D // gg, A // gg, B // gg, C // gg)

    def colon(self, I, J):
        out = None
        for j in J.basis():
            ji = self.einv(j)
            part = self.lattice([self.emul(ji, u) for u in I.basis()])
            out = part if out is None else self.intersect(out, part)
        return out

    def scale(self, c, I):
        c = _triple(c)
        return self.lattice([self.emul(c, u) for u in I.basis()])

    def member(self, I, e) -> bool:
        X, Y, d = _triple(e)
        X, Y = X * I.q, Y * I.q
        if X % d or Y % d:
            return False
        X, Y = X // d, Y // d
        if Y % I.c:
            return False
        return (X - (Y // I.c) * I.b) % I.a == 0

    def contains(self, I, J):
        return all(self.member(I, e) for e in J.basis())

    def is_module(self, I) -> bool:
        fw = (0, self.f, 1)
        return all(self.member(I, self.emul(fw, e)) for e in I.basis())

    def norm(self, I) -> Fraction:
        """Covolume of I relative to R; multiplicative on invertible ideals."""
        return Fraction(I.a * I.c, I.q * I.q * self.f)

    def multiplier_ring(self, I) -> int:
        """Conductor g of the order (I : I) = Z + Z*g*w."""
        E = self.colon(I, I)
        assert (E.q, E.a, E.b) == (1, 1, 0), E
        return E.c

    # -- homothety classes

    def _reduce(self, I):
        """(alpha, tau) with I = alpha*(Z + Z*tau) and tau reduced."""
        alpha, beta = I.basis()
        s = self.s
        while True:
            X, Y, d = _simplify(self.emul(beta, self.einv(alpha)))
            # tau = (X + Y*w)/d; Re(tau) = (2X + sY)/(2d); N(tau) = N(X + Y*w)/d^2
            k = -((d - 2 * X - s * Y) // (2 * d))  # ceil(Re(tau) - 1/2)
            if k:
                beta = _sub(beta, (k * alpha[0], k * alpha[1], alpha[2]))
                X -= k * d
            N = self.enorm_int(X, Y)
            if N < d * d or (N == d * d and 2 * X + s * Y < 0):
                alpha, beta = beta, (-alpha[0], -alpha[1], alpha[2])
                continue
            return alpha, (X, Y, d)

    def reduce_class(self, I) -> "QuadIdeal":
        _, tau = self._reduce(I)
        return self.lattice([(1, 0, 1), tau])

    def iso_witness(self, I, J):
        a1, t1 = self._reduce(I)
        a2, t2 = self._reduce(J)
        if t1 != t2:
            return None
        X, Y, d = self.emul(a2, self.einv(a1))
        return QuadNumber(Fraction(X, d), Fraction(Y, d))

    def unit_scalar(self):
        return QuadNumber(1, 0)

    def is_zero_scalar(self, c):
        X, Y, _ = _triple(c)
        return X == 0 and Y == 0

    def format_scalar(self, c):
        X, Y, d = _triple(c)
        return str(QuadNumber(Fraction(X, d), Fraction(Y, d)))

    def parse_scalar(self, text):
        return parse_element(text)

    def random_scalar(self, rng):
        while True:
            c = QuadNumber(Fraction(rng.randint(-4, 4), rng.randint(1, 3)), Fraction(rng.randint(-3, 3), rng.randint(1, 2)))
            if c:
                return c

    def random_ideal(self, rng):
        g = rng.choice(divisors(self.f))
        gw = (0, g, 1)
        pts = []
        for _ in range(rng.randint(1, 2)):
            e = (0, 0, 1)
            while e[:2] == (0, 0):
                e = (rng.randint(-6, 6), rng.randint(-6, 6), 1)
            pts += [e, self.emul(e, gw)]
        I = self.lattice(pts)
        return self.scale(self.random_scalar(rng), I)

    def named_ideals(self):
        return {"R": self.one(), "O": self.order(1)}

    def parse_ideal(self, text: str):
        """``(e1, e2, ...)`` or ``(e1, e2, ...)/q``: the R-module generated by the e_i (over q)."""
        s = text.strip()
        m = re.fullmatch(r"\((.*)\)\s*(?:/\s*(\d+))?", s, re.S)
        if not m:
            raise ValueError(f"not a quadratic ideal literal: {text!r}")
        q = int(m.group(2)) if m.group(2) else 1
        elems = [parse_element(p) for p in m.group(1).split(",") if p.strip()]
        if not elems:
            raise ValueError("empty generator list")
        return self.ideal(QuadNumber(e.x / q, e.y / q) for e in elems)

    # -- class semigroup

    def reduced_forms(self, D: int) -> list[tuple[int, int, int]]:
        """Reduced primitive positive definite forms (a, b, c) of discriminant D."""
        out = []
        a = 1
        while 3 * a * a <= -D:
            for b in range(-a + 1, a + 1):
                if (b * b - D) % (4 * a):
                    continue
                c = (b * b - D) // (4 * a)
                if c < a or (c == a and b < 0):
                    continue
                if gcd(gcd(a, b), c) == 1:
                    out.append((a, b, c))
            a += 1
        return out

    def form_lattice(self, form, g: int) -> "QuadIdeal":
        """Z + Z*tau for the root tau = (-b + sqrt(g^2 d_K))/(2a) of the form."""
        a, b, _ = form
        tau = (-b - g * self.s, 2 * g, 2 * a)
        return self.lattice([(1, 0, 1), tau])

    def class_representatives(self) -> list[tuple[int, "QuadIdeal"]]:
        """(g, representative) for every ideal class, grouped by multiplier ring conductor g."""
        if -self.discriminant > self.bound:
            raise BoundExceeded(f"|D| = {-self.discriminant} exceeds {self.bound}")
        reps = []
        for g in sorted(divisors(self.f), reverse=True):
            group = []
            for form in self.reduced_forms(g * g * self.d_K):
                group.append(self.reduce_class(self.form_lattice(form, g)))
            unit = self.reduce_class(self.order(g))
            group.sort(key=lambda I: (I != unit, I.key()))
            reps += [(g, I) for I in group]
        return reps

    def enumerate_class_semigroup(self) -> ClassSemigroup:
        tagged = self.class_representatives()
        reps = [I for _, I in tagged]
        index = {I: k for k, I in enumerate(reps)}
        # every lattice in a quadratic order is divisorial, so the t-product is the plain product
        return build_class_semigroup(
            reps,
            product=self.mul,
            classify=lambda I: index[self.reduce_class(I)],
            tags=[g for g, _ in tagged],
        )


def _triple(c):
    """Scalar (QuadNumber, int, Fraction or triple) as an integer triple (X, Y, d)."""
    if isinstance(c, tuple):
        return c
    if isinstance(c, QuadNumber):
        d = _lcm(c.x.denominator, c.y.denominator)
        return (int(c.x * d), int(c.y * d), d)
    c = Fraction(c)
    return (c.numerator, 0, c.denominator)


def _simplify(t):
    X, Y, d = t
    g = gcd(gcd(X, Y), d)
    if d < 0:
        g = -g
    return (X // g, Y // g, d // g)


def _sub(a, b):
    X1, Y1, d1 = a
    X2, Y2, d2 = b
    return _simplify((X1 * d2 - X2 * d1, Y1 * d2 - Y2 * d1, d1 * d2))


@dataclass(frozen=True)
class QuadIdeal(Ideal):
    domain: QuadOrder
    q: int
    a: int
    b: int
    c: int

    def basis(self):
        return [(self.a, 0, self.q), (self.b, self.c, self.q)]

    def key(self):
        return (self.q, self.a, self.b, self.c)

    @property
    def norm(self) -> Fraction:
        return self.domain.norm(self)

    def __str__(self):
        body = f"({self.a}, {format_element(self.b, self.c)})"
        return body if self.q == 1 else f"{body}/{self.q}"

    __repr__ = __str__
