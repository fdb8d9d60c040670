"""Brute-force reference implementations used to freeze expected values.

Nothing here imports the arithmetic under test; each oracle works on plain
integer sets, exponent boxes or Fraction pairs.
"""
from fractions import Fraction
from itertools import product
from math import gcd, isqrt

# -- numerical semigroups: an ideal is (finite set, tail); all n >= tail belong

def ns_members(gens, upto):
    S = {0}
    for n in range(1, upto):
        if any(n - g in S for g in gens if g <= n):
            S.add(n)
    return S


class WindowSet:
    """Subset of Z that is empty below ``lo`` and full from ``hi`` on."""

    def __init__(self, pts, hi):
        self.pts = frozenset(p for p in pts if p < hi)
        self.hi = hi

    def __contains__(self, n):
        return n >= self.hi or n in self.pts

    @property
    def lo(self):
        return min(self.pts) if self.pts else self.hi

    def listing(self, upto):
        return [n for n in range(self.lo, upto) if n in self]


def ws_from_ideal(I):
    return WindowSet(I.members, I.tail)


def ws_sum(A, B):
    hi = min(A.hi, B.hi)
    return WindowSet([n for n in range(min(A.lo, B.lo), hi) if n in A or n in B], hi)


def ws_product(A, B):
    # every n >= A.hi + B.lo is (n - B.lo) + B.lo, so A.hi + B.hi is safely past the tail
    hi = A.hi + B.hi
    pts = {a + b for a in range(A.lo, hi - B.lo) if a in A for b in range(B.lo, hi - A.lo) if b in B and a + b < hi}
    return WindowSet(pts, hi)


def ws_colon(A, B, span=80):
    """{x : x + B ⊆ A}, scanning B up to a point past both tails."""
    top = max(A.hi, B.hi) + span
    bpts = [b for b in range(B.lo, top) if b in B]
    lo, hi = A.lo - B.hi - span, A.hi - B.lo + 1
    pts = [x for x in range(lo, hi) if all(x + b in A for b in bpts)]
    return WindowSet(pts, hi)


def ws_equal(A, B, lo=-100, hi=100):
    return all((n in A) == (n in B) for n in range(lo, hi))


# -- monomial ideals in two variables, as membership predicates on Z^2

def mono_member(gens):
    return lambda p: any(p[0] >= g[0] and p[1] >= g[1] for g in gens)


def box(r):
    return list(product(range(-r, r + 1), repeat=2))


def mono_colon_points(A, gens_B, r):
    """Points p of the box with p + g in A for every generator g of B."""
    return [p for p in box(r) if all(A((p[0] + g[0], p[1] + g[1])) for g in gens_B)]


def minimal_points(pts):
    return sorted(p for p in pts if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in pts))


def mono_v_closure(gens, r=12):
    """(R : (R : I)) by exponent scan; R membership means both exponents >= 0."""
    R = mono_member([(0, 0)])
    inv = minimal_points(mono_colon_points(R, gens, r))
    return minimal_points(mono_colon_points(R, inv, r))


# -- imaginary quadratic orders: elements as Fraction pairs (x, y) = x + y*w

class QField:
    def __init__(self, d_K):
        self.s = d_K % 2
        self.n = (self.s - d_K) // 4

    def mul(self, a, b):
        x1, y1 = a
        x2, y2 = b
        return (x1 * x2 - self.n * y1 * y2, x1 * y2 + x2 * y1 + self.s * y1 * y2)

    def norm(self, a):
        x, y = a
        return x * x + self.s * x * y + self.n * y * y

    def inv(self, a):
        x, y = a
        N = self.norm(a)
        return (Fraction(x + self.s * y) / N, Fraction(-y) / N)


def in_lattice(basis, e):
    """Is e an integer combination of the two basis vectors?"""
    (a1, a2), (b1, b2) = basis
    det = a1 * b2 - a2 * b1
    u = Fraction(e[0] * b2 - e[1] * b1) / det
    v = Fraction(a1 * e[1] - a2 * e[0]) / det
    return u.denominator == 1 and v.denominator == 1


def same_lattice(B1, B2):
    return all(in_lattice(B1, e) for e in B2) and all(in_lattice(B2, e) for e in B1)


def covolume(basis):
    (a1, a2), (b1, b2) = basis
    return abs(Fraction(a1) * b2 - Fraction(a2) * b1)


def lagrange_reduce(F, basis):
    """Shortest basis of a two-dimensional lattice under the norm form."""
    a, b = basis
    if F.norm(a) > F.norm(b):
        a, b = b, a
    while True:
        # subtract the nearest integer multiple of a from b
        dot = (F.norm((a[0] + b[0], a[1] + b[1])) - F.norm(a) - F.norm(b)) / 2
        k = round(Fraction(dot) / F.norm(a))
        b = (b[0] - k * a[0], b[1] - k * a[1])
        if F.norm(b) >= F.norm(a):
            return [a, b]
        a, b = b, a


def span_covolume(vectors):
    """Covolume of the Z-span of any number of vectors: gcd of the 2x2 minors."""
    den = 1
    for x, y in vectors:
        den = den * Fraction(x).denominator * Fraction(y).denominator // gcd(den, Fraction(x).denominator * Fraction(y).denominator)
    ints = [(int(x * den), int(y * den)) for x, y in vectors]
    g = 0
    for i in range(len(ints)):
        for j in range(i + 1, len(ints)):
            g = gcd(g, ints[i][0] * ints[j][1] - ints[i][1] * ints[j][0])
    return Fraction(g, den * den)


def homothety_witness(F, B1, B2):
    """Some x with x*L1 = L2, or None.

    x*e0 lies in L2 with norm N(e0)*covol(L2)/covol(L1); the norm form on L2
    is positive definite, so the candidates fill a bounded ellipse that is
    scanned completely.
    """
    e0 = lagrange_reduce(F, B1)[0]
    target = F.norm(e0) * covolume(B2) / covolume(B1)
    A, B = lagrange_reduce(F, B2)
    # N(u*A + v*B) = al*u^2 + be*u*v + ga*v^2
    al, ga = F.norm(A), F.norm(B)
    be = F.norm((A[0] + B[0], A[1] + B[1])) - al - ga
    disc = 4 * al * ga - be * be
    umax = isqrt(int(4 * ga * target / disc) + 1) + 1
    vmax = isqrt(int(4 * al * target / disc) + 1) + 1
    for u in range(-umax, umax + 1):
        for v in range(-vmax, vmax + 1):
            if al * u * u + be * u * v + ga * v * v != target:
                continue
            y = (u * A[0] + v * B[0], u * A[1] + v * B[1])
            x = F.mul(y, F.inv(e0))
            if same_lattice([F.mul(x, e) for e in B1], B2):
                return x
    return None


def is_module(F, basis, f):
    fw = (0, f)
    return all(in_lattice(basis, F.mul(fw, e)) for e in basis)


def integral_module_lattices(F, f, max_index):
    """All R-submodules of R = Z + Z f w of index <= max_index, as bases."""
    out = []
    for idx in range(1, max_index + 1):
        for a in range(1, idx + 1):
            if idx % a:
                continue
            c = idx // a
            for b in range(a):
                # lattice spanned by a*1 and b + c*(f w) in the basis (1, f w)
                basis = [(Fraction(a), Fraction(0)), (Fraction(b), Fraction(c * f))]
                if is_module(F, basis, f):
                    out.append(basis)
    return out


def count_reduced_forms(D):
    """Number of reduced primitive positive definite forms of discriminant D."""
    h = 0
    for a in range(1, isqrt(-D // 3) + 2):
        for b in range(-a + 1, a + 1):
            if (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if gcd(gcd(a, b), c) == 1:
                h += 1
    return h


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def class_count_oracle(d_K, f):
    """|S(R)| for the order of conductor f: one Picard group per overorder."""
    return sum(count_reduced_forms(g * g * d_K) for g in divisors(f))
