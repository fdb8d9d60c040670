import random

import pytest
from hypothesis import given, settings, strategies as st

from tclass import Monomial2, colon, inverse, iso_witness, mul, scale, v_closure
from tclass.monomial import format_monomial, is_variable_prime, minimalize, parse_monomial

from oracles import box, minimal_points, mono_colon_points, mono_member, mono_v_closure

D = Monomial2()
points = st.tuples(st.integers(-3, 4), st.integers(-3, 4))
staircases = st.lists(points, min_size=1, max_size=4).map(D.staircase)


def test_maximal_ideal_colons():
    M = D.maximal()
    assert colon(M, M) == D.one()
    assert colon(M, M * M) == D.one()
    assert M * D.one() == M
    assert inverse(M) == D.one()
    assert v_closure(M) == D.one()
    assert M != D.one()


def test_sum_and_scale():
    x2, y2 = D.principal((2, 0)), D.principal((0, 2))
    assert (x2 + y2).gens == ((0, 2), (2, 0))
    assert scale((1, 0), D.maximal()) == D.staircase([(2, 0), (1, 1)])


def test_localization_examples():
    M = D.maximal()
    assert D.localize("x", M).exponent == 0
    assert D.localize("x", D.staircase([(2, 1), (3, 0)])).exponent == 2
    assert D.localize("x", D.principal((4, 7))).exponent == 4


def test_variable_primes():
    assert is_variable_prime(D.principal((1, 0)))
    assert not is_variable_prime(D.principal((2, 0)))
    assert is_variable_prime(D.maximal())


def test_monomial_text_round_trip():
    for e in [(0, 0), (1, 0), (0, 1), (2, -3), (-1, 5)]:
        assert parse_monomial(format_monomial(e)) == e
    assert parse_monomial("x*y^2") == (1, 2)


def test_minimalize_keeps_antichain():
    assert minimalize([(0, 2), (1, 1), (1, 3), (2, 0), (3, 3)]) == ((0, 2), (1, 1), (2, 0))


@settings(max_examples=150, deadline=None)
@given(I=staircases, J=staircases)
def test_colon_matches_box_scan(I, J):
    # generators stay in [-3, 4], so every colon generator lies in [-7, 7]^2
    got = colon(I, J)
    brute = minimal_points(mono_colon_points(mono_member(I.gens), J.gens, 8))
    assert list(got.gens) == brute


@settings(max_examples=150, deadline=None)
@given(I=staircases)
def test_v_closure_matches_double_dual_scan(I):
    assert list(v_closure(I).gens) == mono_v_closure(list(I.gens))


@settings(max_examples=150, deadline=None)
@given(I=staircases, J=staircases)
def test_product_membership(I, J):
    P = mul(I, J)
    inside = mono_member(P.gens)
    for p in box(6):
        expected = any(mono_member(I.gens)((p[0] - b[0], p[1] - b[1])) for b in J.gens)
        assert inside(p) == expected


@settings(max_examples=100, deadline=None)
@given(I=staircases, c=points)
def test_iso_witness_finds_translations(I, c):
    assert iso_witness(I, scale(c, I)) == c


def test_iso_witness_rejects_non_homothetic():
    assert iso_witness(D.maximal(), D.staircase([(2, 0), (0, 1)])) is None


def test_random_ideal_deterministic():
    a = D.random_ideal(random.Random(3))
    b = D.random_ideal(random.Random(3))
    assert a == b


def test_local_variant_is_distinct_domain():
    L = Monomial2(local=True)
    assert L.to_config() == {"kind": "monomial2_local"}
    assert L.maximal() != D.maximal()
