from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from conftest import aut_of, automorphisms
from oracles import NaiveField, right_eval, right_exponent as naive_exponent, skew_mul, skew_right_rem
from orecode.errors import CapExceeded, DivisionByZero, ParseError, Undefined
from orecode.field import FieldAutomorphism, make_field
from orecode.skew import (SkewRing, evaluate_by_division, evaluate_right, gcrd, gcrd_extended,
                          is_central, is_invariant, is_invariant_by_definition, is_w_polynomial,
                          lclm, lclm_all, left_divmod, minimal_polynomial_of_set, right_divmod,
                          right_exponent, scale_map, vanishing_set)


def ring(p, s, r):
    return SkewRing(aut_of(p, s, r))


def polys(q, max_deg=5, min_deg=0):
    return st.lists(st.integers(0, q - 1), min_size=min_deg + 1, max_size=max_deg + 1)


R4 = ring(2, 2, 1)


def test_frozen_products_gf4():
    # derived with the schoolbook oracle
    assert (R4([1, 2]) * R4([0, 3, 1])).coeffs == (0, 3, 2, 2)
    assert (R4([2, 0, 1]) * R4([3, 1])).coeffs == (1, 2, 3, 1)
    assert R4([1, 2, 3, 1, 1]).rmod(R4([2, 1, 1])).coeffs == (3, 3)


def test_frozen_exponents():
    assert right_exponent(R4([2, 1, 1])) == 4
    assert right_exponent(R4([1, 3, 1])) == 6
    assert right_exponent(R4([3, 0, 2, 1])) == 8
    R9 = ring(3, 2, 1)
    assert right_exponent(R9([4, 1])) == 4
    assert right_exponent(R9([2, 5, 1])) == 12


def test_noncommutative():
    x = R4.x()
    a = R4([2])
    assert x * a != a * x
    assert x * a == R4([R4.sigma(2)]) * x


def test_parse_and_format_roundtrip():
    F = make_field(2, 6, [1, 1, 0, 1, 1, 0, 1])
    R = SkewRing(FieldAutomorphism(F, 1))
    text = "x^10 + g^40*x^9 + g^39*x^8 + g^12*x^6 + g^46*x^5 + g^42*x^4 + g^60*x^2 + g^7*x + g^54"
    f = R.parse(text)
    assert str(f) == text
    assert R.parse(str(f)) == f
    assert R.parse("x^2 - 1") == R.binomial(2, 1)
    with pytest.raises(ParseError):
        R.parse("x^^2")
    with pytest.raises(ParseError):
        R.parse("3*x")


@pytest.mark.parametrize("p,s,r", automorphisms())
def test_multiplication_matches_oracle(p, s, r):
    R = ring(p, s, r)
    N = NaiveField(p, s, R.field.modulus)
    import random
    rng = random.Random(7)
    for _ in range(40):
        f = [rng.randrange(R.field.q) for _ in range(rng.randrange(1, 6))]
        g = [rng.randrange(R.field.q) for _ in range(rng.randrange(1, 6))]
        assert list((R(f) * R(g)).coeffs) == skew_mul(N, r, f, g)
        if any(g):
            assert list(R(f).rmod(R(g)).coeffs) == skew_right_rem(N, r, f, list(R(g).coeffs))


@given(polys(9), polys(9, min_deg=1))
def test_right_division_roundtrip(fc, gc):
    R = ring(3, 2, 1)
    f, g = R(fc), R(gc)
    if g.is_zero():
        with pytest.raises(DivisionByZero):
            right_divmod(f, g)
        return
    q, r = right_divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree
    ql, rl = left_divmod(f, g)
    assert g * ql + rl == f
    assert rl.degree < g.degree


@given(polys(8), polys(8))
def test_degree_additivity(fc, gc):
    R = ring(2, 3, 2)
    f, g = R(fc), R(gc)
    if f.is_zero() or g.is_zero():
        assert (f * g).is_zero()
    else:
        assert (f * g).degree == f.degree + g.degree


@given(polys(4, 6, 1), polys(4, 6, 1))
def test_gcrd_lclm_identity(fc, gc):
    R = R4
    f, g = R(fc), R(gc)
    if f.is_zero() or g.is_zero():
        return
    d, u, v = gcrd_extended(f, g)
    assert u * f + v * g == d
    assert d.is_monic()
    assert d.right_divides(f) and d.right_divides(g)
    m = lclm(f, g)
    assert f.right_divides(m) and g.right_divides(m)
    assert d.degree + m.degree == f.degree + g.degree


def test_gcrd_edge_cases():
    a = R4.parse("x^2+1")
    assert gcrd(a, R4.zero()) == a.monic()
    with pytest.raises(Undefined):
        gcrd(R4.zero(), R4.zero())
    with pytest.raises(Undefined):
        lclm(a, R4.zero())


@pytest.mark.parametrize("p,s,r", automorphisms())
def test_evaluation_routes(p, s, r):
    R = ring(p, s, r)
    N = NaiveField(p, s, R.field.modulus)
    import random
    rng = random.Random(11)
    for _ in range(30):
        f = [rng.randrange(R.field.q) for _ in range(rng.randrange(1, 7))]
        a = rng.randrange(R.field.q)
        v = evaluate_right(R(f), a)
        assert v == evaluate_by_division(R(f), a) == right_eval(N, r, f, a)


def test_exponent_matches_oracle():
    N = NaiveField(2, 2, R4.field.modulus)
    for f in ([1, 1], [2, 1], [1, 0, 1], [3, 2, 1], [1, 1, 1, 1]):
        assert right_exponent(R4(f)) == naive_exponent(N, 1, f, 200)


def test_exponent_strips_x_power_and_cap():
    f = R4([0, 2, 1])  # x (x + sigma^{-1}(2))
    assert right_exponent(f) == right_exponent(R4([R4.sigma(2, -1), 1]))
    with pytest.raises(CapExceeded):
        right_exponent(R4([3, 0, 2, 1]), cap=3)


def test_centrality_and_invariance():
    assert is_central(R4.binomial(4, 1))
    assert not is_central(R4.binomial(3, 1))
    for f in (R4.binomial(2, 1), R4([2, 1]), R4.binomial(3, 2), R4([1, 1, 1])):
        assert is_invariant(f) == is_invariant_by_definition(f)


def test_minimal_polynomials_and_w_polynomials():
    A = [1, 2]
    m = minimal_polynomial_of_set(A, R4)
    assert all(evaluate_right(m, a) == 0 for a in A)
    assert is_w_polynomial(m)
    assert set(A) <= set(vanishing_set(m))


@given(polys(9, 5), polys(9, 5), st.integers(1, 8))
def test_scale_map_is_multiplicative(fc, gc, k):
    R = ring(3, 2, 1)
    alpha = R.field.exp(k)
    f, g = R(fc), R(gc)
    assert scale_map(f * g, alpha) == scale_map(f, alpha) * scale_map(g, alpha)
    assert scale_map(f + g, alpha) == scale_map(f, alpha) + scale_map(g, alpha)


def test_lclm_all_of_linear_factors_gf4():
    roots = [1, 2]
    m = lclm_all(R4.linear(a) for a in roots)
    assert m.degree <= 2 and all(R4.linear(a).right_divides(m) for a in roots)
