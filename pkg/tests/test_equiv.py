from __future__ import annotations

import itertools
from math import gcd

import pytest
from hypothesis import given, strategies as st

from conftest import aut_of
from oracles import NaiveField, orbit_count
from orecode.codes import SkewCode, right_divisors
from orecode.equiv import (PolyShape, TrinomialShape, brute_force_class_count, class_report, classify,
                           constacyclic_reduction, count_general_classes, count_hamming_classes,
                           count_rank_classes, fixed_subfield_gcrd_witness, general_hamming_witness,
                           hamming_representatives, rank_representatives, schur,
                           standard_trinomial_witness, subgroup_membership, transport_code,
                           transport_preserves_weights, trinomial_hamming_witness,
                           trinomial_rank_witness, verify_scale_isometry, witness_equations_hold)
from orecode.errors import InvalidArgument, ShapeMismatch, SupportMismatch
from orecode.field import SubfieldEmbedding
from orecode.skew import SkewRing


def shapes(F, n, l):
    return [TrinomialShape(n, l, a, b) for a in F.nonzero() for b in F.nonzero()]


def ratio(F, x, y):
    return (F.div(y.a0, x.a0), F.div(y.al, x.al))


def test_reflexive_witness_is_one():
    aut = aut_of(2, 2, 1)
    s = TrinomialShape(5, 3, 2, 3)
    assert trinomial_hamming_witness(s, s, aut).alpha == 1
    assert fixed_subfield_gcrd_witness(s, s, aut) == 1
    assert all(st.alpha == 1 for st in constacyclic_reduction(trinomial_hamming_witness(s, s, aut), aut))


@pytest.mark.parametrize("p,s,r,n,l,want", [
    (2, 2, 1, 5, 3, 3), (2, 2, 1, 4, 2, 9), (2, 2, 1, 5, 2, 3), (2, 2, 1, 4, 1, 3),
    (2, 3, 1, 4, 1, 7), (2, 3, 1, 5, 3, 7), (3, 2, 1, 5, 3, 8), (3, 2, 1, 3, 1, 8),
])
def test_hamming_counts(p, s, r, n, l, want):
    assert count_hamming_classes(n, l, aut_of(p, s, r)) == want


@pytest.mark.parametrize("s", [2, 3, 4, 5])
def test_rank_counts_fixed_field(s):
    for r in range(1, s):
        if gcd(r, s) == 1:
            aut = aut_of(2, s, r)
            assert count_rank_classes(4, 1, aut, aut.fixed_subfield()) == (2 ** s - 1) ** 2


def test_rank_count_full_field_is_hamming():
    aut = aut_of(2, 4, 2)
    full = SubfieldEmbedding(aut.field, 4)
    for n, l in [(3, 1), (5, 2), (6, 3)]:
        assert count_rank_classes(n, l, aut, full) == count_hamming_classes(n, l, aut)


def test_gf4_representatives():
    aut = aut_of(2, 2, 1)
    F = aut.field
    assert [r.format(F) for r in hamming_representatives(5, 3, aut)] == \
        ["x^5 - x^3 - 1", "x^5 - g^1*x^3 - 1", "x^5 - g^2*x^3 - 1"]
    b = aut.bracket(5)
    assert [(r.a0, r.al) for r in hamming_representatives(5, 2, aut)] == \
        [(1, 1), (F.exp(b), 1), (F.exp(2 * b), 1)]


@pytest.mark.parametrize("p,s,r", [(2, 2, 1), (2, 3, 1), (3, 2, 1), (2, 3, 2)])
def test_counts_match_naive_orbits(p, s, r):
    aut = aut_of(p, s, r)
    F = aut.field
    N = NaiveField(p, s, F.modulus)
    for n in range(2, 6):
        for l in range(1, n):
            want = orbit_count(N, r, n, (0, l), range(1, N.q))
            assert count_hamming_classes(n, l, aut) == want
            assert len(hamming_representatives(n, l, aut)) == want


def test_rank_counts_match_orbits_gf16():
    aut = aut_of(2, 4, 2)
    emb = SubfieldEmbedding(aut.field, 2)
    for n in range(2, 7):
        for l in range(1, n):
            want = brute_force_class_count(n, (0, l), aut, emb)
            assert count_rank_classes(n, l, aut, emb) == want
            reps = rank_representatives(n, l, aut, emb)
            assert len(reps) == want
            assert {classify(s, aut, emb)[0] for s in reps} == set(reps)


def test_general_support_size_three():
    aut = aut_of(2, 2, 1)
    for sup in [(0, 2, 4), (0, 1, 3), (1, 2, 5)]:
        assert count_general_classes(6, sup, aut) == brute_force_class_count(6, sup, aut)


def test_membership_equals_witness_existence_gf4():
    aut = aut_of(2, 2, 1)
    F = aut.field
    for n in range(2, 7):
        for l in range(1, n):
            S = shapes(F, n, l)
            for x, y in itertools.product(S, S):
                w = trinomial_hamming_witness(x, y, aut, verify=False)
                assert (w is not None) == subgroup_membership(n, l, aut, ratio(F, x, y))


def test_gcrd_agrees_with_rank_witness_gf4():
    aut = aut_of(2, 2, 1)
    F = aut.field
    emb = aut.fixed_subfield()
    for n in range(2, 6):
        for l in range(1, n):
            S = shapes(F, n, l)
            for x, y in itertools.product(S, S):
                w = trinomial_rank_witness(x, y, aut, emb, verify=False)
                assert (w.alpha if w else None) == fixed_subfield_gcrd_witness(x, y, aut)


def test_gcrd_constant_means_no_witness():
    aut = aut_of(2, 2, 1)
    x, y = TrinomialShape(3, 1, 1, 1), TrinomialShape(3, 1, 2, 1)
    assert fixed_subfield_gcrd_witness(x, y, aut) is None
    assert trinomial_rank_witness(x, y, aut, aut.fixed_subfield()) is None


def test_standard_witness_agrees_gf8():
    aut = aut_of(2, 3, 1)
    F = aut.field
    one = TrinomialShape(4, 1, 1, 1)
    for s in shapes(F, 4, 1):
        a = standard_trinomial_witness(s, aut)
        b = trinomial_hamming_witness(one, s, aut)
        assert (a is None) == (b is None)
        if a:
            assert witness_equations_hold(one, s, a.alpha, aut)


def test_standard_witness_absent_outside_norm_image():
    aut = aut_of(2, 2, 1)
    F = aut.field
    # [2]_1 = 3, so N_2 maps GF(4)^* to 1 and a0 = g^1 is not a norm
    assert standard_trinomial_witness(TrinomialShape(2, 1, F.exp(1), 1), aut) is None


def test_transitivity_gf8():
    aut = aut_of(2, 3, 1)
    F = aut.field
    S = shapes(F, 5, 2)[::5]
    for x, y, z in itertools.product(S, S, S):
        w1 = trinomial_hamming_witness(x, y, aut, verify=False)
        w2 = trinomial_hamming_witness(y, z, aut, verify=False)
        if w1 and w2:
            assert witness_equations_hold(x, z, F.mul(w1.alpha, w2.alpha), aut)


def test_symmetry_gf9():
    aut = aut_of(3, 2, 1)
    F = aut.field
    S = shapes(F, 4, 1)
    for x, y in itertools.product(S[:8], S):
        w = trinomial_hamming_witness(x, y, aut, verify=False)
        if w:
            assert witness_equations_hold(y, x, F.inv(w.alpha), aut)


def test_constacyclic_steps():
    aut = aut_of(2, 2, 1)
    F = aut.field
    for n in range(2, 6):
        for l in range(1, n):
            base = TrinomialShape(n, l, 1, 1)
            for y in shapes(F, n, l):
                w = trinomial_hamming_witness(base, y, aut, verify=False)
                if w:
                    for step in constacyclic_reduction(w, aut):
                        assert step.in_subgroup and step.power_identity and step.equations_hold


def test_errors():
    aut = aut_of(2, 2, 1)
    with pytest.raises(ShapeMismatch):
        trinomial_hamming_witness(TrinomialShape(4, 1, 1, 1), TrinomialShape(5, 1, 1, 1), aut)
    with pytest.raises(SupportMismatch):
        general_hamming_witness(PolyShape(5, (0, 2), (1, 1)), PolyShape(5, (0, 3), (1, 1)), aut)
    with pytest.raises(InvalidArgument):
        TrinomialShape(4, 4, 1, 1)
    with pytest.raises(InvalidArgument):
        TrinomialShape(4, 1, 0, 1)


def test_constacyclic_single_support():
    aut = aut_of(2, 3, 1)
    F = aut.field
    for lam in F.nonzero():
        for mu in F.nonzero():
            w = general_hamming_witness(PolyShape(4, (0,), (lam,)), PolyShape(4, (0,), (mu,)), aut)
            expect = any(F.mul(lam, aut.norm(a, 4)) == mu for a in F.nonzero())
            assert (w is not None) == expect


def test_central_variant():
    aut = aut_of(2, 4, 2)
    q0m1 = aut.q0 - 1
    assert count_hamming_classes(5, 2, aut, central=True) <= q0m1 ** 2


def test_class_report_consistent():
    aut = aut_of(2, 2, 1)
    rep = class_report(5, 3, aut)
    assert rep.count * rep.subgroup_order == 9 and rep.count == 3


@pytest.mark.parametrize("n", [2, 3])
def test_isometry_all_pairs_and_transport(n):
    aut = aut_of(2, 2, 1)
    F = aut.field
    R = SkewRing(aut)
    for s in shapes(F, n, 1):
        rep, w = classify(s, aut)
        assert verify_scale_isometry(w, aut, pairs="all")
        dst = rep.modulus(R)
        for g in right_divisors(dst):
            code = SkewCode(dst, g)
            assert transport_preserves_weights(code, w, aut)


def test_rank_witness_transport():
    aut = aut_of(2, 4, 2)
    F = aut.field
    emb = SubfieldEmbedding(F, 2)
    R = SkewRing(aut)
    src = TrinomialShape(3, 1, F.exp(2), F.exp(7))
    rep, w = classify(src, aut, emb)
    assert w.metric == "rank:4" and emb.contains(w.alpha)
    assert verify_scale_isometry(w, aut, pairs="left-basis")
    dst = rep.modulus(R)
    for g in right_divisors(dst):
        assert transport_preserves_weights(SkewCode(dst, g), w, aut, emb)


def test_identity_transport():
    aut = aut_of(2, 2, 1)
    s = TrinomialShape(3, 1, 1, 1)
    w = trinomial_hamming_witness(s, s, aut)
    R = SkewRing(aut)
    f = s.modulus(R)
    for g in right_divisors(f):
        assert transport_code(SkewCode(f, g), w, aut).g == g


def test_schur():
    aut = aut_of(2, 2, 1)
    F = aut.field
    assert schur((2, 3), (3, 3), F) == (F.mul(2, 3), F.mul(3, 3))
    with pytest.raises(InvalidArgument):
        schur((1,), (1, 1), F)


@given(st.integers(2, 7).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))),
       st.sampled_from([(2, 2, 1), (2, 3, 1), (2, 3, 2), (3, 2, 1), (2, 4, 1), (2, 4, 3)]))
def test_count_times_subgroup_is_group_order(nl, params):
    n, l = nl
    aut = aut_of(*params)
    rep = class_report(n, l, aut)
    assert rep.count * rep.subgroup_order == aut.field.order ** 2
    assert len(rep.representatives) == rep.count
