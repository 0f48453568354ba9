from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from conftest import aut_of
from orecode.bounds import (BoundCertificate, bch_search, ht_search, mrd_designed_check, period,
                            rank_applicability, roos_search, search, search_both, verify_certificate)
from orecode.codes import SkewCode, min_distance
from orecode.errors import InvalidArgument, NotClosed
from orecode.frame import ExtensionFrame, all_mu_closed_sets
from orecode.reference import worked_example, worked_frame

T12 = frozenset({2, 3, 8, 9})


def test_bch_certificate_examples():
    assert verify_certificate(BoundCertificate("BCH", 2, 1, 3, (0,), 12), T12)
    assert BoundCertificate("BCH", 2, 1, 3, (0,), 12).value == 3
    assert verify_certificate(BoundCertificate("BCH", 5, 1, 2, (0,), 12), {5})
    assert not verify_certificate(BoundCertificate("BCH", 2, 1, 4, (0,), 12), T12)


def test_roos_span_rule_by_mode():
    cert = BoundCertificate("Roos", 2, 1, 3, (0, 6), 12, "strict")
    assert not verify_certificate(cert, T12)
    lenient = BoundCertificate("Roos", 2, 1, 3, (0, 6), 12, "lenient")
    assert verify_certificate(lenient, T12, mu=6)
    assert lenient.value == 4


def test_bch_search_edges():
    assert bch_search(range(7), 7).delta == 8
    assert bch_search(set(), 7).delta == 1
    c = bch_search(T12, 12)
    assert c.value == 3 and verify_certificate(c, T12)


def test_worked_defining_set_modes():
    both = search_both(T12, 12)
    assert both["lenient"].value == 4
    assert (both["strict"].kind, both["strict"].value) == ("BCH", 3)
    assert period(T12, 12) == 6
    assert rank_applicability(both["lenient"])


def test_full_run_roos_equals_bch():
    T = {0, 1, 2}
    for mode in ("strict", "lenient"):
        assert roos_search(T, 12, mode=mode).value == bch_search(T, 12).value == 4


def test_ht_certificate_is_valid():
    T = {0, 1, 3, 4}
    c = ht_search(T, 13)
    assert c.kind == "HT" and c.value == 4 and verify_certificate(c, T)
    # gcd(3, 12) = 3 is not below delta = 3, so the same pattern fails in Z_12
    assert ht_search(T, 12).value == 3


def test_bad_mode():
    with pytest.raises(InvalidArgument):
        roos_search(T12, 12, mode="loose")


def test_mrd_check_worked_data():
    ex = worked_example()
    fr = worked_frame(ex)
    cert = search(T12, 12, mode="lenient")
    assert not mrd_designed_check(T12, cert, fr)
    assert not mrd_designed_check(set(), bch_search(set(), 12), fr)
    with pytest.raises(NotClosed):
        mrd_designed_check({2}, cert, fr)


def test_mrd_designed_instance_confirmed():
    aut = aut_of(2, 3, 1)
    fr = ExtensionFrame(aut, 3)
    T = {0, 1}
    cert = search(T, 3)
    assert mrd_designed_check(T, cert, fr)
    code = SkewCode(fr.base_ring.binomial(3, 1), fr.generator_from_defining_set(T))
    d_r = min_distance(code, "rank", aut.fixed_subfield(), method="exhaustive").d
    assert d_r == cert.value == code.n - code.k + 1


@pytest.mark.parametrize("p,s,r", [(2, 2, 1), (2, 3, 1), (3, 2, 1)])
def test_strict_soundness_small_frames(p, s, r):
    aut = aut_of(p, s, r)
    emb = aut.fixed_subfield()
    for e in range(aut.mu, 7, aut.mu):
        fr = ExtensionFrame(aut, e)
        f = fr.base_ring.binomial(e, 1)
        for T in all_mu_closed_sets(aut.mu, e):
            if len(T) == e:
                continue
            code = SkewCode(f, fr.generator_from_defining_set(T))
            d_h = min_distance(code, "hamming", method="exhaustive").d
            d_r = min_distance(code, "rank", emb, method="exhaustive").d
            assert search(T, e, mode="strict").value <= d_r <= d_h <= code.n - code.k + 1


@given(st.integers(2, 14).flatmap(
    lambda e: st.tuples(st.just(e), st.sets(st.integers(0, e - 1)))))
def test_searched_certificates_verify(arg):
    e, T = arg
    for mode in ("strict", "lenient"):
        for cert in (bch_search(T, e), ht_search(T, e), roos_search(T, e, mode=mode)):
            assert verify_certificate(cert, T)
            assert cert.indices() <= frozenset(T) or cert.delta == 1
    assert search(T, e, mode="lenient").value >= search(T, e, mode="strict").value


@given(st.integers(1, 12).flatmap(
    lambda e: st.tuples(st.just(e), st.sets(st.integers(0, e - 1)))))
def test_period_divides_and_closes(arg):
    e, T = arg
    d = period(T, e)
    assert e % d == 0
    assert {(t + d) % e for t in T} == set(T)
