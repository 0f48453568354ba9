from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import aut_of
from oracles import NaiveField, rank_weight as naive_rank_weight
from orecode.codes import (SkewCode, gl_rank_distance, hamming_weight, min_distance,
                           min_distance_exhaustive, min_distance_structured_hamming,
                           min_distance_structured_rank, rank_singleton_bound, rank_weight,
                           right_divisors, singleton_check, weight_distribution)
from orecode.errors import DegreeTooLarge, EmptyCode, LengthMismatch, NotRightDivisor
from orecode.frame import ExtensionFrame
from orecode.reference import worked_example

# (p, s, r, e, T): generator coefficients, Hamming and rank (over the fixed field)
# weight enumerators, all derived with the schoolbook oracle
FROZEN = [
    ((2, 2, 1, 4, {0, 2}), (3, 1, 1), [1, 0, 0, 12, 3], [1, 0, 15, 0, 0]),
    ((2, 3, 1, 3, {0, 1}), (4, 6, 1), [1, 0, 0, 7], [1, 0, 0, 7]),
    ((3, 2, 1, 4, {1, 3}), (8, 2, 1), [1, 0, 0, 32, 48], [1, 0, 80, 0, 0]),
    ((2, 2, 1, 6, {0, 2, 4}), (3, 2, 1, 1), [1, 0, 0, 6, 27, 18, 12], [1, 0, 63, 0, 0, 0, 0]),
]


def frame_code(p, s, r, e, T):
    aut = aut_of(p, s, r)
    fr = ExtensionFrame(aut, e)
    g = fr.generator_from_defining_set(T)
    return SkewCode(fr.base_ring.binomial(fr.e, 1), g), aut


@pytest.mark.parametrize("params,gen,wh,wr", FROZEN)
@pytest.mark.parametrize("use_numba", [True, False])
def test_frozen_weight_enumerators(params, gen, wh, wr, use_numba):
    code, aut = frame_code(*params)
    assert code.g.coeffs == gen
    assert weight_distribution(code, None, use_numba) == wh
    assert weight_distribution(code, aut.fixed_subfield(), use_numba) == wr


@pytest.mark.parametrize("params,gen,wh,wr", FROZEN)
def test_distance_routes_agree(params, gen, wh, wr):
    code, aut = frame_code(*params)
    emb = aut.fixed_subfield()
    d_h = next(i for i, c in enumerate(wh) if i and c)
    d_r = next(i for i, c in enumerate(wr) if i and c)
    for nb in (True, False):
        assert min_distance_exhaustive(code, None, use_numba=nb).d == d_h
        assert min_distance_exhaustive(code, emb, use_numba=nb).d == d_r
    assert min_distance_structured_hamming(code).d == d_h
    assert min_distance_structured_rank(code, emb).d == d_r
    rep = min_distance(code, "rank", emb)
    assert code.contains(rep.witness) and rank_weight(rep.witness, emb) == d_r


def test_gl_oracle_tiny():
    code, aut = frame_code(2, 2, 1, 2, {0})
    emb = aut.fixed_subfield()
    assert gl_rank_distance(code, emb) == min_distance(code, "rank", emb).d == 2


def test_generator_matrix_routes():
    ex = worked_example()
    assert ex.code.generator_matrix() == ex.code.generator_matrix_by_products()
    assert (ex.code.n, ex.code.k) == (10, 6)


def test_encode_contains_and_errors():
    code, _ = frame_code(2, 2, 1, 4, {0, 2})
    c = code.encode([1, 2])
    assert code.contains(c)
    assert code.message_of(c) == [1, 2]
    with pytest.raises(DegreeTooLarge):
        code.encode([1, 1, 1])
    with pytest.raises(LengthMismatch):
        code.contains([1, 2])
    R = code.ring
    with pytest.raises(NotRightDivisor):
        SkewCode(R.binomial(4, 1), R([1, 0, 1, 1]))


def test_polycyclic_shift_closure():
    code, _ = frame_code(3, 2, 1, 4, {1, 3})
    for c in list(code.codewords())[:40]:
        assert code.contains(code.polycyclic_shift(c))


def test_empty_code():
    aut = aut_of(2, 2, 1)
    from orecode.skew import SkewRing
    R = SkewRing(aut)
    f = R.binomial(2, 1)
    code = SkewCode(f, f)
    assert code.k == 0
    with pytest.raises(EmptyCode):
        min_distance(code)


@given(st.lists(st.integers(0, 63), min_size=1, max_size=6))
def test_rank_weight_matches_span_oracle(v):
    ex = worked_example()
    N = NaiveField(2, 6, ex.field.modulus)
    assert rank_weight(v, ex.emb) == naive_rank_weight(N, v, [0, 1])
    assert rank_weight(v, ex.emb) <= hamming_weight(v)


def test_singleton_helpers():
    assert rank_singleton_bound(10, 6, 6) == 3
    assert rank_singleton_bound(2, 1, 2) == 2
    code, aut = frame_code(2, 2, 1, 2, {0})
    assert singleton_check(code, 2, 2, aut.fixed_subfield()) == (True, True)


def test_right_divisors_gf4():
    aut = aut_of(2, 2, 1)
    from orecode.skew import SkewRing
    R = SkewRing(aut)
    f = R.binomial(3, 1)
    divs = list(right_divisors(f))
    assert divs[0] == R.one() and divs[-1] == f
    assert all(g.right_divides(f) for g in divs)


def test_kernel_arrays_contiguous():
    code, _ = frame_code(3, 2, 1, 4, {1, 3})
    args = code.kernel_args(None)
    assert args[0].flags["C_CONTIGUOUS"] and args[0].dtype == np.int64
