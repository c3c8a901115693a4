import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oriented_riordan import series as ps
from oriented_riordan.riordan import (
    RiordanPair,
    a_sequence,
    bell_pair,
    catalan_pair,
    column_table,
    f_from_a_sequence,
    ftrm_apply,
    identity,
    inverse,
    leading_matrix,
    multiply,
    pascal,
    reconstruct_from_a,
)

from helpers import random_proper_pair
from oracles import leading_naive, lucas_binom, pcompose, pmul, triangular_matmul


def test_pair_validation():
    with pytest.raises(ValueError):
        RiordanPair(ps.one(3, 4), ps.one(3, 4))
    with pytest.raises(ValueError):
        RiordanPair(ps.one(3, 4), ps.z(5, 4))
    assert pascal(3, 5).proper
    assert not RiordanPair(ps.zero(3, 5), ps.pascal_f(3, 5)).proper
    assert not RiordanPair(ps.one(3, 5), ps.monomial(2, 3, 5)).proper


def test_identity_matrix():
    assert np.array_equal(leading_matrix(identity(3, 4), 4), np.eye(4, dtype=np.int64))


def test_pascal_mod3_by_lucas():
    m = leading_matrix(pascal(3, 12), 12)
    assert m[4].tolist()[:5] == [1, 1, 0, 1, 1]
    for i in range(12):
        for j in range(12):
            assert m[i, j] == lucas_binom(i, j, 3)


def test_zero_generator():
    pair = RiordanPair(ps.zero(3, 6), ps.pascal_f(3, 6))
    assert not leading_matrix(pair, 6).any()


def test_insufficient_truncation():
    with pytest.raises(ValueError):
        leading_matrix(pascal(3, 4), 5)
    with pytest.raises(ValueError):
        column_table(ps.one(3, 2), ps.z(3, 4), 3, 3)


def test_leading_matrix_is_lower_triangular():
    m = leading_matrix(catalan_pair(3, 10), 10)
    assert not np.triu(m, 1).any()


def test_ftrm_small_cases():
    pair = catalan_pair(3, 8)
    assert ftrm_apply(pair, ps.one(3, 8)) == pair.g
    assert ftrm_apply(pair, ps.z(3, 8)) == ps.mul(pair.g, pair.f)


def test_group_identity_and_inverse():
    pair = pascal(3, 10)
    e = identity(3, 10)
    assert multiply(pair, e) == pair
    assert multiply(e, pair) == pair
    assert multiply(pair, inverse(pair)) == e
    assert inverse(e) == e
    # the inverse of Pascal is (1/(1+z), z/(1+z))
    inv = inverse(pair)
    assert inv.g == ps.geometric(-1, 3, 10)
    with pytest.raises(ValueError):
        inverse(RiordanPair(ps.zero(3, 4), ps.z(3, 4)))
    with pytest.raises(ValueError):
        multiply(pascal(3, 4), pascal(5, 4))


def test_a_sequence_examples():
    assert a_sequence(pascal(3, 10)).tolist() == [1, 1] + [0] * 7
    assert a_sequence(catalan_pair(3, 10)).tolist() == [1] * 9
    g = ps.make([1, 1, -1, 1], 3, 8)
    assert a_sequence(RiordanPair(g, ps.z(3, 8))).tolist() == [1] + [0] * 6
    assert a_sequence(pascal(3, 10), 6).tolist() == [1, 1, 0, 0, 0, 0]
    with pytest.raises(ValueError):
        a_sequence(pascal(3, 10), 10)
    with pytest.raises(ValueError):
        a_sequence(RiordanPair(ps.one(3, 5), ps.make([0, -1], 3, 5)))


def test_reconstruct_examples():
    m = reconstruct_from_a(ps.pascal_g(3, 9), ps.make([1, 1], 3, 8), 9)
    assert np.array_equal(m, leading_matrix(pascal(3, 9), 9))
    g = ps.make([1, -1, 0, 1, 1], 3, 5)
    shifted = reconstruct_from_a(g, ps.make([1], 3, 4), 5)
    assert np.array_equal(shifted[1:, 1:], shifted[:-1, :-1])
    with pytest.raises(ValueError):
        reconstruct_from_a(g, ps.make([0, 1], 3, 4), 5)


def test_f_from_a_inverts_a_sequence():
    a = ps.make([1, -1, 0, 1, -1, 0], 3, 6)
    f = f_from_a_sequence(a, 7)
    assert a_sequence(RiordanPair(ps.one(3, 7), f)) == a
    with pytest.raises(ValueError):
        f_from_a_sequence(a, 8)


def test_bell_pair_shape():
    pr = bell_pair(ps.make([1, 1, 0, 1], 3, 4))
    assert pr.f.tolist() == [0, 1, 1, 0]


# property suite on random proper pairs


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=50, deadline=None)
@given(seeds, st.sampled_from((3, 5, 7)))
def test_multiply_is_matrix_product(seed, p):
    rng = np.random.default_rng(seed)
    a, b = random_proper_pair(rng, p, 8), random_proper_pair(rng, p, 8)
    ab = leading_matrix(multiply(a, b), 8).tolist()
    assert ab == triangular_matmul(leading_matrix(a, 8).tolist(), leading_matrix(b, 8).tolist(), p)


@settings(max_examples=50, deadline=None)
@given(seeds, st.sampled_from((3, 5, 7)))
def test_group_laws(seed, p):
    rng = np.random.default_rng(seed)
    a, b, d = (random_proper_pair(rng, p, 10) for _ in range(3))
    assert multiply(multiply(a, b), d) == multiply(a, multiply(b, d))
    assert inverse(inverse(a)) == a
    e = identity(p, 10)
    assert multiply(inverse(a), a) == e == multiply(a, inverse(a))


@settings(max_examples=50, deadline=None)
@given(seeds, st.sampled_from((3, 5, 7)))
def test_ftrm_and_leading_matrix_oracle(seed, p):
    rng = np.random.default_rng(seed)
    pair = random_proper_pair(rng, p, 10)
    phi = ps.make(rng.integers(-3, 4, 10), p, 10)
    m = leading_matrix(pair, 10)
    assert m.tolist() == leading_naive(pair.g.tolist(), pair.f.tolist(), 10, p)
    mv = [int(x) for x in (m @ phi.coeffs) % p]
    assert ps.make(mv, p, 10) == ftrm_apply(pair, phi)
    gphi = pmul(pair.g.tolist(), pcompose(phi.tolist(), pair.f.tolist(), 10, p), 10, p)
    assert ftrm_apply(pair, phi).tolist() == gphi


@settings(max_examples=50, deadline=None)
@given(seeds, st.sampled_from((3, 5, 7)))
def test_a_sequence_round_trip(seed, p):
    rng = np.random.default_rng(seed)
    pair = random_proper_pair(rng, p, 12, monic=True)
    a = a_sequence(pair)
    assert a[0] == 1
    assert np.array_equal(reconstruct_from_a(pair.g, a, 12), leading_matrix(pair, 12))
    za = ps.shift(ps.compose(a, pair.f.truncate(a.order)), 1)
    assert za.truncate(12) == pair.f
