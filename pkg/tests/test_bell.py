import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oriented_riordan import series as ps
from oriented_riordan.bell import (
    admissible_row_order,
    bell_from_a_sequence,
    i1_by_a_pattern,
    i1_by_definition,
    i1_by_derivative,
    i1_report,
    is_bell,
    last_row_formula,
    v3_is_null,
    visible_window,
)
from oriented_riordan.graph import skew_from_pair
from oriented_riordan.riordan import RiordanPair, a_sequence, bell_pair, catalan_pair, pascal

from helpers import i1_bell_pair, random_bell_pair
from oracles import lucas_binom

seeds = st.integers(0, 2**32 - 1)


def test_is_bell():
    assert is_bell(pascal(3, 10))
    assert is_bell(catalan_pair(3, 10))
    assert not is_bell(RiordanPair(ps.one(3, 6), ps.monomial(2, 3, 6)))


def test_v3_null_examples():
    assert v3_is_null(pascal(3, 13), 13)
    assert v3_is_null(catalan_pair(3, 13), 13)
    assert v3_is_null(pascal(3, 3), 3)
    with pytest.raises(ValueError):
        v3_is_null(RiordanPair(ps.one(3, 6), ps.monomial(2, 3, 6)), 6)


@settings(max_examples=500, deadline=None)
@given(seeds, st.integers(3, 30), st.sampled_from((3, 5, 7)))
def test_last_part_is_null_for_bell_pairs(seed, n, p):
    rng = np.random.default_rng(seed)
    g = [int(x) for x in rng.integers(-(p // 2), p // 2 + 1, n)]
    g[0] = int(rng.choice([r for r in range(1, p)]))
    assert v3_is_null(bell_pair(ps.make(g, p, n)), n)


@pytest.mark.parametrize("n", [7, 13, 19])
def test_pascal_is_i1(n):
    pair = pascal(3, n)
    assert i1_by_definition(pair, n)
    assert i1_by_derivative(pair, n).holds
    assert i1_by_a_pattern(pair, n).holds


def test_pascal_signs():
    assert i1_by_derivative(pascal(3, 20)).sign == 1
    assert i1_by_a_pattern(pascal(3, 20)).sign == 1


def test_catalan_is_not_i1():
    rep = i1_report(catalan_pair(3, 13), 13)
    assert not rep.by_definition and not rep.by_derivative and not rep.by_a_pattern
    assert rep.consistent
    assert rep.a_prefix == (1,) * 12
    d = json.loads(rep.to_json())
    assert d["consistent"] is True and d["a_prefix"][:3] == [1, 1, 1]


def test_catalan_derivative_mismatch():
    # C' against +-C^2 differs already at z^1: C' = 1 + 4z + ..., C^2 = 1 + 2z + ...
    cat = ps.catalan(3, 10)
    d, sq = ps.derivative(cat), ps.mul(cat, cat)
    assert d[1] != sq[1] and d[0] != -sq[0]


def test_identity_like_pair_fails_derivative():
    pair = bell_pair(ps.one(3, 10))
    assert not i1_by_derivative(pair).holds


def test_improper_pair_is_rejected():
    with pytest.raises(ValueError):
        i1_by_definition(RiordanPair(ps.zero(3, 8), ps.zero(3, 8)), 8)
    with pytest.raises(ValueError):
        i1_by_definition(pascal(5, 8), 8)
    with pytest.raises(ValueError):
        i1_by_a_pattern(bell_pair(ps.make([-1, 1], 3, 8)))


def test_minus_pattern_pair():
    pair = bell_from_a_sequence(ps.make([1, -1], 3, 20))
    assert pair.g == ps.geometric(-1, 3, 20)
    assert a_sequence(pair).tolist()[:4] == [1, -1, 0, 0]
    assert i1_by_a_pattern(pair).sign == -1
    assert i1_by_derivative(pair).sign == -1
    assert i1_by_definition(pair, 20)
    assert last_row_formula(pair, 4) == [1, 1, 1, 0]


def test_visible_window():
    assert [visible_window(n) for n in (4, 5, 6, 7, 8)] == [-1, 2, 2, 2, 5]


def test_order_guard():
    with pytest.raises(ValueError):
        i1_by_derivative(pascal(3, 10), 12)


# exhaustive equivalence over all g with g(0) = 1; counts frozen from a sweep to n = 11
I1_COUNTS = {3: 3, 4: 3, 5: 6, 6: 18, 7: 18, 8: 18, 9: 54}


@pytest.mark.parametrize("n", sorted(I1_COUNTS))
def test_exhaustive_equivalence(n):
    hits = 0
    for rest in itertools.product((-1, 0, 1), repeat=n - 2):
        pair = bell_pair(ps.make([1, *rest], 3, n - 1))
        rep = i1_report(pair, n)
        assert rep.consistent, (rep, pair)
        hits += rep.by_definition
    assert hits == I1_COUNTS[n]


@settings(max_examples=150, deadline=None)
@given(seeds, st.integers(6, 40))
def test_random_equivalence(seed, n):
    pair = random_bell_pair(np.random.default_rng(seed), n - 1)
    assert i1_report(pair, n).consistent


@settings(max_examples=40, deadline=None)
@given(seeds, st.sampled_from((1, -1)), st.integers(6, 40))
def test_constructed_i1_pairs(seed, sign, n):
    pair = i1_bell_pair(np.random.default_rng(seed), sign, n)
    rep = i1_report(pair, n)
    assert rep.by_definition and rep.consistent
    assert rep.derivative_sign == sign == rep.pattern_sign


@settings(max_examples=20, deadline=None)
@given(seeds, st.sampled_from((1, -1)))
def test_spread_identity(seed, sign):
    pair = i1_bell_pair(np.random.default_rng(seed), sign, 45)
    g = pair.g.tolist()
    # g' = s g^2 gives g'' = 2 s^2 g^3 = -g(z^3), so g_{3j+2} = g_j for either sign
    for j in range((len(g) - 3) // 3 + 1):
        assert (g[3 * j + 2] - g[j]) % 3 == 0


# last rows


def test_admissible_orders():
    assert admissible_row_order(4) == ("3^i+1", 1)
    assert admissible_row_order(28) == ("3^i+1", 3)
    assert admissible_row_order(3) == ("2*3^i+1", 0)
    assert admissible_row_order(19) == ("2*3^i+1", 2)
    assert admissible_row_order(2) is None
    assert admissible_row_order(13) is None


def test_pascal_rows():
    pair = pascal(3, 170)
    assert last_row_formula(pair, 4) == [1, -1, 1, 0]
    row19 = last_row_formula(pair, 19)
    assert row19 == [lucas_binom(17, k, 3) for k in range(18)] + [0]
    for n in (10, 28, 82, 3, 7, 55, 163):
        assert last_row_formula(pair, n) == skew_from_pair(pair, n).row(n)
    with pytest.raises(ValueError):
        last_row_formula(pair, 13)


def test_row_formula_needs_sign():
    with pytest.raises(ValueError):
        last_row_formula(catalan_pair(3, 20), 10)


@pytest.mark.parametrize("sign", [1, -1])
def test_constructed_rows(sign):
    rng = np.random.default_rng(100 + sign)
    for _ in range(10):
        pair = i1_bell_pair(rng, sign, 170)
        for n in (4, 10, 28, 82, 3, 7, 19, 55, 163):
            last_row_formula(pair, n)
