"""Random pair generators and hypothesis strategies shared by the tests."""
from __future__ import annotations

import numpy as np
from hypothesis import strategies as st

from oriented_riordan import series as ps
from oriented_riordan.riordan import RiordanPair, bell_pair, f_from_a_sequence

PRIMES = (3, 5, 7)


def residues(p):
    return st.integers(min_value=-(p // 2), max_value=p // 2)


@st.composite
def series_st(draw, p=None, min_order=1, max_order=12):
    p = draw(st.sampled_from(PRIMES)) if p is None else p
    n = draw(st.integers(min_order, max_order))
    cs = draw(st.lists(residues(p), min_size=n, max_size=n))
    return ps.make(cs, p, n)


def rand_coeffs(rng, p, n):
    return [int(x) for x in rng.integers(-(p // 2), p // 2 + 1, size=n)]


def rand_unit(rng, p):
    return int(rng.choice([r for r in range(-(p // 2), p // 2 + 1) if r]))


def random_proper_pair(rng, p, order, monic=False):
    g = rand_coeffs(rng, p, order)
    g[0] = rand_unit(rng, p)
    f = [0] + rand_coeffs(rng, p, order - 1)
    f[1] = 1 if monic else rand_unit(rng, p)
    return RiordanPair(ps.make(g, p, order), ps.make(f, p, order))


def random_pair(rng, p, order):
    """Any pair with f(0) = 0, proper or not."""
    g = rand_coeffs(rng, p, order)
    f = [0] + rand_coeffs(rng, p, order - 1)
    return RiordanPair(ps.make(g, p, order), ps.make(f, p, order))


def pair_with_gap(rng, p, order, gap):
    """Random g with f built from A = (1, 0 x gap, a, ...) where a != 0."""
    if order < gap + 3:
        raise ValueError("order too small to see the gap")
    a = [1] + [0] * gap + [rand_unit(rng, p)] + rand_coeffs(rng, p, order)
    a_series = ps.make(a, p, order)
    f = f_from_a_sequence(a_series, order)
    g = rand_coeffs(rng, p, order)
    g[0] = rand_unit(rng, p)
    return RiordanPair(ps.make(g, p, order), f)


def random_bell_pair(rng, order, monic=True):
    g = rand_coeffs(rng, 3, order)
    g[0] = 1 if monic else rand_unit(rng, 3)
    return bell_pair(ps.make(g, 3, order))


def i1_bell_pair(rng, sign, order):
    """Bell pair whose A-sequence follows (1, s, 0, x, s x, 0, ...)."""
    from oriented_riordan.bell import bell_from_a_sequence

    a = []
    for t in range(0, order + 3, 3):
        x = 1 if t == 0 else int(rng.integers(-1, 2))
        a += [x, sign * x, 0]
    return bell_from_a_sequence(ps.make(a[:order], 3, order), order)


def as_array(rows):
    return np.asarray(rows, dtype=np.int64)
