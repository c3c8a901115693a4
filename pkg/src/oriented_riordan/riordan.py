"""Riordan pairs over Z_p, their leading matrices and group structure."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import series as ps
from .series import TruncatedSeries, center

__all__ = [
    "RiordanPair",
    "column_table",
    "leading_matrix",
    "ftrm_apply",
    "multiply",
    "inverse",
    "identity",
    "a_sequence",
    "reconstruct_from_a",
    "f_from_a_sequence",
    "pascal",
    "catalan_pair",
    "bell_pair",
]


@dataclass(frozen=True)
class RiordanPair:
    """A generating pair (g, f) with f(0) = 0."""

    g: TruncatedSeries
    f: TruncatedSeries

    def __post_init__(self):
        if self.g.p != self.f.p:
            raise ValueError(f"mismatched primes {self.g.p} and {self.f.p}")
        if self.f.order and self.f[0] != 0:
            raise ValueError("f(0) must be 0 for a Riordan pair")

    @property
    def p(self) -> int:
        return self.g.p

    @property
    def order(self) -> int:
        """Common truncation order of g and f."""
        return min(self.g.order, self.f.order)

    @property
    def proper(self) -> bool:
        return self.g.order > 0 and self.g[0] != 0 and self.f.order > 1 and self.f[1] != 0

    def truncate(self, order: int) -> "RiordanPair":
        return RiordanPair(self.g.truncate(order), self.f.truncate(order))

    def __repr__(self):
        return f"RiordanPair(g={self.g.tolist()}, f={self.f.tolist()}, p={self.p})"


def identity(p: int, order: int) -> RiordanPair:
    return RiordanPair(ps.one(p, order), ps.z(p, order))


def pascal(p: int, order: int) -> RiordanPair:
    return RiordanPair(ps.pascal_g(p, order), ps.pascal_f(p, order))


def catalan_pair(p: int, order: int) -> RiordanPair:
    return RiordanPair(ps.catalan(p, order), ps.catalan_f(p, order))


def bell_pair(g: TruncatedSeries) -> RiordanPair:
    """(g, z*g), truncated to g's order."""
    return RiordanPair(g, ps.shift(g, 1).truncate(g.order))


def column_table(g: TruncatedSeries, f: TruncatedSeries, rows: int, cols: int) -> np.ndarray:
    """Array ``T[i, j] = [z^i] g f^j`` for ``i < rows``, ``j < cols``.

    Only ``rows`` coefficients of g and f are read.
    """
    p = g.p
    if g.order < rows or f.order < rows:
        raise ValueError(
            f"truncation too small: need order >= {rows}, have g:{g.order} f:{f.order}"
        )
    out = np.zeros((rows, cols), dtype=np.int64)
    if rows == 0:
        return out
    fc = f.coeffs[:rows]
    col = g.coeffs[:rows].copy()
    for j in range(cols):
        out[:, j] = col
        if j + 1 < cols:
            col = center(np.convolve(col, fc)[:rows], p)
    return out


def leading_matrix(pair: RiordanPair, n: int, cols: int | None = None) -> np.ndarray:
    """The leading ``n x n`` (or ``n x cols``) block of the Riordan matrix (g, f)."""
    return column_table(pair.g, pair.f, n, n if cols is None else cols)


def ftrm_apply(pair: RiordanPair, phi: TruncatedSeries) -> TruncatedSeries:
    """(g, f) acting on the column vector of phi: g * phi(f)."""
    return ps.mul(pair.g, ps.compose(phi, pair.f))


def multiply(a: RiordanPair, b: RiordanPair) -> RiordanPair:
    """(g, f) * (h, l) = (g h(f), l(f))."""
    if a.p != b.p:
        raise ValueError(f"mismatched primes {a.p} and {b.p}")
    return RiordanPair(ps.mul(a.g, ps.compose(b.g, a.f)), ps.compose(b.f, a.f))


def inverse(pair: RiordanPair) -> RiordanPair:
    """(1/g(fbar), fbar); only proper pairs are invertible."""
    if not pair.proper:
        raise ValueError("only proper Riordan pairs are invertible")
    fbar = ps.comp_inverse(pair.f)
    return RiordanPair(ps.reciprocal(ps.compose(pair.g, fbar)), fbar)


def a_sequence(pair: RiordanPair, length: int | None = None) -> TruncatedSeries:
    """Generating function A = z / fbar of the A-sequence.

    Requires f'(0) = 1. The default length is the pair's truncation minus one,
    which is everything the row recurrence of an order-n matrix can use.
    """
    f = pair.f
    if f.order < 2 or f[1] != 1:
        raise ValueError("A-sequence APIs require f'(0) = 1")
    fbar = ps.comp_inverse(f)
    a = ps.reciprocal(ps.unshift(fbar, 1))
    if length is None:
        return a
    if length > a.order:
        raise ValueError(f"A-sequence known only to length {a.order}")
    return a.truncate(length)


def f_from_a_sequence(a: TruncatedSeries, order: int) -> TruncatedSeries:
    """Solve f = z A(f) coefficientwise; inverse of :func:`a_sequence`."""
    p = a.p
    if a.order == 0 or a[0] == 0:
        raise ValueError("A-sequence needs a_0 != 0")
    if order > a.order + 1:
        raise ValueError(f"A of length {a.order} determines f only to order {a.order + 1}")
    f = ps.zero(p, order)
    for k in range(1, order):
        # [z^k] f = [z^{k-1}] A(f) only needs f_1..f_{k-1}
        af = ps.compose(a.truncate(k), f.truncate(k))
        c = f.tolist()
        c[k] = af[k - 1]
        f = ps.make(c, p, order)
    return f


def reconstruct_from_a(g_column: TruncatedSeries, a: TruncatedSeries, n: int) -> np.ndarray:
    """Rebuild the leading matrix from column 0 and the A-sequence recurrence."""
    p = g_column.p
    if a.order == 0:
        raise ValueError("empty A-sequence")
    if a[0] == 0:
        raise ValueError("A-sequence needs a_0 != 0")
    if g_column.order < n:
        raise ValueError(f"column 0 needs {n} coefficients, have {g_column.order}")
    if n > 1 and a.order < n - 1:
        raise ValueError(f"A-sequence needs {n - 1} terms for order {n}")
    av = a.coeffs
    m = np.zeros((n, n), dtype=np.int64)
    m[:, 0] = g_column.coeffs[:n]
    for i in range(n - 1):
        for j in range(i + 1):
            # l[i+1, j+1] = sum_k a_k l[i, j+k]
            m[i + 1, j + 1] = int(np.dot(av[: i - j + 1], m[i, j : i + 1])) % p
    return center(m, p)
