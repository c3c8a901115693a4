"""Truncated formal power series over the prime field Z_p.

A :class:`TruncatedSeries` stores the first ``order`` coefficients
``c_0, ..., c_{order-1}`` as centered residues in ``{-(p//2), ..., p//2}``.
Every operation is exact mod ``p`` and truncation-stable: coefficient ``k`` of
a result only depends on input coefficients of index ``<= k``, so the result
order is the smallest order the inputs can support.
"""
from __future__ import annotations

from math import comb
from typing import Iterable

import numpy as np

__all__ = [
    "TruncatedSeries",
    "check_prime",
    "center",
    "make",
    "zero",
    "one",
    "z",
    "monomial",
    "geometric",
    "pascal_g",
    "pascal_f",
    "catalan",
    "catalan_f",
    "add",
    "negate",
    "sub",
    "mul",
    "scale",
    "power",
    "reciprocal",
    "compose",
    "comp_inverse",
    "derivative",
    "sieve",
    "spread",
    "frobenius_pow",
    "shift",
    "unshift",
    "parse_series",
    "PRESETS",
]


def check_prime(p: int) -> int:
    """Return ``p`` if it is an odd prime, else raise ``ValueError``."""
    if not isinstance(p, (int, np.integer)) or p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p!r}")
    p = int(p)
    d = 3
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"p must be an odd prime, got {p}")
        d += 2
    return p


def center(values, p: int) -> np.ndarray:
    """Reduce integers to centered residues mod ``p``."""
    h = p // 2
    arr = np.asarray(values, dtype=np.int64)
    return (arr + h) % p - h


class TruncatedSeries:
    """Immutable truncated power series mod ``p``.

    Equality compares ``p``, order and coefficients; use :meth:`truncate` to
    compare series of different orders on their common prefix.
    """

    __slots__ = ("p", "_c")

    def __init__(self, coeffs, p: int, *, _trusted: bool = False):
        if _trusted:
            c = coeffs
        else:
            p = check_prime(p)
            c = center(np.array(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                                dtype=np.int64).ravel(), p)
        c.setflags(write=False)
        self.p = p
        self._c = c

    @classmethod
    def _raw(cls, arr: np.ndarray, p: int) -> "TruncatedSeries":
        return cls(center(arr, p), p, _trusted=True)

    @property
    def order(self) -> int:
        return len(self._c)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    def __getitem__(self, k: int) -> int:
        return int(self._c[k])

    def __len__(self) -> int:
        return len(self._c)

    def tolist(self) -> list[int]:
        return [int(x) for x in self._c]

    def valuation(self) -> int:
        """Index of the first nonzero coefficient, or ``order`` if none."""
        nz = np.flatnonzero(self._c)
        return int(nz[0]) if len(nz) else self.order

    def is_zero(self) -> bool:
        return not self._c.any()

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self._c[:order].copy(), self.p, _trusted=True)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.p == other.p and np.array_equal(self._c, other._c)

    def __hash__(self):
        return hash((self.p, self._c.tobytes()))

    def __repr__(self):
        return f"TruncatedSeries({self.tolist()}, p={self.p})"

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return negate(self)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return scale(self, int(other))
        return mul(self, other)

    __rmul__ = __mul__

    def __call__(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        return compose(self, inner)


def make(coeffs: Iterable[int], p: int, order: int) -> TruncatedSeries:
    """Build a series of the given order; missing trailing coefficients are zero."""
    if order < 1:
        raise ValueError("order must be >= 1")
    c = list(coeffs)[:order]
    c += [0] * (order - len(c))
    return TruncatedSeries(c, p)


def _same_p(a: TruncatedSeries, b: TruncatedSeries) -> int:
    if a.p != b.p:
        raise ValueError(f"mismatched primes {a.p} and {b.p}")
    return a.p


def zero(p: int, order: int) -> TruncatedSeries:
    return make([], p, order)


def one(p: int, order: int) -> TruncatedSeries:
    return make([1], p, order)


def z(p: int, order: int) -> TruncatedSeries:
    return make([0, 1], p, order)


def monomial(k: int, p: int, order: int, coeff: int = 1) -> TruncatedSeries:
    c = [0] * order
    if k < order:
        c[k] = coeff
    return make(c, p, order)


def geometric(ratio: int, p: int, order: int) -> TruncatedSeries:
    """1/(1 - ratio*z)."""
    return make([pow(ratio, k, p) for k in range(order)], p, order)


def pascal_g(p: int, order: int) -> TruncatedSeries:
    """1/(1 - z)."""
    return geometric(1, p, order)


def pascal_f(p: int, order: int) -> TruncatedSeries:
    """z/(1 - z)."""
    return make([0] + [1] * (order - 1), p, order)


def catalan(p: int, order: int) -> TruncatedSeries:
    """Catalan generating function C, with C = 1 + z*C^2."""
    return make([comb(2 * k, k) // (k + 1) for k in range(order)], p, order)


def catalan_f(p: int, order: int) -> TruncatedSeries:
    """z*C."""
    c = catalan(p, order).tolist()
    return make([0] + c[:-1], p, order)


PRESETS = {
    "pascal-g": pascal_g,
    "pascal-f": pascal_f,
    "catalan": catalan,
    "catalan-f": catalan_f,
    "one": one,
    "z": z,
    "zero": zero,
}


def parse_series(text: str, p: int, order: int) -> TruncatedSeries:
    """Parse ``coeffs:c0,c1,...`` or a preset name into a series."""
    text = text.strip()
    if text.startswith("coeffs:"):
        body = text[len("coeffs:"):].strip()
        try:
            vals = [int(tok) for tok in body.split(",") if tok.strip()] if body else []
        except ValueError as exc:
            raise ValueError(f"bad coefficient list {body!r}") from exc
        return make(vals, p, order)
    try:
        return PRESETS[text](p, order)
    except KeyError:
        raise ValueError(
            f"unknown series {text!r}; use coeffs:... or one of {sorted(PRESETS)}"
        ) from None


# ring operations


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    p = _same_p(a, b)
    n = min(a.order, b.order)
    return TruncatedSeries._raw(a.coeffs[:n] + b.coeffs[:n], p)


def negate(a: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries._raw(-a.coeffs, a.p)


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return add(a, negate(b))


def scale(a: TruncatedSeries, c: int) -> TruncatedSeries:
    return TruncatedSeries._raw(a.coeffs * (c % a.p), a.p)


def _conv(x: np.ndarray, y: np.ndarray, n: int, p: int) -> np.ndarray:
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    return center(np.convolve(x[:n], y[:n])[:n], p)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    p = _same_p(a, b)
    n = min(a.order, b.order)
    return TruncatedSeries(_conv(a.coeffs, b.coeffs, n, p), p, _trusted=True)


def power(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """a**k by repeated squaring."""
    if k < 0:
        raise ValueError("negative power; use reciprocal")
    result = one(a.p, a.order) if a.order else a
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """1/a; requires a unit constant term."""
    p, n = a.p, a.order
    c = a.tolist()
    if n == 0 or c[0] % p == 0:
        raise ValueError("reciprocal needs a nonzero constant term")
    inv0 = pow(c[0], -1, p)
    b = [inv0] + [0] * (n - 1)
    for k in range(1, n):
        s = sum(c[i] * b[k - i] for i in range(1, k + 1))
        b[k] = (-inv0 * s) % p
    return TruncatedSeries(b, p)


def shift(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """z**k * a; the order grows by k."""
    return TruncatedSeries._raw(np.concatenate([np.zeros(k, dtype=np.int64), a.coeffs]), a.p)


def unshift(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """a / z**k; requires the first k coefficients to vanish."""
    if a.coeffs[:k].any():
        raise ValueError(f"series has support below z^{k}; cannot divide by z^{k}")
    return TruncatedSeries(a.coeffs[k:].copy(), a.p, _trusted=True)


# composition


def _require_no_constant(f: TruncatedSeries) -> None:
    if f.order and f[0] != 0:
        raise ValueError("inner series must satisfy f(0) = 0")


def compose(g: TruncatedSeries, f: TruncatedSeries) -> TruncatedSeries:
    """g(f) by Horner accumulation; requires f(0) = 0."""
    p = _same_p(g, f)
    _require_no_constant(f)
    n = min(g.order, f.order)
    gc, fc = g.coeffs, f.coeffs
    acc = np.zeros(n, dtype=np.int64)
    # terms g_k f^k with k >= n vanish below z^n
    for k in range(n - 1, -1, -1):
        acc = _conv(acc, fc, n, p)
        acc[0] += gc[k]
    return TruncatedSeries._raw(acc, p)


def comp_inverse(f: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse: solve [z^k] f(fbar) = [k == 1] for fbar_k ascending."""
    p, n = f.p, f.order
    _require_no_constant(f)
    if n < 2 or f[1] == 0:
        raise ValueError("compositional inverse needs f'(0) invertible mod p")
    inv1 = pow(f[1], -1, p)
    fbar = np.zeros(n, dtype=np.int64)
    fbar[1] = inv1
    for k in range(2, n):
        # with fbar_k = 0, coefficient k of f(fbar) is f_1 * fbar_k + (known rest)
        m = k + 1
        partial = compose(f.truncate(m), TruncatedSeries._raw(fbar[:m], p))
        fbar[k] = (-partial[k] * inv1) % p
    return TruncatedSeries._raw(fbar, p)


def derivative(h: TruncatedSeries) -> TruncatedSeries:
    """d/dz; the order drops by one."""
    k = np.arange(1, h.order, dtype=np.int64)
    return TruncatedSeries._raw(k * h.coeffs[1:], h.p)


def sieve(h: TruncatedSeries) -> TruncatedSeries:
    """Sum_k h_{pk+p-1} z^k.

    This is ``-(d^{p-1}/dz^{p-1} h)(z^{1/p})`` mod p. The sign is folded in so
    that the result is directly the generator of a diagonal block.
    """
    p = h.p
    return TruncatedSeries(h.coeffs[p - 1::p].copy(), p, _trusted=True)


def spread(g: TruncatedSeries, m: int, order: int | None = None) -> TruncatedSeries:
    """g(z**m), truncated to ``order`` (default: g's order)."""
    n = g.order if order is None else order
    out = np.zeros(n, dtype=np.int64)
    idx = np.arange(0, n, m)
    take = min(len(idx), g.order)
    out[idx[:take]] = g.coeffs[:take]
    return TruncatedSeries(out, g.p, _trusted=True)


def frobenius_pow(g: TruncatedSeries, f: TruncatedSeries, k: int) -> TruncatedSeries:
    """g(f)**(p**k), computed as g(z**(p**k)) composed with f.

    Mod p this also equals g(f**(p**k)); no power is ever expanded.
    """
    _same_p(g, f)
    _require_no_constant(f)
    n = min(g.order, f.order)
    return compose(spread(g.truncate(n), g.p ** k), f.truncate(n))
