"""Residue-class decomposition, cognate pairs and fractal windows.

Vertices split into parts ``V_i = {j : j = i mod p}`` for i = 1..p. Listing
the parts one after another gives a permutation under which the skew matrix
becomes a p x p block matrix: diagonal blocks X_i (induced subgraphs) and
off-diagonal blocks B_ij above the diagonal with -B_ij^T below. Each block
has a generating-function formula built from :func:`series.sieve`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import series as ps
from .graph import (
    SkewAdjacency,
    digraph_isomorphic,
    graph_from_skew,
    induced_skew,
    skew_from_pair,
    MAX_ISO_ORDER,
)
from .riordan import RiordanPair, a_sequence, leading_matrix
from .series import center

__all__ = [
    "DecompositionMismatch",
    "Decomposition",
    "parts",
    "part_size",
    "permutation",
    "block_generators",
    "formula_blocks",
    "assemble_blocks",
    "decompose",
    "a_gap",
    "cognate_exponent",
    "cognate_set",
    "is_cognate",
    "check_fractal",
    "fractal_windows",
    "fractal_parameters",
    "PartPredicates",
    "part_predicates",
]


class DecompositionMismatch(AssertionError):
    """Formula-built and directly extracted blocks disagree."""


def parts(n: int, p: int) -> list[list[int]]:
    return [list(range(i, n + 1, p)) for i in range(1, p + 1)]


def part_size(n: int, p: int, i: int) -> int:
    """|V_i| = floor((n - i)/p) + 1 (zero when i > n)."""
    return (n - i) // p + 1 if i <= n else 0


def permutation(n: int, p: int) -> list[int]:
    """Vertex order V_1, V_2, ..., V_p (row k of P is e_{perm[k]})."""
    return [v for part in parts(n, p) for v in part]


def assemble_blocks(vparts, diag, off) -> np.ndarray:
    """Block matrix with X_i on the diagonal, B_ij above and -B_ij^T below."""
    p = len(vparts)
    offs = np.cumsum([0] + [len(v) for v in vparts])
    m = np.zeros((offs[-1], offs[-1]), dtype=np.int64)
    for i in range(p):
        a, b = offs[i], offs[i + 1]
        m[a:b, a:b] = diag[i].matrix
        for j in range(i + 1, p):
            c, d = offs[j], offs[j + 1]
            blk = off[(i + 1, j + 1)]
            m[a:b, c:d] = blk
            m[c:d, a:b] = -blk.T
    return m


@dataclass
class Decomposition:
    p: int
    n: int
    parts: list[list[int]]
    permutation: list[int]
    diag_blocks: list[SkewAdjacency]
    off_blocks: dict[tuple[int, int], np.ndarray]
    diag_generators: dict[int, RiordanPair]
    off_generators: dict[tuple[int, int], tuple[RiordanPair, RiordanPair]]
    formula_matches_direct: bool
    mismatches: list[str] = field(default_factory=list)

    def block_matrix(self) -> np.ndarray:
        """Assemble [[X_1, B_12, ...], [-B_12^T, X_2, ...], ...]."""
        return assemble_blocks(self.parts, self.diag_blocks, self.off_blocks)

    def reassemble(self) -> np.ndarray:
        """Undo the permutation: P^T (block matrix) P."""
        inv = np.argsort(np.asarray(self.permutation) - 1)
        bm = self.block_matrix()
        return bm[np.ix_(inv, inv)]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "parts": self.parts,
            "permutation": self.permutation,
            "block_dims": {
                f"{i},{j}": [len(self.parts[i - 1]), len(self.parts[j - 1])]
                for i in range(1, self.p + 1)
                for j in range(i, self.p + 1)
            },
            "diag_generators": {
                str(i): {"g": pr.g.tolist(), "f": pr.f.tolist()}
                for i, pr in self.diag_generators.items()
            },
            "off_generators": {
                f"{i},{j}": {
                    "L": {"g": lo.g.tolist(), "f": lo.f.tolist()},
                    "U": {"g": up.g.tolist(), "f": up.f.tolist()},
                }
                for (i, j), (lo, up) in self.off_generators.items()
            },
            "formula_matches_direct": self.formula_matches_direct,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def block_generators(pair: RiordanPair, i: int, j: int) -> tuple[RiordanPair, RiordanPair, RiordanPair]:
    """Generating pairs for X_i and for the two halves of B_ij (1 <= i <= j <= p).

    diag = (sieve(g f^(i-1) / z^(i-1)), f)
    L    = (z * sieve(g f^(j-1) / z^(i-1)), f)
    U    = (sieve(z^(p+1-j) g f^(i-1)), f)

    and B_ij is the leading l_i x l_j block of L - U^T.
    """
    p = pair.p
    if not 1 <= i <= j <= p:
        raise ValueError(f"need 1 <= i <= j <= {p}, got ({i}, {j})")
    g, f = pair.g, pair.f
    n = pair.order
    g, f = g.truncate(n), f.truncate(n)
    fi = ps.mul(g, ps.power(f, i - 1))
    fj = fi if j == i else ps.mul(g, ps.power(f, j - 1))
    # g f^(k-1) has valuation >= k-1 since f(0) = 0
    diag = RiordanPair(ps.sieve(ps.unshift(fi, i - 1)), f)
    low = RiordanPair(ps.shift(ps.sieve(ps.unshift(fj, i - 1)), 1), f)
    up = RiordanPair(ps.sieve(ps.shift(fi, p + 1 - j)), f)
    return diag, low, up


def _rect(pair: RiordanPair, rows: int, cols: int) -> np.ndarray:
    if rows == 0 or cols == 0:
        return np.zeros((rows, cols), dtype=np.int64)
    need = max(rows, 1)
    g, f = pair.g, pair.f
    # zero-extend: coefficients past the known order never reach these rows
    if g.order < need or f.order < need:
        raise ValueError("generator truncation too small for block")
    return leading_matrix(pair, rows, cols)


def formula_blocks(pair: RiordanPair, n: int):
    """X_i and B_ij computed purely from the generating-function formulas."""
    p = pair.p
    sizes = [part_size(n, p, i) for i in range(1, p + 1)]
    diag, offs, dgen, ogen = [], {}, {}, {}
    for i in range(1, p + 1):
        li = sizes[i - 1]
        for j in range(i, p + 1):
            lj = sizes[j - 1]
            d, lo, up = block_generators(pair, i, j)
            if j == i:
                dgen[i] = d
                if li:
                    diag.append(skew_from_pair(d, li))
                else:
                    diag.append(SkewAdjacency(np.zeros((0, 0), dtype=np.int64), p, check=False))
                continue
            ogen[(i, j)] = (lo, up)
            lm = _rect(lo, li, lj)
            um = _rect(up, lj, li)
            offs[(i, j)] = center(lm - um.T, p)
    return diag, offs, dgen, ogen


def decompose(pair: RiordanPair, n: int, strict: bool = True) -> Decomposition:
    """Permute into residue-class blocks and check them against the formulas.

    Blocks are extracted directly from the skew matrix and rebuilt from
    :func:`block_generators`; with ``strict`` any disagreement raises
    :class:`DecompositionMismatch`.
    """
    p = pair.p
    if pair.order < n:
        raise ValueError(f"pair truncation {pair.order} < n = {n}")
    pair = pair.truncate(n)
    s = skew_from_pair(pair, n)
    vparts = parts(n, p)
    perm = permutation(n, p)
    direct_diag = [
        induced_skew(s, v) if v else SkewAdjacency(np.zeros((0, 0), dtype=np.int64), p, check=False)
        for v in vparts
    ]
    direct_off = {}
    for i in range(p):
        for j in range(i + 1, p):
            ri = np.asarray(vparts[i], dtype=np.int64) - 1
            cj = np.asarray(vparts[j], dtype=np.int64) - 1
            direct_off[(i + 1, j + 1)] = s.matrix[np.ix_(ri, cj)].copy()
    fdiag, foff, dgen, ogen = formula_blocks(pair, n)
    bad = []
    for i in range(p):
        if not np.array_equal(direct_diag[i].matrix, fdiag[i].matrix):
            bad.append(f"X_{i + 1}")
    for key, blk in direct_off.items():
        if not np.array_equal(blk, foff[key]):
            bad.append(f"B_{key[0]},{key[1]}")
    if bad and strict:
        raise DecompositionMismatch(f"formula blocks disagree with the matrix: {', '.join(bad)} for {pair!r}")
    return Decomposition(
        p=p,
        n=n,
        parts=vparts,
        permutation=perm,
        diag_blocks=direct_diag,
        off_blocks=direct_off,
        diag_generators=dgen,
        off_generators=ogen,
        formula_matches_direct=not bad,
        mismatches=bad,
    )


# cognate pairs and fractal windows


def a_gap(pair: RiordanPair) -> int:
    """Number of zeros between a_0 = 1 and the next nonzero A-sequence term.

    Rejects pairs with f'(0) != 1 and pairs with f = z up to truncation.
    """
    a = a_sequence(pair)
    nz = np.flatnonzero(a.coeffs[1:])
    if not len(nz):
        raise ValueError("f = z (up to truncation); the cognate and fractal theorems need f != z")
    return int(nz[0])


def cognate_exponent(d: int, gap: int, p: int, strict: bool = False) -> int:
    """Smallest s with floor((d-1)/p^s) <= gap (or p*floor(...) <= gap if strict)."""
    if d < 1:
        raise ValueError("vertices must differ")
    s = 0
    while True:
        q = (d - 1) // p**s
        if (p * q if strict else q) <= gap:
            return s
        s += 1


def is_cognate(s: SkewAdjacency, ij: tuple[int, int], kt: tuple[int, int]) -> bool:
    """Definition check: same offset, and k -> t carries the arc i -> j (weight included)."""
    (i, j), (k, t) = ij, kt
    return abs(i - j) == abs(k - t) and s.entry(k, t) == s.entry(i, j)


def cognate_set(pair: RiordanPair, n: int, i: int, j: int, strict: bool = False) -> set[tuple[int, int]]:
    """Pairs (i + m p^s, j + m p^s) inside [n] for the smallest admissible s.

    Every returned pair is re-checked against the matrix with :func:`is_cognate`.
    """
    if i == j:
        raise ValueError("cognate pairs need i != j")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("vertex out of range")
    p = pair.p
    gap = a_gap(pair)
    step = p ** cognate_exponent(abs(i - j), gap, p, strict)
    lo = min(i, j)
    hi = max(i, j)
    ms = range(-((lo - 1) // step), (n - hi) // step + 1)
    out = {(i + m * step, j + m * step) for m in ms}
    s = skew_from_pair(pair, n)
    for kt in out:
        if not is_cognate(s, (i, j), kt):
            raise AssertionError(f"cognate pair {kt} of {(i, j)} fails the definition")
    return out


def fractal_windows(p: int, s: int, k: int, alpha: int) -> dict[str, tuple[range, range]]:
    """The two window pairs compared by the fractal property.

    closed:    {1..(k+1)p^s+1}  vs  {a(k+1)p^s+1 .. (a+1)(k+1)p^s+1}
    half_open: {1..(k+1)p^s}    vs  {a(k+1)p^s+1 .. (a+1)(k+1)p^s}
    """
    w = (k + 1) * p**s
    return {
        "closed": (range(1, w + 2), range(alpha * w + 1, (alpha + 1) * w + 2)),
        "half_open": (range(1, w + 1), range(alpha * w + 1, (alpha + 1) * w + 1)),
    }


def fractal_parameters(p: int, n: int, gap: int) -> Iterator[tuple[int, int, int]]:
    """Every (s, k, alpha) with 0 <= k <= gap whose half-open windows fit in order n."""
    s = 0
    while p**s < n:
        for k in range(gap + 1):
            alpha = 1
            while fractal_windows(p, s, k, alpha)["half_open"][1][-1] <= n:
                yield s, k, alpha
                alpha += 1
        s += 1


def check_fractal(pair: RiordanPair, n: int, s: int, k: int, alpha: int, mode: str = "labeled") -> bool:
    """Compare the fractal windows of the order-n graph.

    ``mode="labeled"`` compares induced submatrices entrywise; ``"isomorphic"``
    only asks for digraph isomorphism (windows of order <= 8). The closed
    window is skipped when it runs past n; the half-open one must fit.
    """
    if alpha < 1 or s < 0:
        raise ValueError("need alpha >= 1 and s >= 0")
    gap = a_gap(pair.truncate(min(pair.order, max(n, 2))))
    if not 0 <= k <= gap:
        raise ValueError(f"k must lie in 0..{gap} for this A-sequence")
    wins = fractal_windows(pair.p, s, k, alpha)
    if wins["half_open"][1][-1] > n:
        raise ValueError(f"window {wins['half_open'][1]} exceeds order {n}")
    sk = skew_from_pair(pair, n)
    ok = True
    for left, right in wins.values():
        if right[-1] > n:
            continue
        a, b = induced_skew(sk, list(left)), induced_skew(sk, list(right))
        if mode == "labeled":
            ok &= a == b
        elif mode == "isomorphic":
            if a.n > MAX_ISO_ORDER:
                raise ValueError(f"isomorphic mode limited to windows of order <= {MAX_ISO_ORDER}")
            ok &= digraph_isomorphic(graph_from_skew(a), graph_from_skew(b))
        else:
            raise ValueError(f"unknown mode {mode!r}")
    return bool(ok)


# coefficient predicates on the parts


@dataclass
class PartPredicates:
    """Coefficient-level verdicts and their direct matrix counterparts.

    Keys: ``null[i]``, ``isomorphic[(i, j)]`` and ``no_arcs[(i, j)]``, each
    mapping to ``(by_coefficients, by_matrix)``.
    """

    n: int
    p: int
    null: dict[int, tuple[bool, bool]]
    same_parts: dict[tuple[int, int], tuple[bool, bool]]
    isomorphic: dict[tuple[int, int], bool | None]
    no_arcs: dict[tuple[int, int], tuple[bool, bool]]
    multipartite: tuple[bool, bool]

    @property
    def consistent(self) -> bool:
        pairs = list(self.null.values()) + list(self.no_arcs.values()) + [self.multipartite]
        if self.n % self.p == 0:
            pairs += list(self.same_parts.values())
        return all(a == b for a, b in pairs)


def part_predicates(pair: RiordanPair, n: int) -> PartPredicates:
    """Evaluate the part predicates from coefficients of g f^(k-1).

    Only coefficients of index <= n-2 are visible in an order-n graph, so
    every "for all m >= 1" ranges over that window. The parts comparison is
    labelled equality of X_i and X_j; it is the exact counterpart of the
    coefficient test when p divides n, and is reported on the common leading
    window otherwise. Isomorphism of the parts is reported separately for
    parts of order <= 8.
    """
    p = pair.p
    if n < max(p, 3):
        raise ValueError(f"need n >= {max(p, 3)} so that every part is nonempty")
    pair = pair.truncate(n - 1)
    s = skew_from_pair(pair, n)
    g, f = pair.g, pair.f
    top = n - 2
    col = [ps.mul(g, ps.power(f, k)) for k in range(p)]  # g f^k

    def coeffs(series, idxs):
        return [series[t] for t in idxs if 0 <= t <= top]

    vparts = parts(n, p)
    xs = [induced_skew(s, v) if v else None for v in vparts]
    null, same, iso, no_arcs = {}, {}, {}, {}
    for i in range(1, p + 1):
        idx = [p * m + i - 2 for m in range(1, n)]
        by_c = not any(coeffs(col[i - 1], idx))
        by_m = xs[i - 1] is None or xs[i - 1].is_null()
        null[i] = (by_c, by_m)
    for i in range(1, p + 1):
        for j in range(i + 1, p + 1):
            ci = coeffs(col[i - 1], [p * m + i - 2 for m in range(1, n)])
            cj = coeffs(col[j - 1], [p * m + j - 2 for m in range(1, n)])
            w = min(len(ci), len(cj))
            by_c = ci[:w] == cj[:w]
            xi, xj = xs[i - 1], xs[j - 1]
            if xi is None or xj is None:
                by_m = True
            else:
                c = min(xi.n, xj.n)
                by_m = bool(np.array_equal(xi.matrix[:c, :c], xj.matrix[:c, :c]))
            same[(i, j)] = (by_c, by_m)
            if xi is not None and xj is not None and xi.n == xj.n and xi.n <= MAX_ISO_ORDER:
                iso[(i, j)] = digraph_isomorphic(graph_from_skew(xi), graph_from_skew(xj))
            else:
                iso[(i, j)] = None
            low = coeffs(col[j - 1], [p * m + i - 2 for m in range(1, n)])
            upp = coeffs(col[i - 1], [p * (m - 1) + j - 2 for m in range(1, n + 1)])
            by_c = not any(low) and not any(upp)
            ri = np.asarray(vparts[i - 1], dtype=np.int64) - 1
            cj = np.asarray(vparts[j - 1], dtype=np.int64) - 1
            by_m = not s.matrix[np.ix_(ri, cj)].any()
            no_arcs[(i, j)] = (by_c, by_m)
    mp = (all(v[0] for v in null.values()), all(v[1] for v in null.values()))
    return PartPredicates(n, p, null, same, iso, no_arcs, mp)
