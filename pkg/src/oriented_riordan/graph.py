"""Skew-adjacency matrices and oriented (p-)Riordan graphs.

Vertices are labelled 1..n. For a pair (g, f) the skew matrix is
``(zg, f)_n - (zg, f)_n^T`` mod p, so below the diagonal
``s[i, j] = [z^(i-2)] g f^(j-1)``.
"""
from __future__ import annotations

import itertools
import json
import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .riordan import RiordanPair, column_table
from .series import TruncatedSeries, check_prime

__all__ = [
    "SkewAdjacency",
    "OrientedGraph",
    "BudgetExceeded",
    "skew_from_pair",
    "skew_from_coeffs",
    "graph_from_skew",
    "skew_from_graph",
    "count_formula",
    "default_budget",
    "canonical_space",
    "enumerate_all",
    "induced_skew",
    "relabel",
    "digraph_isomorphic",
    "format_text",
    "to_json",
    "from_json",
    "to_dot",
    "from_dot",
]

DEFAULT_BUDGET = 10**6
MAX_ISO_ORDER = 8


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed the configured budget."""


class SkewAdjacency:
    """Antisymmetric n x n matrix of centered residues mod p.

    ``matrix`` is the read-only 0-based array; :meth:`entry` and :meth:`row`
    take 1-based vertex labels.
    """

    __slots__ = ("p", "matrix", "_key")

    def __init__(self, matrix, p: int, *, check: bool = True):
        m = np.array(matrix, dtype=np.int64)
        if check:
            p = check_prime(p)
            if m.ndim != 2 or m.shape[0] != m.shape[1]:
                raise ValueError("skew matrix must be square")
            if not np.array_equal(m, -m.T):
                raise ValueError("matrix is not antisymmetric with zero diagonal")
            h = p // 2
            if m.size and np.abs(m).max() > h:
                raise ValueError(f"entries must lie in [-{h}, {h}]")
        m.setflags(write=False)
        self.p = p
        self.matrix = m
        self._key = None

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def entry(self, i: int, j: int) -> int:
        return int(self.matrix[i - 1, j - 1])

    def row(self, i: int) -> list[int]:
        return [int(x) for x in self.matrix[i - 1]]

    def is_null(self) -> bool:
        return not self.matrix.any()

    def key(self) -> bytes:
        if self._key is None:
            self._key = self.matrix.astype(np.int8).tobytes()
        return self._key

    def __eq__(self, other):
        if not isinstance(other, SkewAdjacency):
            return NotImplemented
        return self.p == other.p and self.n == other.n and self.key() == other.key()

    def __hash__(self):
        return hash((self.p, self.n, self.key()))

    def __repr__(self):
        return f"SkewAdjacency(n={self.n}, p={self.p})"


@dataclass(frozen=True)
class OrientedGraph:
    """Vertices 1..n and weighted arcs ``(tail, head, weight)``, weight >= 1."""

    n: int
    arcs: frozenset

    def __post_init__(self):
        seen = set()
        for u, v, w in self.arcs:
            if not (1 <= u <= self.n and 1 <= v <= self.n) or u == v:
                raise ValueError(f"bad arc {(u, v, w)} for order {self.n}")
            if w < 1:
                raise ValueError(f"arc weight must be positive, got {w}")
            pair = frozenset((u, v))
            if pair in seen:
                raise ValueError(f"symmetric or repeated arcs on {sorted(pair)}")
            seen.add(pair)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Sequence[int]]) -> "OrientedGraph":
        return cls(n, frozenset((int(a[0]), int(a[1]), int(a[2]) if len(a) > 2 else 1) for a in arcs))


# construction


def _skew_from_table(table: np.ndarray, n: int) -> np.ndarray:
    # table[k, j] = [z^k] g f^j; s[i, j] (0-based, i > j) = table[i-1, j]
    s = np.zeros((n, n), dtype=np.int64)
    if n > 1:
        low = np.tril(table[: n - 1, : n - 1])
        s[1:, : n - 1] = low
        s = s - s.T
    return s


def skew_from_pair(pair: RiordanPair, n: int) -> SkewAdjacency:
    """Skew-adjacency matrix of the oriented Riordan graph of order n."""
    if n < 1:
        raise ValueError("order must be >= 1")
    rows = n - 1
    if pair.g.order < rows or pair.f.order < rows:
        raise ValueError(f"truncation {pair.order} too small for order {n}; need >= {rows}")
    table = column_table(pair.g, pair.f, rows, rows)
    return SkewAdjacency(_skew_from_table(table, n), pair.p, check=False)


def skew_from_coeffs(g: Sequence[int], f: Sequence[int], n: int, p: int) -> SkewAdjacency:
    """Skew matrix from raw coefficient lists (f listed from f_0)."""
    rows = max(n - 1, 1)
    gs = TruncatedSeries((list(g) + [0] * rows)[:rows], p)
    fs = TruncatedSeries((list(f) + [0] * rows)[:rows], p)
    return skew_from_pair(RiordanPair(gs, fs), n)


def graph_from_skew(s: SkewAdjacency) -> OrientedGraph:
    """One arc per nonzero pair, pointing from the positive entry."""
    arcs = []
    m = s.matrix
    for i, j in zip(*np.nonzero(m > 0)):
        arcs.append((int(i) + 1, int(j) + 1, int(m[i, j])))
    return OrientedGraph(s.n, frozenset(arcs))


def skew_from_graph(graph: OrientedGraph, p: int) -> SkewAdjacency:
    m = np.zeros((graph.n, graph.n), dtype=np.int64)
    for u, v, w in graph.arcs:
        m[u - 1, v - 1] = w
        m[v - 1, u - 1] = -w
    return SkewAdjacency(m, p)


# counting and enumeration


def count_formula(n: int, p: int) -> int:
    """(p^(2(n-1)) + p) / (p + 1): the number of order-n p-Riordan skew matrices."""
    if n < 1:
        raise ValueError("order must be >= 1")
    num = p ** (2 * (n - 1)) + p
    q, r = divmod(num, p + 1)
    assert r == 0
    return q


def default_budget() -> int:
    env = os.environ.get("RIORDAN_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _check_budget(n: int, p: int, budget: int | None) -> None:
    budget = default_budget() if budget is None else budget
    cost = p ** (2 * (n - 2)) if n >= 2 else 1
    if cost > budget:
        raise BudgetExceeded(f"p^(2(n-2)) = {cost} exceeds budget {budget}")


def _residues(p: int) -> list[int]:
    h = p // 2
    return list(range(-h, h + 1))


def _space_for_lead(n: int, p: int, lead: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    units = [r for r in _residues(p) if r != 0]
    free_g = n - 2 - lead
    free_f = n - 2 - lead
    for gi in units:
        for rest in itertools.product(_residues(p), repeat=free_g):
            g = (0,) * lead + (gi,) + rest
            for fr in itertools.product(_residues(p), repeat=free_f):
                yield g, (0,) + fr


def canonical_space(n: int, p: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(g, f) coefficient tuples covering every order-n Riordan skew matrix.

    For each leading index i of g: g = sum_{k=i}^{n-2} g_k z^k with g_i a unit
    and f = sum_{k=1}^{n-2-i} f_k z^k, plus the null pair.
    """
    yield (0,), (0,)
    for lead in range(n - 1):
        yield from _space_for_lead(n, p, lead)


def _skews_for_lead(args) -> set:
    n, p, lead = args
    return {skew_from_coeffs(g, f, n, p) for g, f in _space_for_lead(n, p, lead)}


def enumerate_all(n: int, p: int = 3, budget: int | None = None, workers: int = 1) -> set[SkewAdjacency]:
    """All distinct order-n p-Riordan skew matrices, deduplicated by equality.

    With ``workers > 1`` the leading-index loop is sharded across processes
    and the partial sets are merged.
    """
    p = check_prime(p)
    if n < 1:
        raise ValueError("order must be >= 1")
    _check_budget(n, p, budget)
    out = {skew_from_coeffs((0,), (0,), n, p)}
    jobs = [(n, p, lead) for lead in range(n - 1)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for part in ex.map(_skews_for_lead, jobs):
                out |= part
    else:
        for job in jobs:
            out |= _skews_for_lead(job)
    return out


# subgraphs and isomorphism


def induced_skew(s: SkewAdjacency, vertices: Sequence[int]) -> SkewAdjacency:
    """Principal submatrix on a strictly increasing list of 1-based vertices."""
    vs = list(vertices)
    if not vs:
        raise ValueError("vertex subset must be nonempty")
    if any(b <= a for a, b in zip(vs, vs[1:])):
        raise ValueError("vertices must be strictly increasing")
    if vs[0] < 1 or vs[-1] > s.n:
        raise ValueError(f"vertex out of range 1..{s.n}")
    idx = np.asarray(vs) - 1
    return SkewAdjacency(s.matrix[np.ix_(idx, idx)], s.p, check=False)


def relabel(s: SkewAdjacency, labeling: Sequence[int]) -> SkewAdjacency:
    """Matrix of the same graph after vertex v gets label ``labeling[v-1]``."""
    order = np.argsort(np.asarray(labeling) - 1)
    return SkewAdjacency(s.matrix[np.ix_(order, order)], s.p, check=False)


def _weighted_degrees(m: np.ndarray) -> list[tuple]:
    return sorted(tuple(sorted(row)) for row in m.tolist())


def digraph_isomorphic(a: OrientedGraph, b: OrientedGraph) -> bool:
    """Brute-force search for a vertex bijection preserving weighted arcs."""
    if a.n != b.n:
        return False
    if a.n > MAX_ISO_ORDER:
        raise ValueError(f"brute-force isomorphism limited to order <= {MAX_ISO_ORDER}")
    if len(a.arcs) != len(b.arcs):
        return False
    ma = _arc_matrix(a)
    mb = _arc_matrix(b)
    if _weighted_degrees(ma) != _weighted_degrees(mb):
        return False
    for perm in itertools.permutations(range(a.n)):
        idx = np.asarray(perm)
        if np.array_equal(ma[np.ix_(idx, idx)], mb):
            return True
    return False


def _arc_matrix(g: OrientedGraph) -> np.ndarray:
    m = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v, w in g.arcs:
        m[u - 1, v - 1] = w
        m[v - 1, u - 1] = -w
    return m


# serialization


def format_text(s: SkewAdjacency) -> str:
    """Aligned centered-residue rows, one per vertex."""
    width = max(len(str(int(x))) for x in s.matrix.ravel()) if s.n else 1
    return "\n".join(" ".join(f"{int(x):>{width}}" for x in row) for row in s.matrix)


def to_json(s: SkewAdjacency) -> str:
    entries = [
        [i + 1, j + 1, int(s.matrix[i, j])]
        for i in range(s.n)
        for j in range(i + 1, s.n)
        if s.matrix[i, j]
    ]
    return json.dumps({"n": s.n, "p": s.p, "entries": entries})


def from_json(text: str) -> SkewAdjacency:
    data = json.loads(text)
    n, p = int(data["n"]), int(data["p"])
    m = np.zeros((n, n), dtype=np.int64)
    for i, j, v in data["entries"]:
        if not 1 <= i < j <= n:
            raise ValueError(f"entry ({i}, {j}) must satisfy 1 <= i < j <= n")
        if v == 0:
            raise ValueError("entries list only nonzero values")
        m[i - 1, j - 1] = v
        m[j - 1, i - 1] = -v
    return SkewAdjacency(m, p)


def to_dot(s: SkewAdjacency, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    for v in range(1, s.n + 1):
        lines.append(f"  {v};")
    for u, v, w in sorted(graph_from_skew(s).arcs):
        attr = "" if w == 1 else f" [label={w}]"
        lines.append(f"  {u} -> {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_NODE = re.compile(r"^\s*(\d+)\s*;\s*$")
_DOT_ARC = re.compile(r"^\s*(\d+)\s*->\s*(\d+)\s*(?:\[\s*label\s*=\s*\"?(\d+)\"?\s*\])?\s*;\s*$")


def from_dot(text: str, p: int) -> SkewAdjacency:
    """Parse the DOT subset written by :func:`to_dot`."""
    n = 0
    arcs = []
    for line in text.splitlines():
        if m := _DOT_ARC.match(line):
            u, v = int(m[1]), int(m[2])
            arcs.append((u, v, int(m[3]) if m[3] else 1))
            n = max(n, u, v)
        elif m := _DOT_NODE.match(line):
            n = max(n, int(m[1]))
    return skew_from_graph(OrientedGraph.from_arcs(n, arcs), p)
