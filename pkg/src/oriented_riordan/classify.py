"""Brute-force membership oracle for oriented Riordan graphs of small order.

The universe of order-n Riordan skew matrices is built once per (n, p) from
the canonical coefficient space and keyed by matrix bytes, each key mapped to
the first (g, f) that produced it. A query graph is Riordan iff one of its n!
relabelings lands in that table.
"""
from __future__ import annotations

import csv
import io
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .graph import (
    OrientedGraph,
    SkewAdjacency,
    _check_budget,
    canonical_space,
    graph_from_skew,
    relabel,
    skew_from_coeffs,
    skew_from_graph,
)
from .series import check_prime

__all__ = [
    "RiordanMembershipResult",
    "riordan_universe",
    "universe_witnesses",
    "is_riordan_graph",
    "kn1_orientations",
    "verify_kn1_not_riordan",
    "kn1_report",
    "IsoClass",
    "oriented_graphs",
    "canonical_key",
    "classify_small",
    "classify_up_to",
    "classification_csv",
]


@dataclass(frozen=True)
class RiordanMembershipResult:
    """Outcome of a membership query.

    ``witness`` is ``(labeling, g, f)``: relabelling the query so that vertex
    v gets label ``labeling[v-1]`` gives exactly the skew matrix of (g, f).
    """

    is_riordan: bool
    witness: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]] | None = None


def _key(m: np.ndarray) -> bytes:
    return np.ascontiguousarray(m, dtype=np.int8).tobytes()


@lru_cache(maxsize=16)
def _witness_table(n: int, p: int) -> dict[bytes, tuple[tuple[int, ...], tuple[int, ...]]]:
    table: dict[bytes, tuple[tuple[int, ...], tuple[int, ...]]] = {}
    for g, f in canonical_space(n, p):
        k = _key(skew_from_coeffs(g, f, n, p).matrix)
        table.setdefault(k, (g, f))
    return table


def universe_witnesses(n: int, p: int = 3, budget: int | None = None) -> dict[bytes, tuple]:
    """Matrix bytes -> one generating (g, f) for every order-n Riordan skew matrix."""
    p = check_prime(p)
    if n < 1:
        raise ValueError("order must be >= 1")
    _check_budget(n, p, budget)
    return _witness_table(n, p)


def riordan_universe(n: int, p: int = 3, budget: int | None = None) -> set[SkewAdjacency]:
    table = universe_witnesses(n, p, budget)
    return {skew_from_coeffs(g, f, n, p) for g, f in table.values()}


def is_riordan_graph(graph: OrientedGraph | SkewAdjacency, p: int = 3, budget: int | None = None) -> RiordanMembershipResult:
    """Probe all n! relabellings of ``graph`` against the order-n universe."""
    s = graph if isinstance(graph, SkewAdjacency) else skew_from_graph(graph, p)
    if s.p != p:
        raise ValueError(f"graph is over Z_{s.p}, asked about p = {p}")
    table = universe_witnesses(s.n, p, budget)
    m = s.matrix
    for perm in itertools.permutations(range(s.n)):
        # perm lists old vertices in new-label order
        idx = np.asarray(perm, dtype=np.intp)
        hit = table.get(_key(m[np.ix_(idx, idx)]))
        if hit is not None:
            labeling = [0] * s.n
            for new, old in enumerate(perm):
                labeling[old] = new + 1
            if relabel(s, labeling) != skew_from_coeffs(hit[0], hit[1], s.n, p):
                raise AssertionError("witness does not rebuild the query graph")
            return RiordanMembershipResult(True, (tuple(labeling), hit[0], hit[1]))
    return RiordanMembershipResult(False, None)


# K_{n-1} plus an isolated vertex


def kn1_orientations(n: int) -> list[OrientedGraph]:
    """Every orientation of K_{n-1} on vertices 1..n-1, with vertex n isolated."""
    if n < 2:
        raise ValueError("need n >= 2")
    edges = list(itertools.combinations(range(1, n), 2))
    out = []
    for bits in itertools.product((0, 1), repeat=len(edges)):
        arcs = [(u, v, 1) if b == 0 else (v, u, 1) for (u, v), b in zip(edges, bits)]
        out.append(OrientedGraph.from_arcs(n, arcs))
    return out


def _probe(args) -> bool:
    graph, budget = args
    return is_riordan_graph(graph, 3, budget).is_riordan


def kn1_report(n: int, budget: int | None = None, workers: int = 1) -> list[bool]:
    """Membership verdict for each orientation in :func:`kn1_orientations` order (p = 3)."""
    graphs = kn1_orientations(n)
    universe_witnesses(n, 3, budget)
    jobs = [(g, budget) for g in graphs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(_probe, jobs, chunksize=8))
    return [_probe(j) for j in jobs]


def verify_kn1_not_riordan(n: int = 5, budget: int | None = None, workers: int = 1) -> bool:
    """True iff no orientation of K_{n-1} u K_1 is an oriented 3-Riordan graph."""
    return not any(kn1_report(n, budget, workers))


# small classification


def oriented_graphs(n: int) -> list[SkewAdjacency]:
    """All 3^C(n,2) labelled oriented graphs of order n as ternary skew matrices."""
    pairs = list(itertools.combinations(range(n), 2))
    out = []
    for vals in itertools.product((0, 1, -1), repeat=len(pairs)):
        m = np.zeros((n, n), dtype=np.int64)
        for (i, j), v in zip(pairs, vals):
            m[i, j] = v
            m[j, i] = -v
        out.append(SkewAdjacency(m, 3, check=False))
    return out


def canonical_key(s: SkewAdjacency) -> bytes:
    """Lexicographically least matrix encoding over all vertex permutations."""
    m = s.matrix
    return min(
        _key(m[np.ix_(idx, idx)])
        for idx in (np.asarray(p, dtype=np.intp) for p in itertools.permutations(range(s.n)))
    )


@dataclass
class IsoClass:
    class_id: int
    n: int
    representative: SkewAdjacency
    size: int
    membership: RiordanMembershipResult = field(default_factory=lambda: RiordanMembershipResult(False))

    @property
    def is_riordan(self) -> bool:
        return self.membership.is_riordan

    def arcs(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, v, _ in graph_from_skew(self.representative).arcs)


def classify_small(n: int, p: int = 3) -> list[IsoClass]:
    """Isomorphism classes of order-n oriented graphs, each tagged Riordan or not."""
    if p != 3:
        raise ValueError("the order <= 4 classification is over Z_3")
    if not 1 <= n <= 4:
        raise ValueError("classify_small supports 1 <= n <= 4")
    classes: dict[bytes, list] = {}
    for s in oriented_graphs(n):
        k = canonical_key(s)
        if k in classes:
            classes[k][1] += 1
        else:
            classes[k] = [s, 1]
    out = []
    for cid, (k, (rep, size)) in enumerate(sorted(classes.items())):
        out.append(IsoClass(cid, n, rep, size, is_riordan_graph(rep, p)))
    return out


def classify_up_to(max_n: int = 4, p: int = 3) -> list[IsoClass]:
    """Concatenated classifications for orders 1..max_n, with ids renumbered."""
    out: list[IsoClass] = []
    for n in range(1, max_n + 1):
        for c in classify_small(n, p):
            c.class_id = len(out)
            out.append(c)
    return out


def classification_csv(classes: Sequence[IsoClass]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["class_id", "n", "size", "arcs", "riordan", "labeling", "g", "f"])
    for c in classes:
        arcs = " ".join(f"{u}->{v}" for u, v in c.arcs())
        if c.membership.witness:
            lab, g, f = c.membership.witness
            extra = [" ".join(map(str, lab)), " ".join(map(str, g)), " ".join(map(str, f))]
        else:
            extra = ["", "", ""]
        w.writerow([c.class_id, c.n, c.size, arcs, int(c.is_riordan), *extra])
    return buf.getvalue()
