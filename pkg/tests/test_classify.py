import numpy as np
import pytest

from oriented_riordan.classify import (
    canonical_key,
    classification_csv,
    classify_small,
    classify_up_to,
    is_riordan_graph,
    kn1_orientations,
    kn1_report,
    oriented_graphs,
    riordan_universe,
    universe_witnesses,
    verify_kn1_not_riordan,
)
from oriented_riordan.graph import (
    BudgetExceeded,
    OrientedGraph,
    count_formula,
    enumerate_all,
    relabel,
    skew_from_coeffs,
    skew_from_graph,
    skew_from_pair,
)
from oriented_riordan.riordan import catalan_pair

from oracles import ORIENTED_GRAPH_CLASSES


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_universe_sizes(n):
    assert len(riordan_universe(n, 3)) == count_formula(n, 3)


def test_universe_matches_enumeration():
    assert riordan_universe(4, 3) == enumerate_all(4, 3)
    assert len(riordan_universe(2, 3)) == 3
    assert len(riordan_universe(3, 5)) == 105


def test_universe_budget():
    with pytest.raises(BudgetExceeded):
        universe_witnesses(7, 3, budget=10)


def _check_witness(s, res):
    labeling, g, f = res.witness
    assert relabel(s, labeling) == skew_from_coeffs(g, f, s.n, s.p)


def test_known_riordan_graph_round_trips():
    s = skew_from_pair(catalan_pair(3, 5), 5)
    rng = np.random.default_rng(3)
    for _ in range(5):
        shuffled = relabel(s, [int(x) + 1 for x in rng.permutation(5)])
        res = is_riordan_graph(shuffled, 3)
        assert res.is_riordan
        _check_witness(shuffled, res)


def test_null_graph_is_riordan():
    res = is_riordan_graph(OrientedGraph(5, frozenset()), 3)
    assert res.is_riordan and all(x == 0 for x in res.witness[1])


def test_order4_exception():
    # the 4-cycle with one source (1) and one sink (2)
    c4 = OrientedGraph.from_arcs(4, [(1, 3), (1, 4), (3, 2), (4, 2)])
    assert not is_riordan_graph(c4, 3).is_riordan


def test_prime_mismatch():
    s = skew_from_pair(catalan_pair(3, 4), 4)
    with pytest.raises(ValueError):
        is_riordan_graph(s, 5)


def test_kn1():
    assert len(kn1_orientations(5)) == 64
    assert verify_kn1_not_riordan(5)
    # order 4: every orientation of K_3 plus an isolated vertex is Riordan
    assert kn1_report(4) == [True] * 8
    assert not verify_kn1_not_riordan(2)


def test_kn1_parallel():
    assert kn1_report(5, workers=2) == kn1_report(5)


def test_oriented_graph_counts():
    for n, classes in ORIENTED_GRAPH_CLASSES.items():
        assert len(oriented_graphs(n)) == 3 ** (n * (n - 1) // 2)
        assert len(classify_small(n)) == classes


def test_canonical_key_is_invariant():
    s = skew_from_graph(OrientedGraph.from_arcs(4, [(1, 2), (2, 3), (4, 1)]), 3)
    assert canonical_key(relabel(s, [2, 4, 1, 3])) == canonical_key(s)


def test_classification_up_to_four():
    classes = classify_up_to(4)
    bad = [c for c in classes if not c.is_riordan]
    assert len(bad) == 1 and bad[0].n == 4
    assert bad[0].arcs() and len(bad[0].arcs()) == 4
    for n in (1, 2, 3):
        assert all(c.is_riordan for c in classify_small(n))
    for c in classes:
        assert c.class_id == classes.index(c)
        if c.is_riordan:
            _check_witness(c.representative, c.membership)
    assert sum(c.size for c in classes if c.n == 4) == 3**6


def test_classify_guards():
    with pytest.raises(ValueError):
        classify_small(5)
    with pytest.raises(ValueError):
        classify_small(3, p=5)


def test_csv_report():
    text = classification_csv(classify_up_to(3))
    lines = text.strip().splitlines()
    assert lines[0] == "class_id,n,size,arcs,riordan,labeling,g,f"
    assert len(lines) == 1 + 1 + 2 + 7
    assert all(line.split(",")[4] == "1" for line in lines[1:])
