import pytest

from chipfiring.bijection import (
    enumerate_parking_functions,
    enumerate_spanning_trees,
    is_spanning_tree,
    reduced_from_tree,
    tree_from_reduced,
    verify_bijection,
)
from chipfiring.divisors import degree, is_reduced
from chipfiring.errors import (
    InvalidOrder,
    NotReduced,
    NotSpanningTree,
    TooLarge,
    ValueOutOfRange,
)
from chipfiring.graph import build_graph, reduced_laplacian
from chipfiring.linalg import determinant


def test_forward_banana(b2):
    assert tree_from_reduced(b2, 0, None, [0, 0]) == frozenset({0})
    assert tree_from_reduced(b2, 0, None, [-1, 1]) == frozenset({1})


def test_forward_tree_graph_takes_all_edges(p4):
    assert tree_from_reduced(p4, 0, None, [0, 0, 0, 0]) == frozenset({0, 1, 2})


def test_forward_k3_example():
    # edges listed as 0:(0,1), 1:(1,2), 2:(0,2) to match a hand run
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert tree_from_reduced(g, 0, None, [0, 0, 0]) == frozenset({0, 1})


def test_forward_rejects_bad_inputs(k3):
    with pytest.raises(ValueOutOfRange):
        tree_from_reduced(k3, 0, None, [0, 2, 0])
    with pytest.raises(NotReduced):
        tree_from_reduced(k3, 0, None, [0, 1, 1])


def test_inverse_banana(b2):
    assert reduced_from_tree(b2, 0, None, {0}) == [0, 0]
    assert reduced_from_tree(b2, 0, None, {1}) == [-1, 1]


def test_inverse_path_gives_zero_function(p4):
    assert reduced_from_tree(p4, 0, None, {0, 1, 2}) == [0, 0, 0, 0]


def test_inverse_rejects_non_trees(k3):
    with pytest.raises(NotSpanningTree):
        reduced_from_tree(k3, 0, None, {0})
    with pytest.raises(NotSpanningTree):
        reduced_from_tree(k3, 0, None, {0, 1, 2})


def test_round_trips_exhaustive(k3, b2, k4):
    for g in (k3, b2, k4):
        for q in range(g.n):
            for d in enumerate_parking_functions(g, q):
                tree = tree_from_reduced(g, q, None, d)
                assert reduced_from_tree(g, q, None, tree) == d
            for tree in enumerate_spanning_trees(g):
                d = reduced_from_tree(g, q, None, tree)
                assert degree(d) == 0
                assert is_reduced(g, d, q).reduced
                assert tree_from_reduced(g, q, None, d) == tree


def test_enumerate_trees_examples(b2, k3, k4):
    assert enumerate_spanning_trees(b2) == [frozenset({0}), frozenset({1})]
    assert len(enumerate_spanning_trees(k3)) == 3
    assert len(enumerate_spanning_trees(k4)) == 16


def test_enumerate_trees_single_vertex():
    g = build_graph(1, [])
    assert enumerate_spanning_trees(g) == [frozenset()]


def test_enumerate_parking_examples(b2, k3, p4):
    assert enumerate_parking_functions(b2, 0) == [[0, 0], [-1, 1]]
    offbase = {tuple(d[1:]) for d in enumerate_parking_functions(k3, 0)}
    assert offbase == {(0, 0), (0, 1), (1, 0)}
    assert enumerate_parking_functions(p4, 0) == [[0, 0, 0, 0]]


def test_enumeration_limit(k4, monkeypatch):
    with pytest.raises(TooLarge):
        enumerate_spanning_trees(k4, limit=10)
    with pytest.raises(TooLarge):
        enumerate_parking_functions(k4, 0, limit=10)
    monkeypatch.setenv("SANDPILE_TREE_LIMIT", "10")
    with pytest.raises(TooLarge):
        enumerate_spanning_trees(k4)
    monkeypatch.setenv("SANDPILE_TREE_LIMIT", "1000000")
    assert len(enumerate_spanning_trees(k4)) == 16


def test_is_spanning_tree(k4):
    assert is_spanning_tree(k4, {0, 1, 2})
    assert not is_spanning_tree(k4, {0, 1})
    assert not is_spanning_tree(k4, {0, 1, 3})  # 01, 02, 12 form a cycle


def test_verify_bijection_on_corpus(corpus):
    for _, g in corpus:
        report = verify_bijection(g, 0)
        assert report.passed, report.failures
        assert report.parking_count == report.tree_count == report.determinant


def test_verify_bijection_reversed_order(k3, b2, k4):
    for g in (k3, b2, k4):
        report = verify_bijection(g, 0, list(reversed(range(g.m))))
        assert report.passed
        assert report.determinant == determinant(reduced_laplacian(g, 0))


def test_order_changes_pairing_not_counts(k4):
    identity = verify_bijection(k4, 0)
    reversed_ = verify_bijection(k4, 0, list(reversed(range(k4.m))))
    assert identity.tree_count == reversed_.tree_count
    assert identity.parking_count == reversed_.parking_count
    # the two orders pair at least one divisor differently
    parking = enumerate_parking_functions(k4, 0)
    assert any(
        tree_from_reduced(k4, 0, None, d)
        != tree_from_reduced(k4, 0, list(reversed(range(k4.m))), d)
        for d in parking
    )


def test_invalid_order_rejected(k3):
    with pytest.raises(InvalidOrder):
        tree_from_reduced(k3, 0, [0, 1], [0, 0, 0])
    with pytest.raises(InvalidOrder):
        tree_from_reduced(k3, 0, [0, 1, 1], [0, 0, 0])
