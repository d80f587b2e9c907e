"""Tests for planar rooted trees and their enumeration."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nsoperads.trees import (
    PlanarTree,
    catalan,
    compositions,
    contraction_closure,
    enumerate_trees,
    one_edge_trees,
)

# Little Schroeder numbers: operadic planar trees with n leaves.
SCHROEDER = [1, 1, 3, 11, 45, 197, 903]


def test_tree_counts_match_schroeder():
    assert [len(enumerate_trees(n)) for n in range(1, 8)] == SCHROEDER


def test_binary_tree_counts_match_catalan():
    for n in range(1, 8):
        assert len(enumerate_trees(n, binary_only=True)) == catalan(n - 1)


def test_catalan_values():
    assert [catalan(k) for k in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_one_edge_tree_counts():
    # trees with exactly one internal edge, counted by (arity pair, slot)
    assert [len(one_edge_trees(n)) for n in range(3, 8)] == [2, 5, 9, 14, 20]
    for n in range(3, 8):
        for t in one_edge_trees(n):
            assert len(t.internal_edges()) == 1
            assert t.n_leaves == n


def test_text_round_trip():
    for text in ("(1,2)", "(1,(2,3))", "((1,2),(3,4))", "(1,2,3,4)", "(1,(2,3,4),5)"):
        t = PlanarTree.from_text(text)
        assert t.to_text() == text


def test_corolla_and_leaf_shape():
    c = PlanarTree.corolla(3)
    assert c.n_leaves == 3 and not c.is_binary()
    assert c.to_text() == "(1,2,3)"
    assert PlanarTree.leaf().is_leaf


def test_graft_leaf_counts():
    t = PlanarTree.corolla(3).graft(2, PlanarTree.corolla(2))
    assert t.to_text() == "(1,(2,3),4)"
    assert t.n_leaves == 4


def test_contraction_closure_of_binary_tree():
    t = PlanarTree.from_text("((1,2),(3,4))")
    closure = {x.to_text() for x in contraction_closure(t)}
    assert closure == {"((1,2),(3,4))", "((1,2),3,4)", "(1,2,(3,4))", "(1,2,3,4)"}


def test_contract_single_edge():
    t = PlanarTree.from_text("(1,(2,3))")
    (edge,) = t.internal_edges()
    assert t.contract(edge).to_text() == "(1,2,3)"


def test_leaf_span_and_subtree():
    t = PlanarTree.from_text("((1,2),(3,4))")
    left, right = t.children
    assert t.leaf_span((0,)) == (1, 2)
    assert t.leaf_span((1,)) == (3, 4)
    assert t.subtree((0,)) == left and t.subtree((1,)) == right


def test_compositions_positive_parts():
    assert list(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert list(compositions(3, 3)) == [(1, 1, 1)]
    for parts in compositions(6, 3):
        assert sum(parts) == 6 and all(p >= 1 for p in parts)


@given(st.integers(min_value=1, max_value=6))
def test_round_trip_all_trees(n: int):
    for t in enumerate_trees(n):
        assert PlanarTree.from_text(t.to_text()) == t


@given(st.integers(min_value=2, max_value=6))
def test_contractions_drop_one_edge(n: int):
    for t in enumerate_trees(n, binary_only=True):
        edges = t.internal_edges()
        assert len(t.contractions()) == len(edges)
        for c in t.contractions():
            assert len(c.internal_edges()) == len(edges) - 1
            assert c.n_leaves == t.n_leaves
