"""Tests for exact rational linear algebra."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nsoperads.linalg import SparseEchelon, Subspace, nullspace, rank, rref, solve

_entries = st.integers(min_value=-4, max_value=4)


def _matrix(n_rows: int, n_cols: int):
    return st.lists(
        st.lists(_entries, min_size=n_cols, max_size=n_cols),
        min_size=n_rows,
        max_size=n_rows,
    )


def test_rref_identity_fixed_point():
    eye = [[1, 0], [0, 1]]
    rows, pivots = rref(eye)
    assert rows == [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    assert pivots == [0, 1]


def test_rank_examples():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 2], [3, 4]]) == 2
    assert rank([]) == 0


def test_nullspace_is_kernel():
    m = [[1, 1, 0], [0, 1, 1]]
    basis = nullspace(m, 3)
    assert len(basis) == 1
    (v,) = basis
    for row in m:
        assert sum(a * b for a, b in zip(row, v)) == 0


def test_solve_consistent_and_inconsistent():
    assert solve([[2, 0], [0, 4]], [6, 8]) == [Fraction(3), Fraction(2)]
    assert solve([[1, 1], [1, 1]], [0, 1]) is None


def test_subspace_membership_and_equality():
    s = Subspace.span(3, [[1, 0, 1], [0, 1, 1]])
    assert s.dim == 2
    assert s.contains_vector([1, 1, 2])
    assert not s.contains_vector([0, 0, 1])
    assert s == Subspace.span(3, [[1, 1, 2], [1, -1, 0]])


def test_subspace_sum_and_intersection():
    a = Subspace.span(3, [[1, 0, 0], [0, 1, 0]])
    b = Subspace.span(3, [[0, 1, 0], [0, 0, 1]])
    assert (a + b) == Subspace.full(3)
    cut = a.intersect(b)
    assert cut.dim == 1 and cut.contains_vector([0, 1, 0])


def test_subspace_rejects_mismatched_rows():
    with pytest.raises(ValueError):
        Subspace(2, [[1, 2, 3]])
    with pytest.raises(ValueError):
        Subspace.span(2, [[1, 0]]) + Subspace.span(3, [[1, 0, 0]])


def test_sparse_echelon_tracks_rank():
    ech = SparseEchelon()
    assert ech.add({"a": Fraction(1), "b": Fraction(1)})
    assert ech.add({"b": Fraction(1)})
    assert not ech.add({"a": Fraction(2), "b": Fraction(5)})
    assert ech.rank == 2
    assert ech.contains({"a": Fraction(3)})
    assert not ech.contains({"c": Fraction(1)})


@given(_matrix(3, 4))
def test_rref_preserves_row_space(m):
    rows, _ = rref(m)
    original = Subspace(4, m)
    reduced = Subspace(4, rows)
    assert original == reduced


@given(_matrix(3, 4))
def test_rank_nullity(m):
    assert rank(m) + len(nullspace(m, 4)) == 4


@given(_matrix(3, 3), st.lists(_entries, min_size=3, max_size=3))
def test_solve_verifies(m, rhs):
    x = solve(m, rhs)
    if x is not None:
        for row, b in zip(m, rhs):
            assert sum(a * v for a, v in zip(row, x)) == b


@given(_matrix(2, 4), _matrix(2, 4))
def test_intersection_inside_both(m1, m2):
    a, b = Subspace(4, m1), Subspace(4, m2)
    cut = a.intersect(b)
    for row in cut.basis:
        assert a.contains_vector(row) and b.contains_vector(row)
    assert cut.dim == a.dim + b.dim - (a + b).dim
