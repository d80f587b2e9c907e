"""Tests for finite ordinals, gaps, and the insertion bijection."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nsoperads.ordinals import (
    GapPair,
    Ordinal,
    gap_bijection,
    gap_set,
    ordinal_insert,
)


def test_standard_ordinal_basics():
    I = Ordinal.standard(4)
    assert list(I) == [1, 2, 3, 4]
    assert len(I) == 4
    assert 3 in I and 5 not in I
    assert I.min() == 1 and I.max() == 4
    assert I.position(3) == 2


def test_order_is_positional_not_numeric():
    I = Ordinal((5, 2, 9))
    assert I.before(5, 2) and I.before(2, 9)
    assert not I.before(9, 5)
    assert I.predecessor(9) == 2
    assert I.successor(5) == 2
    assert I.interval(5, 9) == (5, 2, 9)
    assert I.relabel_standard() == Ordinal.standard(3)


def test_invalid_ordinals_rejected():
    with pytest.raises(ValueError):
        Ordinal(())
    with pytest.raises(ValueError):
        Ordinal((1, 1))


def test_endpoint_navigation_raises():
    I = Ordinal.standard(3)
    with pytest.raises(ValueError):
        I.predecessor(1)
    with pytest.raises(ValueError):
        I.successor(3)
    with pytest.raises(ValueError):
        I.interval(3, 1)


def test_gap_set_lists_adjacent_pairs():
    assert gap_set(Ordinal.standard(3)) == (GapPair(1, 2), GapPair(2, 3))
    assert gap_set(Ordinal.standard(1)) == ()


def test_ordinal_insert_replaces_element():
    I = Ordinal.standard(3)
    J = Ordinal((7, 8))
    assert ordinal_insert(I, 2, J) == Ordinal((1, 7, 8, 3))


def test_ordinal_insert_rejects_bad_input():
    I = Ordinal.standard(3)
    with pytest.raises(ValueError):
        ordinal_insert(I, 9, Ordinal((7,)))
    with pytest.raises(ValueError):
        ordinal_insert(I, 2, Ordinal((1, 7)))


def test_gap_bijection_transports_adjacent_gaps():
    I = Ordinal.standard(3)
    J = Ordinal((7, 8))
    bij = gap_bijection(I, 2, J)
    assert bij[("I", GapPair(1, 2))] == GapPair(1, 7)
    assert bij[("I", GapPair(2, 3))] == GapPair(8, 3)
    assert bij[("J", GapPair(7, 8))] == GapPair(7, 8)


@given(
    n=st.integers(min_value=2, max_value=6),
    k=st.integers(min_value=1, max_value=4),
    pos=st.integers(min_value=0, max_value=5),
)
def test_gap_bijection_is_a_bijection(n: int, k: int, pos: int):
    I = Ordinal.standard(n)
    J = Ordinal(tuple(range(100, 100 + k)))
    i = list(I)[pos % n]
    composite = ordinal_insert(I, i, J)
    bij = gap_bijection(I, i, J)
    sources = [("I", g) for g in gap_set(I)] + [("J", g) for g in gap_set(J)]
    assert sorted(bij) == sorted(sources)
    assert sorted(bij.values()) == sorted(gap_set(composite))
