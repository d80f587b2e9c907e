"""Finite ordinals, their gaps, and insertion of one ordinal into another.

An :class:`Ordinal` is a finite totally ordered set of distinct integer
labels; the order is positional, not numeric, so the underlying sequence
of an insertion such as (1,...,6) with (7,8,9,10) put in place of 3 reads
(1,2,7,8,9,10,4,5,6).  A *gap* of an ordinal is a pair of consecutive
elements; gaps index the coordinate lines of the ambient space carried by
subspace configurations.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple


class GapPair(NamedTuple):
    """A pair of consecutive elements (left, right) of an ordinal."""

    left: int
    right: int


class Ordinal:
    """A finite totally ordered set with distinct integer labels."""

    __slots__ = ("elements", "_pos")

    def __init__(self, elements):
        elements = tuple(int(x) for x in elements)
        if len(set(elements)) != len(elements):
            raise ValueError("ordinal labels must be distinct")
        if not elements:
            raise ValueError("ordinal must be nonempty")
        self.elements = elements
        self._pos = {x: k for k, x in enumerate(elements)}

    @classmethod
    def standard(cls, n: int) -> "Ordinal":
        """The ordinal {1 < 2 < ... < n}."""
        return cls(range(1, n + 1))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._pos

    def __eq__(self, other) -> bool:
        return isinstance(other, Ordinal) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"Ordinal({list(self.elements)})"

    def position(self, x: int) -> int:
        return self._pos[x]

    def min(self) -> int:
        return self.elements[0]

    def max(self) -> int:
        return self.elements[-1]

    def predecessor(self, x: int) -> int:
        k = self._pos[x]
        if k == 0:
            raise ValueError(f"{x} has no predecessor")
        return self.elements[k - 1]

    def successor(self, x: int) -> int:
        k = self._pos[x]
        if k == len(self.elements) - 1:
            raise ValueError(f"{x} has no successor")
        return self.elements[k + 1]

    def before(self, x: int, y: int) -> bool:
        """True when x precedes y in this ordinal."""
        return self._pos[x] < self._pos[y]

    def interval(self, a: int, b: int) -> tuple[int, ...]:
        """The elements from a to b inclusive, in order."""
        i, j = self._pos[a], self._pos[b]
        if i > j:
            raise ValueError(f"[{a}, {b}] is not an interval: a comes after b")
        return self.elements[i : j + 1]

    def relabel_standard(self) -> "Ordinal":
        """Order isomorphic copy with labels 1..n."""
        return Ordinal.standard(len(self))


def gap_set(I: Ordinal) -> tuple[GapPair, ...]:
    """Gaps of I in increasing order of their left element."""
    return tuple(GapPair(a, b) for a, b in zip(I.elements, I.elements[1:]))


def ordinal_insert(I: Ordinal, i: int, J: Ordinal) -> Ordinal:
    """The ordinal obtained by replacing element i of I with all of J.

    The order puts a before b when a, b are both in I with a before b,
    both in J with a before b, a in I before i and b in J, or a in J and
    b in I after i.
    """
    if i not in I:
        raise ValueError(f"{i} is not an element of {I}")
    if set(I.elements) & set(J.elements):
        raise ValueError("labels of I and J must be disjoint")
    k = I.position(i)
    return Ordinal(I.elements[:k] + J.elements + I.elements[k + 1 :])


def gap_bijection(I: Ordinal, i: int, J: Ordinal) -> dict[tuple[str, GapPair], GapPair]:
    """Combined bijection Gap(I) + Gap(J) -> Gap(I composed at i with J).

    Keys are ('I', gap) or ('J', gap).  The two gaps of I adjacent to i
    are transported to gaps adjacent to J; every other gap maps to itself.
    """
    K = ordinal_insert(I, i, J)
    out: dict[tuple[str, GapPair], GapPair] = {}
    for g in gap_set(I):
        if g.right == i:
            image = GapPair(g.left, J.min())
        elif g.left == i:
            image = GapPair(J.max(), g.right)
        else:
            image = g
        out[("I", g)] = image
    for g in gap_set(J):
        out[("J", g)] = g
    values = list(out.values())
    if sorted(values) != sorted(gap_set(K)) or len(set(values)) != len(values):
        raise AssertionError("gap bijection failed to be a bijection")
    return out
