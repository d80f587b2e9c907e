"""Brick manifolds as exact-rational subspace configurations.

A point of the brick manifold over a finite ordinal I is a collection of
subspaces V_{a,b} of the gap space G(I), one for every proper interval
[a, b] of I, satisfying five constraints (dimension, two nestings, and
two boundary normalizations).  This module realizes such points over the
rationals:

- :class:`SubspaceConfig` stores the collection with every subspace in
  reduced row echelon form and machine-checks all five constraints on
  construction;
- :func:`brick_compose` implements the operadic composition through the
  canonical gap isomorphism G(I) + G(J) -> G(I composed at i with J),
  case by case over the nine kinds of intervals of the composite;
- :func:`brick_decompose` inverts it on the closure of a one-edge
  stratum, and :func:`stratum_of` iterates the inversion to find the
  unique planar tree whose stratum contains a given configuration;
- samplers draw configurations from a chosen stratum with free
  parameters taken from nonzero rationals, so validity is guaranteed
  and every stratum is reachable.

Configurations serialize to a plain-text block format, one labeled
matrix per interval.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from random import Random
from typing import Iterator, Mapping

from .linalg import Subspace
from .ordinals import GapPair, Ordinal, gap_bijection, gap_set, ordinal_insert
from .trees import PlanarTree

Interval = tuple[int, int]

__all__ = [
    "SubspaceConfig",
    "brick_compose",
    "brick_decompose",
    "brick_identity",
    "compose_standard",
    "config_from_text",
    "config_to_text",
    "coordinate_subspace",
    "gap_linear_map",
    "proper_intervals",
    "random_config",
    "random_corolla_config",
    "relabel_config",
    "stratum_dimension",
    "stratum_of",
]


def proper_intervals(I: Ordinal) -> list[Interval]:
    """All intervals [a, b] of I other than I itself, in position order."""
    elems = I.elements
    out = [
        (elems[i], elems[j])
        for i in range(len(elems))
        for j in range(i, len(elems))
    ]
    out.remove((I.min(), I.max()))
    return out


def coordinate_subspace(I: Ordinal, a: int, b: int) -> Subspace:
    """The coordinate subspace G(a, b) of G(I) spanned by the gaps of [a, b]."""
    gaps = gap_set(I)
    lo, hi = I.position(a), I.position(b)
    rows = []
    for col, gap in enumerate(gaps):
        if lo <= I.position(gap.left) and I.position(gap.right) <= hi:
            row = [Fraction(0)] * len(gaps)
            row[col] = Fraction(1)
            rows.append(row)
    return Subspace(len(gaps), rows)


@dataclass(frozen=True)
class SubspaceConfig:
    """A brick-manifold point: one subspace of G(I) per proper interval.

    The constructor verifies the five defining constraints and raises
    ``ValueError`` naming the first violated one:

    1. dim V_{a,b} equals the number of elements of [a, b];
    2. V_{a,b} is contained in V_{p(a),b} when a has a predecessor;
    3. V_{a,b} is contained in V_{a,s(b)} when b has a successor;
    4. V_{min(I),b} equals the coordinate space G(min(I), s(b));
    5. V_{a,max(I)} equals the coordinate space G(p(a), max(I)).

    In constraints 2 and 3 the enlarged interval may be all of I, in
    which case the containing space is the full gap space.  Instances
    compare by ordinal and exact subspace equality.
    """

    ordinal: Ordinal
    spaces: Mapping[Interval, Subspace]

    def __post_init__(self) -> None:
        object.__setattr__(self, "spaces", dict(self.spaces))
        self._validate()

    def space(self, a: int, b: int) -> Subspace:
        """V_{a,b}, with the full interval mapped to the full gap space."""
        if (a, b) == (self.ordinal.min(), self.ordinal.max()):
            return Subspace.full(len(self.ordinal) - 1)
        return self.spaces[(a, b)]

    def _validate(self) -> None:
        I = self.ordinal
        ambient = len(I) - 1
        expected = proper_intervals(I)
        if set(self.spaces) != set(expected):
            raise ValueError("spaces must be indexed by the proper intervals")
        for a, b in expected:
            V = self.spaces[(a, b)]
            if V.ambient_dim != ambient:
                raise ValueError(f"V[{a},{b}] has wrong ambient dimension")
            if V.dim != len(I.interval(a, b)):
                raise ValueError(
                    f"constraint 1 fails: dim V[{a},{b}] = {V.dim}, "
                    f"expected {len(I.interval(a, b))}"
                )
        for a, b in expected:
            V = self.spaces[(a, b)]
            if a != I.min() and not self.space(I.predecessor(a), b).contains(V):
                raise ValueError(
                    f"constraint 2 fails: V[{a},{b}] not inside "
                    f"V[{I.predecessor(a)},{b}]"
                )
            if b != I.max() and not self.space(a, I.successor(b)).contains(V):
                raise ValueError(
                    f"constraint 3 fails: V[{a},{b}] not inside "
                    f"V[{a},{I.successor(b)}]"
                )
            if a == I.min() and V != coordinate_subspace(I, a, I.successor(b)):
                raise ValueError(
                    f"constraint 4 fails: V[{a},{b}] is not "
                    f"G({a},{I.successor(b)})"
                )
            if b == I.max() and V != coordinate_subspace(I, I.predecessor(a), b):
                raise ValueError(
                    f"constraint 5 fails: V[{a},{b}] is not "
                    f"G({I.predecessor(a)},{b})"
                )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubspaceConfig)
            and self.ordinal == other.ordinal
            and self.spaces == other.spaces
        )

    def __repr__(self) -> str:
        return f"SubspaceConfig(over {list(self.ordinal.elements)})"


def brick_identity(label: int = 1) -> SubspaceConfig:
    """The unique configuration over a one-element ordinal."""
    return SubspaceConfig(Ordinal([label]), {})


def gap_linear_map(
    I: Ordinal, i: int, J: Ordinal
) -> tuple[Ordinal, list[int], list[int]]:
    """Column images of the isomorphism G(I) + G(J) -> G(I composed with J).

    Returns the composite ordinal K and two injections: the K-column of
    each gap of I (gap order) and of each gap of J.  Together they hit
    every column of G(K) exactly once.
    """
    K = ordinal_insert(I, i, J)
    bij = gap_bijection(I, i, J)
    column = {gap: c for c, gap in enumerate(gap_set(K))}
    cols_i = [column[bij[("I", g)]] for g in gap_set(I)]
    cols_j = [column[bij[("J", g)]] for g in gap_set(J)]
    return K, cols_i, cols_j


def _push(space: Subspace, cols: list[int], ambient: int) -> Subspace:
    """Transport a subspace along an injective column map."""
    rows = []
    for row in space.basis:
        out = [Fraction(0)] * ambient
        for value, col in zip(row, cols):
            out[col] = value
        rows.append(out)
    return Subspace(ambient, rows)


def _pull(space: Subspace, cols: list[int]) -> Subspace:
    """Restrict a subspace to the span of the given columns and re-index.

    The input must decompose as (part in the column span) + (part in the
    complementary coordinate span); the returned subspace is the first
    part in the coordinates of the column list.
    """
    ambient = space.ambient_dim
    col_rows = []
    for col in cols:
        row = [Fraction(0)] * ambient
        row[col] = Fraction(1)
        col_rows.append(row)
    restricted = space.intersect(Subspace(ambient, col_rows))
    return Subspace(len(cols), [[row[c] for c in cols] for row in restricted.basis])


def brick_compose(
    c1: SubspaceConfig, i: int, c2: SubspaceConfig
) -> SubspaceConfig:
    """Operadic composition of brick configurations.

    The ordinal of ``c2`` replaces the element i of the ordinal of
    ``c1``; the labels must be disjoint.  Each proper interval of the
    composite falls into one of nine kinds, depending on how its ends
    sit relative to the inserted block, and its subspace is the image
    under the gap isomorphism of a subspace of G(I) + G(J) read off the
    inputs.  The result is validated on construction.
    """
    I, J = c1.ordinal, c2.ordinal
    if i not in I:
        raise ValueError(f"{i} is not an element of the outer ordinal")
    K, cols_i, cols_j = gap_linear_map(I, i, J)
    ambient = len(K) - 1

    def from_outer(a: int, b: int) -> Subspace:
        return _push(c1.space(a, b), cols_i, ambient)

    def from_inner(a: int, b: int) -> Subspace:
        return _push(c2.space(a, b), cols_j, ambient)

    block = coordinate_subspace(K, J.min(), J.max())
    spaces: dict[Interval, Subspace] = {}
    for a, b in proper_intervals(K):
        a_inner, b_inner = a in J, b in J
        if not a_inner and not b_inner:
            if I.before(b, i):
                V = from_outer(a, b)
            elif I.before(i, a):
                V = from_outer(a, b)
            else:
                V = from_outer(a, b) + block
        elif a_inner and b_inner:
            if (a, b) == (J.min(), J.max()):
                V = from_outer(i, i) + block
            else:
                V = from_inner(a, b)
        elif not a_inner:
            if b == J.max():
                V = from_outer(a, i) + block
            else:
                V = from_outer(a, I.predecessor(i)) + coordinate_subspace(
                    K, J.min(), J.successor(b)
                )
        else:
            if a == J.min():
                V = from_outer(i, b) + block
            else:
                V = from_outer(I.successor(i), b) + coordinate_subspace(
                    K, J.predecessor(a), J.max()
                )
        spaces[(a, b)] = V
    return SubspaceConfig(K, spaces)


def relabel_config(c: SubspaceConfig, target: Ordinal) -> SubspaceConfig:
    """Rename the labels of a configuration along the order isomorphism.

    Gap columns are positional, so the matrices carry over unchanged;
    only the interval keys are renamed.
    """
    if len(target) != len(c.ordinal):
        raise ValueError("target ordinal has the wrong size")
    rename = dict(zip(c.ordinal.elements, target.elements))
    return SubspaceConfig(
        target,
        {(rename[a], rename[b]): V for (a, b), V in c.spaces.items()},
    )


def compose_standard(
    c1: SubspaceConfig, i: int, c2: SubspaceConfig
) -> SubspaceConfig:
    """Composition for standard-labeled inputs, restandardized.

    Both configurations may use overlapping labels (typically 1..m and
    1..k); the inner one is shifted to fresh labels before composing and
    the composite is relabeled to the standard ordinal.
    """
    offset = max(c1.ordinal.elements) + 1 - min(c2.ordinal.elements)
    shifted = relabel_config(
        c2, Ordinal([x + offset for x in c2.ordinal.elements])
    )
    out = brick_compose(c1, i, shifted)
    return relabel_config(out, Ordinal.standard(len(out.ordinal)))


def brick_decompose(
    c: SubspaceConfig, l: int, r: int, star: int | None = None
) -> tuple[SubspaceConfig, SubspaceConfig]:
    """Invert the composition across the one-edge stratum over [l, r].

    The configuration must lie in the closure of that stratum, which
    means V_{l,p(r)} = V_{s(l),r} = G(l, r).  Returns the outer factor,
    over the ordinal with [l, r] collapsed to the fresh label ``star``,
    and the inner factor over [l, r]; composing them back at ``star``
    recovers the input exactly.
    """
    I = c.ordinal
    if l not in I or r not in I or not I.before(l, r):
        raise ValueError("[l, r] must be an interval of at least two elements")
    inner_elems = I.interval(l, r)
    if len(inner_elems) == len(I):
        raise ValueError("[l, r] must be a proper interval")
    edge_space = coordinate_subspace(I, l, r)
    if c.space(l, I.predecessor(r)) != edge_space or c.space(
        I.successor(l), r
    ) != edge_space:
        raise ValueError(
            f"configuration is not in the closure of the stratum over "
            f"[{l},{r}]"
        )
    if star is None:
        star = max(I.elements) + 1
    elif star in I:
        raise ValueError("star label must be fresh")
    lo, hi = I.position(l), I.position(r)
    outer = Ordinal(I.elements[:lo] + (star,) + I.elements[hi + 1 :])
    inner = Ordinal(inner_elems)
    K, cols_i, cols_j = gap_linear_map(outer, star, inner)
    if K != I:
        raise AssertionError("decomposition ordinals do not recompose")
    inner_spaces = {
        (a, b): _pull(c.spaces[(a, b)], cols_j)
        for a, b in proper_intervals(inner)
    }
    outer_spaces: dict[Interval, Subspace] = {}
    for a, b in proper_intervals(outer):
        a_k = l if a == star else a
        b_k = r if b == star else b
        outer_spaces[(a, b)] = _pull(c.space(a_k, b_k), cols_i)
    return (
        SubspaceConfig(outer, outer_spaces),
        SubspaceConfig(inner, inner_spaces),
    )


def _is_left_coordinate(c: SubspaceConfig, k: int) -> bool:
    I = c.ordinal
    if k == I.max():
        return False
    return c.spaces[(k, k)] == coordinate_subspace(I, k, I.successor(k))


def _is_right_coordinate(c: SubspaceConfig, k: int) -> bool:
    I = c.ordinal
    if k == I.min():
        return False
    return c.spaces[(k, k)] == coordinate_subspace(I, I.predecessor(k), k)


def stratum_of(c: SubspaceConfig) -> PlanarTree:
    """The planar tree whose open stratum contains the configuration.

    The diagonal spaces V_{k,k} are scanned left to right: at the first
    element r whose space is the coordinate line on its left gap, the
    last earlier element l whose space is the coordinate line on its
    right gap closes an interval [l, r] whose strictly interior diagonal
    spaces are non-coordinate.  Such an interval always exists because
    the two ends of the ordinal qualify; it carries the lowest vertex of
    the tree.  If it is everything, the configuration is generic and the
    tree is a corolla; otherwise the interval is peeled off with
    :func:`brick_decompose` and the outer factor is processed
    recursively.
    """
    I = c.ordinal
    n = len(I)
    if n == 1:
        return PlanarTree.leaf()
    if n == 2:
        return PlanarTree.corolla(2)
    r = next(k for k in I if _is_right_coordinate(c, k))
    l = next(
        k
        for k in reversed(I.interval(I.min(), r))
        if _is_left_coordinate(c, k)
    )
    if (l, r) == (I.min(), I.max()):
        return PlanarTree.corolla(n)
    outer, inner = brick_decompose(c, l, r)
    slot = I.position(l) + 1
    return stratum_of(outer).graft(slot, stratum_of(inner))


def stratum_dimension(T: PlanarTree) -> int:
    """Dimension n - 2 - (number of internal edges) of the stratum of T."""
    if not T.is_operadic() or T.n_leaves < 2:
        raise ValueError("strata are indexed by operadic trees on >= 2 leaves")
    return T.n_leaves - 2 - len(T.internal_edges())


# -- samplers -------------------------------------------------------------


def _nonzero_fraction(rng: Random) -> Fraction:
    sign = rng.choice((-1, 1))
    return Fraction(sign * rng.randint(1, 6), rng.randint(1, 6))


def random_corolla_config(I: Ordinal, rng: Random) -> SubspaceConfig:
    """A random configuration from the open stratum over I.

    Every interior diagonal space is a line with nonzero coordinates on
    both of its gaps (one free multiplicative parameter each), and every
    other space is the sum of the diagonal lines it must contain.
    """
    n = len(I)
    if n < 2:
        raise ValueError("the open stratum needs at least two elements")
    ambient = n - 1
    gaps = gap_set(I)
    column = {gap: c for c, gap in enumerate(gaps)}

    def unit(gap: GapPair) -> list[Fraction]:
        row = [Fraction(0)] * ambient
        row[column[gap]] = Fraction(1)
        return row

    lines: dict[int, list[Fraction]] = {}
    for k in I:
        if k == I.min():
            lines[k] = unit(GapPair(k, I.successor(k)))
        elif k == I.max():
            lines[k] = unit(GapPair(I.predecessor(k), k))
        else:
            left = unit(GapPair(I.predecessor(k), k))
            right = unit(GapPair(k, I.successor(k)))
            a, b = _nonzero_fraction(rng), _nonzero_fraction(rng)
            lines[k] = [a * x + b * y for x, y in zip(left, right)]
    spaces = {
        (a, b): Subspace(ambient, [lines[k] for k in I.interval(a, b)])
        for a, b in proper_intervals(I)
    }
    return SubspaceConfig(I, spaces)


def random_config(
    T: PlanarTree, rng: Random, ordinal: Ordinal | None = None
) -> SubspaceConfig:
    """A random configuration from the open stratum of the tree T.

    Built stratum-first: one corolla-stratum configuration per vertex,
    composed along the tree, then relabeled to the target ordinal
    (standard by default).  The result always satisfies
    ``stratum_of(config) == T``.
    """
    if ordinal is None:
        ordinal = Ordinal.standard(T.n_leaves)
    if len(ordinal) != T.n_leaves:
        raise ValueError("ordinal size must match the leaf count")
    fresh = itertools.count(1)

    def build(t: PlanarTree) -> SubspaceConfig:
        if t.is_leaf:
            return brick_identity(next(fresh))
        labels = [next(fresh) for _ in t.children]
        config = random_corolla_config(Ordinal(labels), rng)
        for label, child in zip(labels, t.children):
            if not child.is_leaf:
                config = brick_compose(config, label, build(child))
        return config

    return relabel_config(build(T), ordinal)


# -- serialization --------------------------------------------------------


def config_to_text(c: SubspaceConfig) -> str:
    """Serialize as labeled matrix blocks, one per proper interval."""
    lines = ["ordinal " + " ".join(str(x) for x in c.ordinal.elements)]
    for a, b in proper_intervals(c.ordinal):
        lines.append(f"space {a} {b}")
        for row in c.spaces[(a, b)].basis:
            lines.append("  " + " ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def config_from_text(text: str) -> SubspaceConfig:
    """Parse the output of :func:`config_to_text`; validates on build."""
    ordinal: Ordinal | None = None
    spaces: dict[Interval, list[list[Fraction]]] = {}
    current: Interval | None = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("ordinal "):
            ordinal = Ordinal(int(x) for x in line.split()[1:])
        elif line.startswith("space "):
            _, a, b = line.split()
            current = (int(a), int(b))
            spaces[current] = []
        else:
            if current is None:
                raise ValueError("matrix row before any space header")
            spaces[current].append([Fraction(x) for x in line.split()])
    if ordinal is None:
        raise ValueError("missing ordinal header")
    ambient = len(ordinal) - 1
    return SubspaceConfig(
        ordinal,
        {key: Subspace(ambient, rows) for key, rows in spaces.items()},
    )
