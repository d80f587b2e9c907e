"""Planar rooted trees with ordered leaves.

Trees are immutable and hashable.  Leaves are numbered 1..n left to
right.  The combinatorial API (enumeration, grafting, contraction,
closure order) works with *operadic* trees, whose internal vertices all
have at least two inputs; the structure itself also admits unary
vertices because decorated tree monomials over alphabets with unary
generators need them.

Canonical serialization is the preorder sequence of child counts, with 0
for a leaf; the canonical text form uses nested parentheses around leaf
labels, as in ((1,2),3) for the left comb on three leaves.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

Path = tuple[int, ...]


class PlanarTree:
    """A planar rooted tree; a node with no children is a leaf."""

    __slots__ = ("children", "n_leaves", "_serial")

    def __init__(self, children: tuple["PlanarTree", ...] = ()):
        self.children = tuple(children)
        if self.children:
            self.n_leaves = sum(c.n_leaves for c in self.children)
        else:
            self.n_leaves = 1
        self._serial: tuple[int, ...] | None = None

    # -- basic structure -------------------------------------------------

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @classmethod
    def leaf(cls) -> "PlanarTree":
        return _LEAF

    @classmethod
    def corolla(cls, n: int) -> "PlanarTree":
        """One internal vertex with n leaves."""
        if n < 2:
            raise ValueError("a corolla needs at least two leaves")
        return cls((_LEAF,) * n)

    def serial(self) -> tuple[int, ...]:
        """Preorder child counts; 0 marks a leaf.  Uniquely determines the tree."""
        if self._serial is None:
            out: list[int] = []
            stack = [self]
            while stack:
                t = stack.pop()
                out.append(len(t.children))
                stack.extend(reversed(t.children))
            self._serial = tuple(out)
        return self._serial

    def __eq__(self, other) -> bool:
        return isinstance(other, PlanarTree) and self.serial() == other.serial()

    def __hash__(self):
        return hash(self.serial())

    def __repr__(self):
        return f"PlanarTree.from_text({self.to_text()!r})"

    def is_operadic(self) -> bool:
        """True when every internal vertex has at least two inputs."""
        return all(c != 1 for c in self.serial())

    def is_binary(self) -> bool:
        return all(c in (0, 2) for c in self.serial())

    # -- vertices and edges ----------------------------------------------

    def subtree(self, path: Path) -> "PlanarTree":
        t = self
        for k in path:
            t = t.children[k]
        return t

    def vertices(self) -> list[Path]:
        """Paths to internal vertices, in preorder."""
        out: list[Path] = []

        def walk(t: PlanarTree, path: Path):
            if not t.is_leaf:
                out.append(path)
                for k, c in enumerate(t.children):
                    walk(c, path + (k,))

        walk(self, ())
        return out

    def n_vertices(self) -> int:
        return sum(1 for c in self.serial() if c)

    def internal_edges(self) -> list[Path]:
        """Paths to internal vertices other than the root."""
        return [p for p in self.vertices() if p]

    def leaf_span(self, path: Path) -> tuple[int, int]:
        """Inclusive range (first, last) of leaf labels below the vertex."""
        first = 1
        t = self
        for k in path:
            first += sum(c.n_leaves for c in t.children[:k])
            t = t.children[k]
        return first, first + t.n_leaves - 1

    def leaf_path(self, i: int) -> Path:
        """Path from the root to leaf i."""
        if not 1 <= i <= self.n_leaves:
            raise ValueError("leaf index out of range")
        t, path = self, ()
        while not t.is_leaf:
            for k, c in enumerate(t.children):
                if i <= c.n_leaves:
                    path += (k,)
                    t = c
                    break
                i -= c.n_leaves
        return path

    # -- text form --------------------------------------------------------

    def to_text(self) -> str:
        def fmt(t: PlanarTree, next_leaf: list[int]) -> str:
            if t.is_leaf:
                s = str(next_leaf[0])
                next_leaf[0] += 1
                return s
            return "(" + ",".join(fmt(c, next_leaf) for c in t.children) + ")"

        return fmt(self, [1])

    @classmethod
    def from_text(cls, text: str) -> "PlanarTree":
        """Parse the nested-parentheses form; leaf labels must read 1..n."""
        text = text.replace(" ", "")
        pos = 0

        def parse() -> PlanarTree:
            nonlocal pos
            if text[pos] == "(":
                pos += 1
                children = [parse()]
                while text[pos] == ",":
                    pos += 1
                    children.append(parse())
                if text[pos] != ")":
                    raise ValueError(f"expected ')' at position {pos} in {text!r}")
                pos += 1
                return cls(tuple(children))
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            if start == pos:
                raise ValueError(f"expected leaf label at position {pos} in {text!r}")
            labels.append(int(text[start:pos]))
            return _LEAF

        labels: list[int] = []
        tree = parse()
        if pos != len(text):
            raise ValueError(f"trailing input at position {pos} in {text!r}")
        if labels != list(range(1, len(labels) + 1)):
            raise ValueError("leaf labels must read 1..n in planar order")
        return tree

    # -- operadic structure ------------------------------------------------

    def graft(self, i: int, other: "PlanarTree") -> "PlanarTree":
        """Replace leaf i with the tree `other`."""
        if not 1 <= i <= self.n_leaves:
            raise ValueError("leaf index out of range")
        if self.is_leaf:
            return other

        def go(t: PlanarTree, i: int) -> PlanarTree:
            new_children = []
            for c in t.children:
                if 1 <= i <= c.n_leaves:
                    new_children.append(other if c.is_leaf else go(c, i))
                else:
                    new_children.append(c)
                i -= c.n_leaves
            return PlanarTree(tuple(new_children))

        return go(self, i)

    def contract(self, edge: Path) -> "PlanarTree":
        """Contract the internal edge above the vertex at `edge`."""
        if not edge:
            raise ValueError("cannot contract at the root")
        target = self.subtree(edge)
        if target.is_leaf:
            raise ValueError("cannot contract a leaf edge")

        def go(t: PlanarTree, path: Path) -> PlanarTree:
            if len(path) == 1:
                k = path[0]
                merged = t.children[:k] + t.children[k].children + t.children[k + 1 :]
                return PlanarTree(merged)
            k = path[0]
            return PlanarTree(
                t.children[:k] + (go(t.children[k], path[1:]),) + t.children[k + 1 :]
            )

        return go(self, edge)

    def contractions(self) -> list["PlanarTree"]:
        """All single internal-edge contractions."""
        return [self.contract(e) for e in self.internal_edges()]


_LEAF = PlanarTree(())


def enumerate_trees(n: int, binary_only: bool = False) -> list[PlanarTree]:
    """All planar trees with n leaves and internal vertices of >= 2 inputs.

    Trees come in a deterministic canonical order (lexicographic on the
    serialization).  With binary_only, only trees with all vertices of
    exactly two inputs are produced.
    """
    return sorted(_enum(n, binary_only), key=PlanarTree.serial)


@lru_cache(maxsize=None)
def _enum(n: int, binary_only: bool) -> tuple[PlanarTree, ...]:
    if n == 1:
        return (_LEAF,)
    out: list[PlanarTree] = []
    arities = (2,) if binary_only else range(2, n + 1)
    for k in arities:
        for comp in compositions(n, k):
            for kids in _product_trees(comp, binary_only):
                out.append(PlanarTree(kids))
    return tuple(out)


def _product_trees(comp: tuple[int, ...], binary_only: bool) -> Iterator[tuple[PlanarTree, ...]]:
    if not comp:
        yield ()
        return
    for head in _enum(comp[0], binary_only):
        for rest in _product_trees(comp[1:], binary_only):
            yield (head,) + rest


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Ordered sequences of k positive integers with sum n."""
    if k == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def one_edge_trees(n: int) -> list[PlanarTree]:
    """Trees with exactly two internal vertices, canonical order."""
    return [t for t in enumerate_trees(n) if t.n_vertices() == 2]


def contraction_closure(t: PlanarTree) -> set[PlanarTree]:
    """All trees obtainable from t by contracting internal edges, incl. t."""
    seen = {t}
    frontier = [t]
    while frontier:
        cur = frontier.pop()
        for c in cur.contractions():
            if c not in seen:
                seen.add(c)
                frontier.append(c)
    return seen


def catalan(n: int) -> int:
    from math import comb

    return comb(2 * n, n) // (n + 1)
