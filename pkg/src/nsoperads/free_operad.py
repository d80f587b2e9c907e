"""The free nonsymmetric operad on graded generators.

Elements are rational linear combinations of tree monomials: planar
rooted trees whose vertices are decorated by generators matching their
number of inputs.  Unary generators are allowed.

Sign convention.  A tree monomial stands for the tensor product of its
decorations read in planar preorder (root first, then subtrees left to
right).  Grafting b into input i of a is the monomial obtained by
substitution, times the Koszul sign (-1)^(|b| * w), where w is the total
degree of the decorations of a that lie strictly to the right of the
path from the root of a to input i, i.e. the decorations read after
passing that input in preorder.  All operad axioms then hold with the
usual graded signs, and the infinitesimal composition of two generator
corollas carries no sign, so printed relations are literal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Callable, Iterable, Mapping, Optional, Union

from .trees import PlanarTree


@dataclass(frozen=True)
class Generator:
    """An operation symbol with an arity >= 1 and a homological degree."""

    name: str
    arity: int
    degree: int = 0

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError("generator arity must be at least 1")
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", self.name):
            raise ValueError(f"generator name {self.name!r} must be an identifier")

    def corolla(self) -> "TreeMonomial":
        return TreeMonomial(self, (None,) * self.arity)

    def __repr__(self):
        return f"Generator({self.name!r}, arity={self.arity}, degree={self.degree})"


Child = Optional["TreeMonomial"]  # None is a bare input (leaf)


class TreeMonomial:
    """A planar tree with generator-decorated vertices."""

    __slots__ = ("gen", "children", "arity", "degree", "weight", "_key", "_hash")

    def __init__(self, gen: Generator, children: tuple[Child, ...]):
        if len(children) != gen.arity:
            raise ValueError(f"{gen.name} needs {gen.arity} children, got {len(children)}")
        self.gen = gen
        self.children = children
        self.arity = sum(1 if c is None else c.arity for c in children)
        self.degree = gen.degree + sum(c.degree for c in children if c is not None)
        self.weight = 1 + sum(c.weight for c in children if c is not None)
        shape: list[int] = []
        decs: list[tuple[str, int, int]] = []
        self._collect(shape, decs)
        self._key = (tuple(shape), tuple(decs))
        self._hash = hash(self._key)

    def _collect(self, shape: list[int], decs: list[tuple[str, int, int]]):
        shape.append(len(self.children))
        decs.append((self.gen.name, self.gen.arity, self.gen.degree))
        for c in self.children:
            if c is None:
                shape.append(0)
            else:
                c._collect(shape, decs)

    def key(self) -> tuple:
        """Canonical comparable form: (shape serialization, decorations)."""
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, TreeMonomial) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"TreeMonomial<{self.to_text()}>"

    # -- structure ---------------------------------------------------------

    def shape(self) -> PlanarTree:
        def build(m: TreeMonomial) -> PlanarTree:
            return PlanarTree(
                tuple(PlanarTree.leaf() if c is None else build(c) for c in m.children)
            )

        return build(self)

    def vertices_preorder(self) -> list[tuple[tuple[int, ...], Generator]]:
        """(path, generator) pairs in preorder; paths index children."""
        out: list[tuple[tuple[int, ...], Generator]] = []

        def walk(m: TreeMonomial, path: tuple[int, ...]):
            out.append((path, m.gen))
            for k, c in enumerate(m.children):
                if c is not None:
                    walk(c, path + (k,))

        walk(self, ())
        return out

    def replace_vertex(self, path: tuple[int, ...], gen: Generator) -> "TreeMonomial":
        """Same tree with the decoration at `path` swapped for `gen`."""
        if not path:
            if gen.arity != self.gen.arity:
                raise ValueError("replacement arity mismatch")
            return TreeMonomial(gen, self.children)
        k = path[0]
        child = self.children[k]
        if child is None:
            raise ValueError("path runs into a leaf")
        new = child.replace_vertex(path[1:], gen)
        return TreeMonomial(self.gen, self.children[:k] + (new,) + self.children[k + 1 :])

    def prefix_degree(self, path: tuple[int, ...]) -> int:
        """Total degree of decorations strictly before `path` in preorder."""
        total = 0
        m = self
        for k in path:
            total += m.gen.degree
            for c in m.children[:k]:
                if c is not None:
                    total += c.degree
            m = m.children[k]
            if m is None:
                raise ValueError("path runs into a leaf")
        return total

    def path_sequence(self) -> tuple[tuple[str, ...], ...]:
        """For each input in planar order, the generator names root to input."""
        out: list[tuple[str, ...]] = []

        def walk(m: TreeMonomial, prefix: tuple[str, ...]):
            prefix = prefix + (m.gen.name,)
            for c in m.children:
                if c is None:
                    out.append(prefix)
                else:
                    walk(c, prefix)

        walk(self, ())
        return tuple(out)

    def generator_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for _, g in self.vertices_preorder():
            counts[g.name] = counts.get(g.name, 0) + 1
        return counts

    def to_text(self) -> str:
        def fmt(m: TreeMonomial, next_leaf: list[int]) -> str:
            parts = []
            for c in m.children:
                if c is None:
                    parts.append(str(next_leaf[0]))
                    next_leaf[0] += 1
                else:
                    parts.append(fmt(c, next_leaf))
            return f"{m.gen.name}({','.join(parts)})"

        return fmt(self, [1])


def monomial_compose(a: TreeMonomial, i: int, b: TreeMonomial) -> tuple[int, TreeMonomial]:
    """Graft b into input i of a.  Returns (sign, monomial)."""
    if not 1 <= i <= a.arity:
        raise ValueError(f"input index {i} out of range 1..{a.arity}")
    tail, mono = _graft(a, i, b)
    sign = -1 if (b.degree % 2) and (tail % 2) else 1
    return sign, mono


def _graft(a: TreeMonomial, i: int, b: TreeMonomial) -> tuple[int, TreeMonomial]:
    """Substitute and report the degree of decorations right of the path."""
    new_children: list[Child] = []
    tail = 0
    found = False
    for c in a.children:
        size = 1 if c is None else c.arity
        if not found and i <= size:
            if c is None:
                new_children.append(b)
            else:
                sub_tail, sub = _graft(c, i, b)
                tail += sub_tail
                new_children.append(sub)
            found = True
        else:
            new_children.append(c)
            if found and c is not None:
                tail += c.degree
        if not found:
            i -= size
    return tail, TreeMonomial(a.gen, tuple(new_children))


class OperadElement:
    """A rational linear combination of tree monomials of one arity."""

    __slots__ = ("coeffs", "arity")

    def __init__(self, coeffs: Mapping[TreeMonomial, Fraction] | Iterable = ()):
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = list(coeffs)
        clean: dict[TreeMonomial, Fraction] = {}
        for mono, c in items:
            c = Fraction(c)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
        clean = {m: c for m, c in clean.items() if c}
        arities = {m.arity for m in clean}
        if len(arities) > 1:
            raise ValueError("element mixes arities")
        self.coeffs = clean
        self.arity = arities.pop() if arities else None

    @classmethod
    def zero(cls) -> "OperadElement":
        return cls({})

    @classmethod
    def from_monomial(cls, mono: TreeMonomial, coeff=1) -> "OperadElement":
        return cls({mono: Fraction(coeff)})

    @classmethod
    def from_generator(cls, gen: Generator, coeff=1) -> "OperadElement":
        return cls({gen.corolla(): Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, OperadElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def degree(self) -> int:
        """Homological degree; requires a homogeneous element."""
        degs = {m.degree for m in self.coeffs}
        if len(degs) != 1:
            raise ValueError("element is not degree homogeneous")
        return degs.pop()

    def degrees(self) -> set[int]:
        return {m.degree for m in self.coeffs}

    def homogeneous_part(self, degree: int) -> "OperadElement":
        return OperadElement({m: c for m, c in self.coeffs.items() if m.degree == degree})

    def __add__(self, other: "OperadElement") -> "OperadElement":
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, Fraction(0)) + c
        return OperadElement(out)

    def __sub__(self, other: "OperadElement") -> "OperadElement":
        return self + (-other)

    def __neg__(self) -> "OperadElement":
        return OperadElement({m: -c for m, c in self.coeffs.items()})

    def __mul__(self, scalar) -> "OperadElement":
        s = Fraction(scalar)
        return OperadElement({m: c * s for m, c in self.coeffs.items()})

    __rmul__ = __mul__

    def compose(self, i: int, other: "OperadElement") -> "OperadElement":
        """Infinitesimal composition, plugging `other` into input i."""
        out: dict[TreeMonomial, Fraction] = {}
        for ma, ca in self.coeffs.items():
            for mb, cb in other.coeffs.items():
                sign, m = monomial_compose(ma, i, mb)
                c = out.get(m, Fraction(0)) + ca * cb * sign
                if c:
                    out[m] = c
                else:
                    out.pop(m, None)
        return OperadElement(out)

    def map_monomials(self, f: Callable[[TreeMonomial], "OperadElement"]) -> "OperadElement":
        total = OperadElement.zero()
        for m, c in self.coeffs.items():
            total = total + f(m) * c
        return total

    def terms_sorted(self, order: Optional["MonomialOrder"] = None) -> list[tuple[TreeMonomial, Fraction]]:
        if order is None:
            return sorted(self.coeffs.items(), key=lambda t: t[0].key())
        return sorted(self.coeffs.items(), key=cmp_to_key(lambda s, t: order.compare(s[0], t[0])), reverse=True)

    def to_text(self, order: Optional["MonomialOrder"] = None) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, (mono, c) in enumerate(self.terms_sorted(order)):
            mag = abs(c)
            piece = f"{mag} * {mono.to_text()}"
            if k == 0:
                parts.append(piece if c > 0 else f"-{piece}")
            else:
                parts.append(("+ " if c > 0 else "- ") + piece)
        return " ".join(parts)

    def __repr__(self):
        return f"OperadElement<{self.to_text()}>"


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[()*,+-]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot tokenize {text!r} at position {pos}")
        pos = m.end()
        for kind in ("num", "name", "sym"):
            val = m.group(kind)
            if val is not None:
                out.append((kind, val))
                break
    return out


def parse_element(text: str, alphabet: Iterable[Generator]) -> OperadElement:
    """Parse 'coeff * gen(child,...,child) +/- ...' over the given alphabet.

    Children are monomials or input positions written as integers; the
    positions must read 1..n left to right.  Coefficients are optional
    rationals like 2, -1/3.
    """
    gens = {g.name: g for g in alphabet}
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take(kind=None, value=None):
        nonlocal pos
        k, v = peek()
        if k is None or (kind and k != kind) or (value and v != value):
            raise ValueError(f"unexpected token {v!r} in {text!r}")
        pos += 1
        return v

    def parse_mono() -> tuple[TreeMonomial, int]:
        name = take("name")
        if name not in gens:
            raise ValueError(f"unknown generator {name!r}")
        g = gens[name]
        take("sym", "(")
        children: list[Child] = []
        leaf_count = 0
        while True:
            k, v = peek()
            if k == "num":
                take("num")
                children.append(None)
                leaf_count += 1
            else:
                sub, sub_leaves = parse_mono()
                children.append(sub)
                leaf_count += sub_leaves
            k, v = peek()
            if v == ",":
                take("sym", ",")
                continue
            take("sym", ")")
            break
        return TreeMonomial(g, tuple(children)), leaf_count

    def parse_term() -> OperadElement:
        coeff = Fraction(1)
        k, v = peek()
        if k == "num":
            nxt = tokens[pos + 1] if pos + 1 < len(tokens) else (None, None)
            if nxt == ("sym", "*"):
                coeff = Fraction(take("num"))
                take("sym", "*")
        k, v = peek()
        if k == "name":
            mono, _ = parse_mono()
            return OperadElement({mono: coeff})
        raise ValueError(f"expected a monomial in {text!r}")

    result = OperadElement.zero()
    sign = 1
    k, v = peek()
    if v in ("+", "-"):
        take()
        sign = -1 if v == "-" else 1
    while True:
        result = result + parse_term() * sign
        k, v = peek()
        if k is None:
            break
        if v == "+":
            take()
            sign = 1
        elif v == "-":
            take()
            sign = -1
        else:
            raise ValueError(f"unexpected token {v!r} in {text!r}")
    return result


# -- monomial orders ---------------------------------------------------------


@dataclass(frozen=True)
class MonomialOrder:
    """An admissible total order on same-arity tree monomials.

    kind 'path-lex' compares path sequences lexicographically; per input,
    the root-to-input generator words compare by precedence letter by
    letter, a proper prefix losing to its extension.  kind
    'degree-path-lex' compares total homological degree first, and
    'weight-first-path-lex' compares the total generator weight first
    (per-generator weights supplied).  `precedence` lists generator
    names from largest to smallest.  With reverse=True all comparisons
    flip, giving the opposite order used for dual Groebner bases.
    """

    precedence: tuple[str, ...]
    kind: str = "path-lex"
    weights: tuple[tuple[str, int], ...] = ()
    reverse: bool = False

    def __post_init__(self):
        if self.kind not in ("path-lex", "degree-path-lex", "weight-first-path-lex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == "weight-first-path-lex" and not self.weights:
            raise ValueError("weight-first order needs generator weights")

    def _rank(self, name: str) -> int:
        try:
            return len(self.precedence) - self.precedence.index(name)
        except ValueError:
            raise KeyError(f"generator {name!r} not covered by order precedence")

    def weight_of(self, mono: TreeMonomial) -> int:
        table = dict(self.weights)
        return sum(table[g.name] for _, g in mono.vertices_preorder())

    def sort_key(self, mono: TreeMonomial):
        path_key = tuple(
            tuple(self._rank(name) for name in word) for word in mono.path_sequence()
        )
        if self.kind == "path-lex":
            return path_key
        if self.kind == "degree-path-lex":
            return (mono.degree, path_key)
        table = dict(self.weights)
        w = sum(table[g.name] for _, g in mono.vertices_preorder())
        return (w, path_key)

    def compare(self, a: TreeMonomial, b: TreeMonomial) -> int:
        """1 when a is larger, -1 when smaller, 0 when equal."""
        if a.arity != b.arity:
            raise ValueError("cannot compare monomials of different arities")
        ka, kb = self.sort_key(a), self.sort_key(b)
        out = 1 if ka > kb else (-1 if ka < kb else 0)
        return -out if self.reverse else out

    def greater(self, a: TreeMonomial, b: TreeMonomial) -> bool:
        return self.compare(a, b) > 0

    def leading_monomial(self, elem: OperadElement) -> TreeMonomial:
        if elem.is_zero():
            raise ValueError("zero element has no leading monomial")
        best = None
        for m in elem.coeffs:
            if best is None or self.compare(m, best) > 0:
                best = m
        return best

    def opposite(self) -> "MonomialOrder":
        return MonomialOrder(self.precedence, self.kind, self.weights, not self.reverse)


def operadic_suspension(
    gens: Iterable[Generator], power: int = 1
) -> dict[Generator, Generator]:
    """Map each generator to its suspension: degree shifted by power*(arity-1)."""
    return {
        g: Generator(g.name, g.arity, g.degree + power * (g.arity - 1)) for g in gens
    }


def suspension_transport_sign(m: TreeMonomial) -> int:
    """Sign relating a monomial to its image under operadic suspension.

    The suspension of an operad is its Hadamard product with the
    endomorphism operad of a one-dimensional space in degree one.  Writing
    a monomial as the composite of its root corolla with the child
    subtrees grafted right to left, each graft of a subtree of arity q at
    slot i into a partial composite of degree d contributes a Koszul
    factor (-1)^((q-1)(d+i-1)): the inner endomorphism-operad factor of
    degree 1-q moves past i-1 suspension symbols and past the partial
    composite.  For a two-vertex monomial g at the root with h in slot i
    this reduces to (-1)^((arity(h)-1)(deg(g)+i-1)).
    """
    sign = 1
    acc = m.gen.degree
    for slot in range(m.gen.arity, 0, -1):
        child = m.children[slot - 1]
        if child is None:
            continue
        sign *= suspension_transport_sign(child)
        if (child.arity - 1) * (acc + slot - 1) % 2:
            sign = -sign
        acc += child.degree
    return sign


def suspend_element(
    elem: OperadElement,
    mapping: dict[Generator, Generator],
    power: int = 1,
) -> OperadElement:
    """Transport an element along the suspension defined by mapping.

    Coefficients pick up the transport sign once per odd power; an even
    power only regrades the generators.
    """

    def rebuild(m: TreeMonomial) -> TreeMonomial:
        kids = tuple(None if c is None else rebuild(c) for c in m.children)
        return TreeMonomial(mapping[m.gen], kids)

    twisted = {}
    for m, c in elem.coeffs.items():
        if power % 2 and suspension_transport_sign(m) < 0:
            c = -c
        twisted[rebuild(m)] = c
    return OperadElement(twisted)


def substitute(elem: OperadElement,
               images: Mapping[str, OperadElement]) -> OperadElement:
    """Apply the operad morphism sending each generator to its image.

    Images are keyed by generator name and must match the generator's
    arity; matching the degree keeps the map degree-preserving but is
    not required.  A tree monomial is evaluated by composing the images
    in the same right-to-left graft order that rebuilds the monomial
    from corollas, so both sides acquire identical Koszul signs; the
    sign the rebuild produces on the source side is divided back out.
    """

    def image_of(mono: TreeMonomial) -> OperadElement:
        target = images[mono.gen.name]
        if target.arity != mono.gen.arity:
            raise ValueError(
                f"image of {mono.gen.name!r} has arity {target.arity}, "
                f"expected {mono.gen.arity}"
            )
        source = OperadElement.from_monomial(mono.gen.corolla())
        for slot in range(mono.gen.arity, 0, -1):
            child = mono.children[slot - 1]
            if child is None:
                continue
            source = source.compose(slot, OperadElement.from_monomial(child))
            target = target.compose(slot, image_of(child))
        (eps,) = set(source.coeffs.values())
        return target * eps

    out = OperadElement.zero()
    for mono, coeff in elem.coeffs.items():
        out = out + image_of(mono) * coeff
    return out
