"""Exact multilinear algebra on finite graded spaces.

Operators on graded vector spaces are stored as sparse tensors of
rational entries indexed by basis elements, with degree homogeneity
enforced on construction.  Slot composition follows the Koszul sign
rule: moving an operator of odd degree past graded inputs flips signs.
The module also provides truncated tensor algebras (words above a fixed
length are zero), which are the standard non-unital test bed for
differential operators of higher noncommutative order, and a JSON
loader for algebra fixtures.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iter_product
from typing import Iterable, Mapping, Sequence

Scalar = Fraction | int
Entries = Mapping[tuple[int, tuple[int, ...]], Scalar]

__all__ = [
    "GradedSpace",
    "MultilinearOp",
    "EndoSeries",
    "TensorAlgebraTrunc",
    "load_graded_algebra",
    "dump_graded_algebra",
]


# -- graded spaces ----------------------------------------------------------


@dataclass(frozen=True)
class GradedSpace:
    """A finite graded vector space with a fixed ordered basis.

    ``degrees[i]`` is the degree of the i-th basis vector; ``labels``
    names the basis for readable reports.
    """

    degrees: tuple[int, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        degrees = tuple(int(d) for d in self.degrees)
        labels = tuple(self.labels) or tuple(
            f"e{d}_{i}" for i, d in enumerate(degrees)
        )
        if len(labels) != len(degrees):
            raise ValueError("one label per basis vector")
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def ungraded(cls, dim: int) -> "GradedSpace":
        return cls(tuple([0] * dim), tuple(f"e{i+1}" for i in range(dim)))

    @classmethod
    def from_dims(cls, dims: Mapping[int, int]) -> "GradedSpace":
        degrees: list[int] = []
        labels: list[str] = []
        for d in sorted(dims):
            for i in range(dims[d]):
                degrees.append(d)
                labels.append(f"e{d}_{i+1}")
        return cls(tuple(degrees), tuple(labels))

    @property
    def total_dim(self) -> int:
        return len(self.degrees)

    @property
    def dims(self) -> dict[int, int]:
        table: dict[int, int] = {}
        for d in self.degrees:
            table[d] = table.get(d, 0) + 1
        return table


# -- multilinear operators --------------------------------------------------


@dataclass(frozen=True)
class MultilinearOp:
    """A degree-homogeneous multilinear map A^(arity) -> A.

    Entries are sparse: ``entries[(out, ins)]`` is the coefficient of
    the output basis vector ``out`` on the basis input tuple ``ins``.
    Construction drops zeros and checks that every entry respects the
    declared degree.
    """

    space: GradedSpace
    arity: int
    degree: int
    entries: Entries = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise ValueError("operators have arity at least one")
        degs = self.space.degrees
        dim = self.space.total_dim
        clean: dict[tuple[int, tuple[int, ...]], Fraction] = {}
        for (out, ins), raw in self.entries.items():
            coeff = Fraction(raw)
            if not coeff:
                continue
            ins = tuple(ins)
            if len(ins) != self.arity:
                raise ValueError("input tuple length must equal the arity")
            if not (0 <= out < dim) or any(not 0 <= i < dim for i in ins):
                raise ValueError("basis index out of range")
            if degs[out] != sum(degs[i] for i in ins) + self.degree:
                raise ValueError(
                    f"entry {out}<-{ins} violates degree {self.degree}"
                )
            clean[(out, ins)] = coeff
        object.__setattr__(self, "entries", clean)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, space: GradedSpace, arity: int, degree: int = 0) -> "MultilinearOp":
        return cls(space, arity, degree, {})

    @classmethod
    def identity(cls, space: GradedSpace) -> "MultilinearOp":
        return cls(
            space, 1, 0, {(i, (i,)): Fraction(1) for i in range(space.total_dim)}
        )

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultilinearOp):
            return NotImplemented
        return (
            self.space == other.space
            and self.arity == other.arity
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.space, self.arity, frozenset(self.entries.items())))

    def _merge_degree(self, other: "MultilinearOp") -> int:
        if self.is_zero():
            return other.degree
        if other.is_zero() or other.degree == self.degree:
            return self.degree
        raise ValueError("cannot combine operators of different degrees")

    def __add__(self, other: "MultilinearOp") -> "MultilinearOp":
        if self.space != other.space or self.arity != other.arity:
            raise ValueError("operators must share space and arity")
        entries = dict(self.entries)
        for key, coeff in other.entries.items():
            entries[key] = entries.get(key, Fraction(0)) + coeff
        return MultilinearOp(self.space, self.arity, self._merge_degree(other), entries)

    def __sub__(self, other: "MultilinearOp") -> "MultilinearOp":
        return self + (-other)

    def __neg__(self) -> "MultilinearOp":
        return self.scale(-1)

    def scale(self, scalar: Scalar) -> "MultilinearOp":
        coeff = Fraction(scalar)
        return MultilinearOp(
            self.space,
            self.arity,
            self.degree,
            {key: coeff * value for key, value in self.entries.items()},
        )

    # -- composition --------------------------------------------------------

    def compose_at(self, slot: int, inner: "MultilinearOp") -> "MultilinearOp":
        """Slot composition self o_slot inner with Koszul signs.

        The sign is (-1) to the power deg(inner) times the total degree
        of the inputs standing to the left of the slot.
        """
        if self.space != inner.space:
            raise ValueError("operators must act on the same space")
        if not 1 <= slot <= self.arity:
            raise ValueError("slot out of range")
        degs = self.space.degrees
        arity = self.arity + inner.arity - 1
        degree = self.degree + inner.degree
        by_output: dict[int, list[tuple[tuple[int, ...], Fraction]]] = {}
        for (mid, ins), coeff in inner.entries.items():
            by_output.setdefault(mid, []).append((ins, coeff))
        entries: dict[tuple[int, tuple[int, ...]], Fraction] = {}
        for (out, ins), outer_coeff in self.entries.items():
            mid = ins[slot - 1]
            if mid not in by_output:
                continue
            left = ins[: slot - 1]
            right = ins[slot:]
            sign = (
                -1 if (inner.degree % 2) and sum(degs[i] for i in left) % 2 else 1
            )
            for inner_ins, inner_coeff in by_output[mid]:
                key = (out, left + inner_ins + right)
                value = entries.get(key, Fraction(0)) + sign * outer_coeff * inner_coeff
                if value:
                    entries[key] = value
                else:
                    entries.pop(key, None)
        return MultilinearOp(self.space, arity, degree, entries)

    def insert(self, before: int, inner: "MultilinearOp") -> "MultilinearOp":
        """The map id^(before) tensor inner tensor id^(rest) composed into self.

        Equivalent to ``compose_at(before + 1, inner)``; provided for
        readability when expanding tensor-insert formulas.
        """
        return self.compose_at(before + 1, inner)

    # -- evaluation and reports ---------------------------------------------

    def apply_basis(self, ins: Sequence[int]) -> dict[int, Fraction]:
        """The output vector (sparse) on a tuple of basis indices."""
        ins = tuple(ins)
        out: dict[int, Fraction] = {}
        for (o, key), coeff in self.entries.items():
            if key == ins:
                out[o] = coeff
        return out

    def support(self) -> list[tuple[int, tuple[int, ...]]]:
        return sorted(self.entries)

    def describe(self, limit: int = 8) -> str:
        labels = self.space.labels
        parts = []
        for (out, ins), coeff in sorted(self.entries.items())[:limit]:
            args = ", ".join(labels[i] for i in ins)
            parts.append(f"({args}) -> {coeff} {labels[out]}")
        more = len(self.entries) - limit
        if more > 0:
            parts.append(f"... and {more} more entries")
        return "; ".join(parts) if parts else "0"


# -- series of unary operators ----------------------------------------------


@dataclass(frozen=True)
class EndoSeries:
    """A finite series r_0 + r_1 z + ... of unary operators.

    The formal parameter z carries degree ``z_degree`` (two by
    default), so a series of total degree d has components of degree
    d - z_degree * l.
    """

    space: GradedSpace
    ops: tuple[MultilinearOp, ...]
    degree: int = 0
    z_degree: int = 2

    def __post_init__(self) -> None:
        ops = tuple(self.ops)
        for l, op in enumerate(ops):
            if op.space != self.space or op.arity != 1:
                raise ValueError("series components must be unary on the space")
            if not op.is_zero() and op.degree != self.degree - self.z_degree * l:
                raise ValueError(
                    f"component {l} must have degree "
                    f"{self.degree - self.z_degree * l}"
                )
        object.__setattr__(self, "ops", ops)

    def component(self, l: int) -> MultilinearOp:
        if 0 <= l < len(self.ops):
            return self.ops[l]
        return MultilinearOp.zero(self.space, 1, self.degree - self.z_degree * l)

    def __len__(self) -> int:
        return len(self.ops)


# -- truncated tensor algebras ----------------------------------------------


@dataclass(frozen=True)
class TensorAlgebraTrunc:
    """The non-unital tensor algebra on V, truncated in word length.

    Words longer than ``truncation`` are identified with zero, so the
    concatenation product stays associative.  The basis consists of all
    words of length one up to the truncation, ordered by length and
    then lexicographically.
    """

    letters: GradedSpace
    truncation: int

    def __post_init__(self) -> None:
        if self.truncation < 1:
            raise ValueError("the truncation length must be at least one")
        words: list[tuple[int, ...]] = []
        for length in range(1, self.truncation + 1):
            words.extend(iter_product(range(self.letters.total_dim), repeat=length))
        object.__setattr__(self, "_words", tuple(words))
        object.__setattr__(
            self, "_index", {word: i for i, word in enumerate(words)}
        )
        degrees = tuple(
            sum(self.letters.degrees[i] for i in word) for word in words
        )
        labels = tuple(
            "|".join(self.letters.labels[i] for i in word) for word in words
        )
        object.__setattr__(self, "space", GradedSpace(degrees, labels))

    @property
    def words(self) -> tuple[tuple[int, ...], ...]:
        return self._words

    def index_of(self, word: Sequence[int]) -> int | None:
        """Flattened index of a word, or None when truncated away."""
        return self._index.get(tuple(word))

    def word_at(self, index: int) -> tuple[int, ...]:
        return self._words[index]

    def length_of(self, index: int) -> int:
        return len(self._words[index])

    def product(self) -> MultilinearOp:
        """Concatenation of words, zero above the truncation length."""
        entries: dict[tuple[int, tuple[int, ...]], Fraction] = {}
        for i, u in enumerate(self._words):
            for j, v in enumerate(self._words):
                out = self.index_of(u + v)
                if out is not None:
                    entries[(out, (i, j))] = Fraction(1)
        return MultilinearOp(self.space, 2, 0, entries)

    def words_of_length(self, length: int) -> list[int]:
        return [i for i, w in enumerate(self._words) if len(w) == length]


# -- JSON fixtures ------------------------------------------------------------


def load_graded_algebra(payload: str | Mapping) -> tuple[GradedSpace, MultilinearOp]:
    """Load a graded algebra fixture from JSON.

    Schema: ``{"dims": {"0": 2}, "product": [[out, in1, in2, coeff],
    ...]}`` with coefficients given as integers or "p/q" strings; an
    optional "labels" list renames the basis.
    """
    data = json.loads(payload) if isinstance(payload, str) else payload
    dims = {int(d): int(k) for d, k in data["dims"].items()}
    space = GradedSpace.from_dims(dims)
    if "labels" in data:
        space = GradedSpace(space.degrees, tuple(data["labels"]))
    entries: dict[tuple[int, tuple[int, ...]], Fraction] = {}
    for out, left, right, coeff in data["product"]:
        entries[(int(out), (int(left), int(right)))] = Fraction(str(coeff))
    return space, MultilinearOp(space, 2, int(data.get("degree", 0)), entries)


def dump_graded_algebra(space: GradedSpace, product: MultilinearOp) -> str:
    """Serialize a graded algebra fixture to the JSON schema."""
    payload = {
        "dims": {str(d): k for d, k in sorted(space.dims.items())},
        "labels": list(space.labels),
        "degree": product.degree,
        "product": [
            [out, ins[0], ins[1], str(coeff)]
            for (out, ins), coeff in sorted(product.entries.items())
        ],
    }
    return json.dumps(payload, indent=2)
