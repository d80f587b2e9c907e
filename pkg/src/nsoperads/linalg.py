"""Exact linear algebra over the rationals.

Matrices are lists of rows of :class:`~fractions.Fraction`.  Subspaces of
Q^d are stored by their reduced row echelon basis, which makes equality,
containment, sum and intersection exact set operations.  A sparse
incremental echelon accumulator supports the large rank computations in
the brute-force dimension oracles.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Row = list[Fraction]


def _as_fraction_rows(rows: Iterable[Sequence]) -> list[Row]:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Iterable[Sequence]) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    m = _as_fraction_rows(rows)
    if not m:
        return [], []
    n_cols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Iterable[Sequence]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Iterable[Sequence], n_cols: int) -> list[Row]:
    """Basis of the right kernel {x : M x = 0}, RREF-normalized."""
    reduced, pivots = rref(rows)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced[r][f]
        basis.append(v)
    return rref(basis)[0]


def solve(rows: Iterable[Sequence], rhs: Sequence) -> Row | None:
    """One solution of M x = rhs, or None if inconsistent."""
    m = _as_fraction_rows(rows)
    b = [Fraction(x) for x in rhs]
    if not m:
        return None if any(b) else []
    n_cols = len(m[0])
    aug = [row + [bb] for row, bb in zip(m, b)]
    reduced, pivots = rref(aug)
    for row in reduced:
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            return None
    x = [Fraction(0)] * n_cols
    for r, p in enumerate(pivots):
        if p == n_cols:
            return None
        x[p] = reduced[r][-1]
    return x


class Subspace:
    """A linear subspace of Q^d, held in reduced row echelon form."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, rows: Iterable[Sequence] = ()):
        self.ambient_dim = ambient_dim
        rows = _as_fraction_rows(rows)
        for row in rows:
            if len(row) != ambient_dim:
                raise ValueError("row length does not match ambient dimension")
        self.basis, _ = rref(rows)

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        return cls(ambient_dim, vectors)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        eye = [[Fraction(i == j) for j in range(ambient_dim)] for i in range(ambient_dim)]
        return cls(ambient_dim, eye)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains_vector(self, v: Sequence) -> bool:
        vec = [Fraction(x) for x in v]
        for row in self.basis:
            pivot = next(i for i, x in enumerate(row) if x == 1)
            if vec[pivot] != 0:
                f = vec[pivot]
                vec = [a - f * b for a, b in zip(vec, row)]
        return all(x == 0 for x in vec)

    def contains(self, other: "Subspace") -> bool:
        return all(self.contains_vector(row) for row in other.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, tuple(tuple(r) for r in self.basis)))

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimensions differ")
        return Subspace(self.ambient_dim, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus-style intersection via the kernel of [A; -B]."""
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimensions differ")
        if not self.basis or not other.basis:
            return Subspace(self.ambient_dim)
        # columns: coefficients on rows of A, then rows of B
        a, b = self.basis, other.basis
        cols = len(a) + len(b)
        m = [[(a[i][j] if i < len(a) else -b[i - len(a)][j]) for i in range(cols)]
             for j in range(self.ambient_dim)]
        vectors = []
        for coeffs in nullspace(m, cols):
            v = [Fraction(0)] * self.ambient_dim
            for i, c in enumerate(coeffs[: len(a)]):
                if c:
                    v = [x + c * y for x, y in zip(v, a[i])]
            vectors.append(v)
        return Subspace(self.ambient_dim, vectors)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


class SparseEchelon:
    """Incremental row echelon over Q with sparse rows.

    Rows are dicts mapping a hashable column key to a Fraction.  Columns
    are pivoted in insertion-independent fashion: each new row is reduced
    against current pivots; a surviving row is normalized and its first
    remaining column (under the supplied key order) becomes a pivot.
    """

    def __init__(self, column_sort_key=None):
        self.pivots: dict = {}
        self._key = column_sort_key or (lambda c: c)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def residue(self, row: dict) -> dict:
        row = {c: v for c, v in row.items() if v}
        while row:
            hit = None
            for c in row:
                if c in self.pivots:
                    hit = c
                    break
            if hit is None:
                break
            f = row[hit]
            pivot_row = self.pivots[hit]
            for c, v in pivot_row.items():
                newv = row.get(c, Fraction(0)) - f * v
                if newv:
                    row[c] = newv
                else:
                    row.pop(c, None)
        return row

    def add(self, row: dict) -> bool:
        """Reduce row against the echelon; absorb it if independent."""
        row = self.residue(row)
        if not row:
            return False
        lead = min(row, key=self._key)
        inv = Fraction(1) / row[lead]
        row = {c: v * inv for c, v in row.items()}
        # back-substitute the new pivot into stored rows
        for pc, prow in self.pivots.items():
            if lead in prow:
                f = prow[lead]
                for c, v in row.items():
                    newv = prow.get(c, Fraction(0)) - f * v
                    if newv:
                        prow[c] = newv
                    else:
                        prow.pop(c, None)
        self.pivots[lead] = row
        return True

    def contains(self, row: dict) -> bool:
        return not self.residue(row)
