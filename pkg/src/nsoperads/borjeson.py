"""Borjeson products and differential operators on associative algebras.

A linear operator on a (non-unital, graded) associative algebra has a
noncommutative order: the point past which its Borjeson products
vanish.  This module computes the products by two independent formulas
(the recursive definition and the evaluated closed form) and insists
they agree, classifies operators by order, verifies the graded
commutator identity that makes differential operators a filtered Lie
algebra, and realizes all differential operators on truncated tensor
algebras through the symbol calculus: every operator is a sum of
window insertions of symbols, recovered by peeling.  On top of the
symbol calculus sit the partial compositions of the noncommutative
Weyl product and the bar-construction examples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from random import Random
from typing import Mapping, Sequence

from .multilinear import (
    EndoSeries,
    GradedSpace,
    MultilinearOp,
    TensorAlgebraTrunc,
)

__all__ = [
    "iterated_product",
    "check_associative",
    "reliable_window",
    "borjeson",
    "borjeson_closed",
    "nc_order",
    "graded_commutator",
    "commutator_check",
    "diffop_expansion_check",
    "Symbol",
    "rho",
    "diffop_decompose",
    "random_symbol",
    "weyl_partial",
    "WeylSeries",
    "weyl_star",
    "preserves_associative",
    "assoc_ncbv_check",
    "bar_algebra",
]


# -- products and the two Borjeson engines ------------------------------------


def iterated_product(m: MultilinearOp, n: int) -> MultilinearOp:
    """The n-fold product map of arity n; the 1-fold product is the identity."""
    if m.arity != 2:
        raise ValueError("expected a binary product")
    if n < 1:
        raise ValueError("products need at least one factor")
    out = MultilinearOp.identity(m.space)
    for _ in range(n - 1):
        out = m.compose_at(1, out)
    return out


def check_associative(m: MultilinearOp) -> None:
    if m.arity != 2:
        raise ValueError("expected a binary product")
    if not (m.compose_at(1, m) - m.compose_at(2, m)).is_zero():
        raise ValueError("the product is not associative")


def reliable_window(op: MultilinearOp, alg: TensorAlgebraTrunc) -> MultilinearOp:
    """Restrict an operation on words to inputs that fit the truncation.

    On a length-truncated tensor algebra, identities about operators of
    bounded order hold exactly on input tuples whose total letter count
    stays within the truncation; entries beyond that window are
    artifacts of words the model cannot represent.  This keeps exactly
    the trustworthy entries.
    """
    if op.space != alg.space:
        raise ValueError("operation does not act on this algebra")
    entries = {
        (out, ins): coeff
        for (out, ins), coeff in op.entries.items()
        if sum(alg.length_of(i) for i in ins) <= alg.truncation
    }
    return MultilinearOp(op.space, op.arity, op.degree, entries)


def _windowed(op: MultilinearOp, alg: TensorAlgebraTrunc | None) -> MultilinearOp:
    return op if alg is None else reliable_window(op, alg)


def _borjeson_recursive(D: MultilinearOp, m: MultilinearOp, n: int) -> MultilinearOp:
    if n == 1:
        return D
    b2 = D.compose_at(1, m) - m.compose_at(1, D) - m.compose_at(2, D)
    if n == 2:
        return b2
    b = (
        D.compose_at(1, m).compose_at(2, m)
        - m.compose_at(1, D.compose_at(1, m))
        - m.compose_at(2, D.compose_at(1, m))
        + m.compose_at(2, m.compose_at(1, D))
    )
    for _ in range(n - 3):
        b = b.compose_at(2, m)
    return b


def borjeson_closed(D: MultilinearOp, m: MultilinearOp, n: int) -> MultilinearOp:
    """The closed form of the n-th Borjeson product.

    For n >= 3 this is the four-term formula built from iterated
    products: apply D to everything, minus the two one-sided
    strippings, plus the two-sided stripping; for n <= 2 it coincides
    with the recursive seed.
    """
    if D.arity != 1:
        raise ValueError("Borjeson products deform a unary operator")
    if n < 1:
        raise ValueError("products are indexed by positive arity")
    if n == 1:
        return D
    if n == 2:
        return D.compose_at(1, m) - m.compose_at(1, D) - m.compose_at(2, D)
    return (
        D.compose_at(1, iterated_product(m, n))
        - m.compose_at(1, D.compose_at(1, iterated_product(m, n - 1)))
        - m.compose_at(2, D.compose_at(1, iterated_product(m, n - 1)))
        + m.compose_at(1, m).compose_at(2, D.compose_at(1, iterated_product(m, n - 2)))
    )


def borjeson(
    D: MultilinearOp,
    m: MultilinearOp,
    n: int,
    alg: TensorAlgebraTrunc | None = None,
) -> MultilinearOp:
    """The n-th Borjeson product of D, checked by two formulas.

    Computes the recursive definition and the closed form and raises
    if they ever disagree; the product m must be associative.  When
    the algebra is a length-truncated tensor algebra, pass it to
    restrict the result to the window of inputs the truncation can
    represent faithfully.
    """
    check_associative(m)
    recursive = _borjeson_recursive(D, m, n)
    closed = borjeson_closed(D, m, n)
    if recursive != closed:
        raise AssertionError(
            f"the two Borjeson formulas disagree at arity {n}"
        )
    return _windowed(recursive, alg)


def nc_order(
    D: MultilinearOp,
    m: MultilinearOp,
    cap: int,
    alg: TensorAlgebraTrunc | None = None,
) -> int | None:
    """Least l with all Borjeson products above arity l zero, below cap.

    Returns None when the products have not vanished stably by arity
    ``cap``, meaning the order is at least ``cap`` at this precision.
    """
    check_associative(m)
    flags = [
        _windowed(_borjeson_recursive(D, m, j), alg).is_zero()
        for j in range(1, cap + 1)
    ]
    order: int | None = None
    for l in range(cap, -1, -1):
        if all(flags[j - 1] for j in range(l + 1, cap + 1)):
            order = l
        else:
            break
    if order is None or not flags[-1]:
        return None
    return order


# -- the commutator identity ---------------------------------------------------


def graded_commutator(D1: MultilinearOp, D2: MultilinearOp) -> MultilinearOp:
    """[D1, D2] = D1 D2 - (-1)^{|D1||D2|} D2 D1."""
    sign = -1 if (D1.degree % 2) and (D2.degree % 2) else 1
    return D1.compose_at(1, D2) - D2.compose_at(1, D1).scale(sign)


def commutator_check(
    D1: MultilinearOp, D2: MultilinearOp, m: MultilinearOp, n_max: int
) -> dict:
    """Verify the commutator expansion of Borjeson products, arity by arity.

    For each n up to n_max, compares the n-th product of [D1, D2] with
    the double sum of insertions of the products of D1 and D2 into one
    another; the report carries the first failing entry if any.
    """
    check_associative(m)
    bracket = graded_commutator(D1, D2)
    sign = -1 if (D1.degree % 2) and (D2.degree % 2) else 1
    report: dict = {"agrees": [], "failures": []}
    b1 = {j: _borjeson_recursive(D1, m, j) for j in range(1, n_max + 1)}
    b2 = {j: _borjeson_recursive(D2, m, j) for j in range(1, n_max + 1)}
    for n in range(1, n_max + 1):
        lhs = _borjeson_recursive(bracket, m, n)
        rhs = MultilinearOp.zero(m.space, n, lhs.degree)
        for k in range(1, n + 1):
            for i in range(0, n - k + 1):
                j = n - k - i
                rhs = rhs + b1[i + j + 1].insert(i, b2[k])
                rhs = rhs - b2[i + j + 1].insert(i, b1[k]).scale(sign)
        diff = lhs - rhs
        if diff.is_zero():
            report["agrees"].append(n)
        else:
            witness = diff.support()[0]
            report["failures"].append({"arity": n, "entry": witness})
    report["ok"] = not report["failures"]
    return report


def diffop_expansion_check(
    D: MultilinearOp,
    m: MultilinearOp,
    order: int,
    n_max: int,
    alg: TensorAlgebraTrunc | None = None,
) -> dict:
    """Check the window expansion of an operator of noncommutative order l.

    The value of D on an n-fold product is the sum of products with D
    applied to a sliding window of length l, minus the corresponding
    sum with windows of length l - 1 (starting from the second
    position); verified entrywise for l < n <= n_max.
    """
    check_associative(m)
    report: dict = {"order": order, "agrees": [], "failures": []}
    for n in range(order + 1, n_max + 1):
        lhs = D.compose_at(1, iterated_product(m, n))
        rhs = MultilinearOp.zero(m.space, n, lhs.degree)
        # both window sums stop at the same start position n - order + 1
        for width, start_min, sign in ((order, 1, 1), (order - 1, 2, -1)):
            if width < 1:
                continue
            inner = D.compose_at(1, iterated_product(m, width))
            outer = iterated_product(m, n - width + 1)
            for start in range(start_min, n - order + 2):
                rhs = rhs + outer.compose_at(start, inner).scale(sign)
        diff = _windowed(lhs - rhs, alg)
        if diff.is_zero():
            report["agrees"].append(n)
        else:
            report["failures"].append({"arity": n, "entry": diff.support()[0]})
    report["ok"] = not report["failures"]
    return report


# -- symbols and the calculus on truncated tensor algebras ---------------------


@dataclass(frozen=True)
class Symbol:
    """A window symbol: a map from k letters to words.

    ``entries[(out_word, in_word)]`` gives the coefficient of the
    output word on a k-tuple of letters; symbols are degree
    homogeneous with respect to the letter grading.
    """

    letters: GradedSpace
    arity: int
    degree: int
    entries: Mapping[tuple[tuple[int, ...], tuple[int, ...]], Fraction] = field(
        default_factory=dict
    )

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise ValueError("symbols have arity at least one")
        degs = self.letters.degrees
        clean: dict[tuple[tuple[int, ...], tuple[int, ...]], Fraction] = {}
        for (out_word, in_word), raw in self.entries.items():
            coeff = Fraction(raw)
            if not coeff:
                continue
            out_word, in_word = tuple(out_word), tuple(in_word)
            if len(in_word) != self.arity or not out_word:
                raise ValueError("symbol entries map k letters to a word")
            if sum(degs[i] for i in out_word) != (
                sum(degs[i] for i in in_word) + self.degree
            ):
                raise ValueError("symbol entry violates its degree")
            clean[(out_word, in_word)] = coeff
        object.__setattr__(self, "entries", clean)

    def is_zero(self) -> bool:
        return not self.entries


def rho(symbol: Symbol, alg: TensorAlgebraTrunc) -> MultilinearOp:
    """The operator inserting a symbol in every window of every word.

    Words are rewritten by applying the symbol to each run of
    ``symbol.arity`` consecutive letters, with the Koszul sign of
    moving the symbol past the prefix; outputs beyond the truncation
    are zero in the quotient.
    """
    if symbol.letters != alg.letters:
        raise ValueError("symbol and algebra letters differ")
    degs = alg.letters.degrees
    k = symbol.arity
    entries: dict[tuple[int, tuple[int, ...]], Fraction] = {}
    for idx, word in enumerate(alg.words):
        if len(word) < k:
            continue
        for start in range(len(word) - k + 1):
            prefix, window, suffix = (
                word[:start],
                word[start : start + k],
                word[start + k :],
            )
            sign = (
                -1
                if (symbol.degree % 2)
                and sum(degs[i] for i in prefix) % 2
                else 1
            )
            for (out_word, in_word), coeff in symbol.entries.items():
                if in_word != window:
                    continue
                target = alg.index_of(prefix + out_word + suffix)
                if target is None:
                    continue
                key = (target, (idx,))
                value = entries.get(key, Fraction(0)) + sign * coeff
                if value:
                    entries[key] = value
                else:
                    entries.pop(key, None)
    return MultilinearOp(alg.space, 1, symbol.degree, entries)


def diffop_decompose(D: MultilinearOp, alg: TensorAlgebraTrunc) -> list[Symbol]:
    """Recover the symbols of an operator by peeling word lengths.

    Subtracts, for each length j from one up to the truncation, the
    insertion operator of the restriction of the remainder to
    length-j words; the symbols returned reassemble D exactly (their
    insertion operators sum to D).  A nonzero final remainder cannot
    occur on the truncated quotient and raises.
    """
    if D.arity != 1 or D.space != alg.space:
        raise ValueError("expected a unary operator on the algebra")
    remainder = D
    symbols: list[Symbol] = []
    for j in range(1, alg.truncation + 1):
        entries: dict[tuple[tuple[int, ...], tuple[int, ...]], Fraction] = {}
        for (out, ins), coeff in remainder.entries.items():
            word = alg.word_at(ins[0])
            if len(word) == j:
                entries[(alg.word_at(out), word)] = coeff
        symbol = Symbol(alg.letters, j, D.degree, entries)
        if not symbol.is_zero():
            symbols.append(symbol)
            remainder = remainder - rho(symbol, alg)
    if not remainder.is_zero():
        raise ValueError("operator is unresolvable at this truncation")
    return symbols


def random_symbol(
    alg: TensorAlgebraTrunc,
    arity: int,
    rng: Random,
    terms: int = 3,
    max_out: int | None = None,
) -> Symbol:
    """A sparse random degree-zero symbol on ungraded letters.

    ``max_out`` caps the output word length; capping it at the arity
    gives a non-expanding symbol, whose compositions never leave the
    truncation window.
    """
    dim = alg.letters.total_dim
    top = alg.truncation if max_out is None else min(max_out, alg.truncation)
    entries: dict[tuple[tuple[int, ...], tuple[int, ...]], Fraction] = {}
    for _ in range(terms):
        in_word = tuple(rng.randrange(dim) for _ in range(arity))
        out_len = rng.randint(1, top)
        out_word = tuple(rng.randrange(dim) for _ in range(out_len))
        entries[(out_word, in_word)] = Fraction(rng.randint(-3, 3))
    return Symbol(alg.letters, arity, 0, entries)


# -- the noncommutative Weyl product -------------------------------------------


def _blocks(f: MultilinearOp, alg: TensorAlgebraTrunc) -> dict[
    tuple[int, int], list[tuple[tuple[int, ...], tuple[int, ...], Fraction]]
]:
    """Split a unary operator into word-length blocks (p -> q)."""
    out: dict = {}
    for (o, ins), coeff in f.entries.items():
        wi, wo = alg.word_at(ins[0]), alg.word_at(o)
        out.setdefault((len(wi), len(wo)), []).append((wo, wi, coeff))
    return out


def _word_degree(alg: TensorAlgebraTrunc, word: Sequence[int]) -> int:
    return sum(alg.letters.degrees[i] for i in word)


def weyl_partial(
    f: MultilinearOp,
    g: MultilinearOp,
    k: int,
    alg: TensorAlgebraTrunc,
    dropped: list | None = None,
) -> MultilinearOp:
    """The partial k-composition of word-to-word operators.

    Blockwise on components f: p letters -> q letters and g: r -> s,
    the formula overlaps k outputs of g with k inputs of f: zero when
    k exceeds min(p, s); all placements of f inside the output of g
    when k = p < s; all placements of g inside the input of f when
    k = s < p; plain composition when k = p = s; and the two boundary
    overlaps when k < min(p, s).  Pieces pushed past the truncation
    are recorded in ``dropped`` when a list is supplied.
    """
    if k < 1:
        raise ValueError("partial compositions start at overlap one")
    degs = alg.letters.degrees
    entries: dict[tuple[int, tuple[int, ...]], Fraction] = {}

    def emit(out_word, in_word, coeff):
        target = alg.index_of(out_word)
        source = alg.index_of(in_word)
        if source is None:
            return
        if target is None:
            if dropped is not None:
                dropped.append((out_word, in_word))
            return
        key = (target, (source,))
        value = entries.get(key, Fraction(0)) + coeff
        if value:
            entries[key] = value
        else:
            entries.pop(key, None)

    fb = _blocks(f, alg)
    gb = _blocks(g, alg)
    for (p, q), fents in fb.items():
        for (r, s), gents in gb.items():
            if k > min(p, s):
                continue
            for wo_f, wi_f, cf in fents:
                for wo_g, wi_g, cg in gents:
                    if k == p == s:
                        # total overlap: plain composition
                        if wi_f == wo_g:
                            emit(wo_f, wi_g, cf * cg)
                        continue
                    if k == p < s:
                        # f applied to a window of the output of g
                        for i in range(s - p + 1):
                            if wo_g[i : i + p] != wi_f:
                                continue
                            sign = (
                                -1
                                if (f.degree % 2)
                                and _word_degree(alg, wo_g[:i]) % 2
                                else 1
                            )
                            emit(
                                wo_g[:i] + wo_f + wo_g[i + p :],
                                wi_g,
                                sign * cf * cg,
                            )
                        continue
                    if k == s < p:
                        # g applied to a window of the input of f
                        for i in range(p - s + 1):
                            if wi_f[i : i + s] != wo_g:
                                continue
                            sign = (
                                -1
                                if (g.degree % 2)
                                and _word_degree(alg, wi_f[:i]) % 2
                                else 1
                            )
                            emit(
                                wo_f,
                                wi_f[:i] + wi_g + wi_f[i + s :],
                                sign * cf * cg,
                            )
                        continue
                    # k < min(p, s): the two boundary overlaps
                    if wi_f[p - k :] == wo_g[:k]:
                        sign = (
                            -1
                            if (g.degree % 2)
                            and _word_degree(alg, wi_f[: p - k]) % 2
                            else 1
                        )
                        emit(
                            wo_f + wo_g[k:],
                            wi_f[: p - k] + wi_g,
                            sign * cf * cg,
                        )
                    if wo_g[s - k :] == wi_f[:k]:
                        sign = (
                            -1
                            if (f.degree % 2)
                            and _word_degree(alg, wo_g[: s - k]) % 2
                            else 1
                        )
                        emit(
                            wo_g[: s - k] + wo_f,
                            wi_g + wi_f[k:],
                            sign * cf * cg,
                        )
    return MultilinearOp(alg.space, 1, f.degree + g.degree, entries)


@dataclass(frozen=True)
class WeylSeries:
    """An hbar-series of operators with a record of truncated pieces."""

    terms: tuple[MultilinearOp, ...]
    dropped: tuple = ()

    def coefficient(self, k: int) -> MultilinearOp:
        return self.terms[k - 1]


def weyl_star(
    f: MultilinearOp, g: MultilinearOp, alg: TensorAlgebraTrunc, hbar_order: int
) -> WeylSeries:
    """The Weyl star product truncated at a given hbar order."""
    if hbar_order < 1:
        raise ValueError("the star product starts at hbar^1")
    terms = []
    dropped: list = []
    for k in range(1, hbar_order + 1):
        terms.append(weyl_partial(f, g, k, alg, dropped))
    return WeylSeries(tuple(terms), tuple(dropped))


# -- deformation criteria and bar constructions --------------------------------


def preserves_associative(
    r: EndoSeries,
    m: MultilinearOp,
    alg: TensorAlgebraTrunc | None = None,
    witness_inputs: bool = True,
) -> tuple[bool, dict | None]:
    """Whether a series acts tangent to associative structures.

    True exactly when each component r_l is a differential operator of
    noncommutative order at most l + 1, that is the (l+2)-nd Borjeson
    product of r_l vanishes; the witness names the first failure.
    """
    check_associative(m)
    for l in range(len(r)):
        component = r.component(l)
        if component.is_zero():
            continue
        b = _windowed(_borjeson_recursive(component, m, l + 2), alg)
        if not b.is_zero():
            witness: dict = {"component": l, "arity": l + 2}
            if witness_inputs:
                out, ins = b.support()[0]
                witness["entry"] = {
                    "output": out,
                    "inputs": list(ins),
                    "value": str(b.entries[(out, ins)]),
                }
            return False, witness
    return True, None


def assoc_ncbv_check(
    m: MultilinearOp,
    deltas: Sequence[MultilinearOp],
    cap: int,
    alg: TensorAlgebraTrunc | None = None,
) -> dict:
    """Check the operator conditions of an associative homotopy structure.

    Each Delta_l must have degree 2l - 1 and noncommutative order at
    most l + 1, and the square conditions (the sum of Delta_i Delta_j
    over i + j = l) must vanish for l up to cap.
    """
    check_associative(m)
    report: dict = {"orders": [], "squares": [], "failures": []}
    for l, delta in enumerate(deltas):
        if delta.is_zero():
            report["orders"].append(None)
            continue
        if delta.degree != 2 * l - 1:
            report["failures"].append(
                {"kind": "degree", "l": l, "degree": delta.degree}
            )
            continue
        b = _windowed(_borjeson_recursive(delta, m, l + 2), alg)
        report["orders"].append("<= %d" % (l + 1) if b.is_zero() else "violated")
        if not b.is_zero():
            report["failures"].append({"kind": "order", "l": l})
    for l in range(cap + 1):
        total: MultilinearOp | None = None
        for i in range(l + 1):
            j = l - i
            if i >= len(deltas) or j >= len(deltas):
                continue
            term = deltas[i].compose_at(1, deltas[j])
            total = term if total is None else total + term
        ok = total is None or total.is_zero()
        report["squares"].append({"l": l, "ok": ok})
        if not ok:
            report["failures"].append({"kind": "square", "l": l})
    report["ok"] = not report["failures"]
    return report


def bar_algebra(
    letter_products: Mapping[int, MultilinearOp], truncation: int
) -> tuple[TensorAlgebraTrunc, list[MultilinearOp]]:
    """The bar construction of a finite family of higher products.

    The letters are the desuspended base space (degrees shifted down
    by one); the k-ary product of the base contributes the operator
    Delta_{k-1}, inserting it in every window of every word.  Returns
    the truncated word algebra and the list Delta_0, Delta_1, ...
    (Delta_0 is zero: the base spaces here carry no differential).
    """
    if 2 not in letter_products:
        raise ValueError("a binary product is required")
    base = letter_products[2].space
    letters = GradedSpace(
        tuple(d - 1 for d in base.degrees),
        tuple(f"s{lab}" for lab in base.labels),
    )
    alg = TensorAlgebraTrunc(letters, truncation)
    top = max(letter_products)
    deltas = [MultilinearOp.zero(alg.space, 1, -1)]
    for k in range(2, top + 1):
        if k not in letter_products or letter_products[k].is_zero():
            deltas.append(MultilinearOp.zero(alg.space, 1, 2 * (k - 1) - 1))
            continue
        mk = letter_products[k]
        entries: dict[tuple[tuple[int, ...], tuple[int, ...]], Fraction] = {}
        for (out, ins), coeff in mk.entries.items():
            # sign of moving the k suspensions past the desuspended letters
            exponent = sum(
                (k - 1 - pos) * letters.degrees[i] for pos, i in enumerate(ins[:-1])
            )
            entries[((out,), tuple(ins))] = coeff * (-1 if exponent % 2 else 1)
        symbol = Symbol(letters, k, mk.degree + (k - 1), entries)
        deltas.append(rho(symbol, alg))
    return alg, deltas
