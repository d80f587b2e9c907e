"""Tests for tree rewriting, completion, and Koszul duality."""

from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest

from nsoperads.free_operad import (
    Generator,
    MonomialOrder,
    OperadElement,
    parse_element,
)
from nsoperads.groebner import (
    IdealSlice,
    Presentation,
    component_dimension_bruteforce,
    complete,
    hilbert,
    koszul_dual,
    normal_form,
    normal_monomials,
    quadratic_monomials,
    reduce,
    suspend_presentation,
)
from nsoperads.linalg import Subspace

M = Generator("m", 2, 0)
B = Generator("b", 2, 1)

AS = Presentation((M,), (parse_element("m(m(1,2),3) - m(1,m(2,3))", (M,)),), name="As")

NCGERST = Presentation(
    (M, B),
    tuple(
        parse_element(t, (M, B))
        for t in (
            "m(m(1,2),3) - m(1,m(2,3))",
            "m(b(1,2),3) - b(1,m(2,3))",
            "b(m(1,2),3) - m(1,b(2,3))",
            "b(b(1,2),3) + b(1,b(2,3))",
        )
    ),
    name="ncGerst",
)


def _totally_heterogeneous(k: int) -> Presentation:
    a = Generator("a", k, 0)
    x = OperadElement.from_generator(a)
    rels = tuple(x.compose(i, x) - x.compose(k, x) for i in range(1, k))
    return Presentation((a,), rels, name=f"tAs{k}")


def _partially_associative(k: int) -> Presentation:
    a = Generator("a", k, k - 2)
    x = OperadElement.from_generator(a)
    total = OperadElement.zero()
    for i in range(1, k + 1):
        term = x.compose(i, x)
        if (k - 1) * (i - 1) % 2:
            term = -term
        total = total + term
    return Presentation((a,), (total,), name=f"pAs{k}")


def _relation_span(pres: Presentation, arity: int) -> Subspace:
    basis = quadratic_monomials(pres.alphabet, arity)
    index = {mono.key(): k for k, mono in enumerate(basis)}
    rows = []
    for rel in pres.relations:
        if rel.arity != arity:
            continue
        row = [Fraction(0)] * len(basis)
        for mono, c in rel.coeffs.items():
            row[index[mono.key()]] = c
        rows.append(row)
    return Subspace(len(basis), rows)


def _spans_equal(p1: Presentation, p2: Presentation, arities) -> bool:
    return all(_relation_span(p1, n) == _relation_span(p2, n) for n in arities)


def test_presentation_lookup_and_parse():
    assert AS.generator("m") is M
    with pytest.raises(KeyError):
        AS.generator("nope")
    e = AS.parse("m(1,m(2,3))")
    assert e.arity == 3 and len(e) == 1


def test_associative_completion_is_immediate():
    order = MonomialOrder(("m",), "path-lex")
    gb = complete(AS, order, 6)
    assert gb.complete_up_to_cap
    assert not gb.added_rules
    assert len(gb.rules) == 1
    for n in range(1, 7):
        assert hilbert(gb, n) == {0: 1}
    for n in range(2, 7):
        assert len(normal_monomials(gb, n)) == 1


def test_normal_form_rewrites_to_right_comb():
    order = MonomialOrder(("m",), "path-lex")
    gb = complete(AS, order, 6)
    left_comb = AS.parse("m(m(m(1,2),3),4)")
    right_comb = AS.parse("m(1,m(2,m(3,4)))")
    assert reduce(left_comb, gb) == right_comb
    assert normal_form(left_comb, gb.rules, order) == right_comb
    assert reduce(right_comb, gb) == right_comb


def test_ncgerst_completion_dimensions():
    order = MonomialOrder(("b", "m"), "path-lex")
    gb = complete(NCGERST, order, 6)
    assert gb.complete_up_to_cap
    for n in range(2, 7):
        assert hilbert(gb, n) == {k: comb(n - 1, k) for k in range(n)}


def test_ideal_slice_matches_completion():
    slice_ = IdealSlice(AS, 5)
    for n in range(2, 6):
        assert slice_.dimension_by_degree(n) == {0: 1}


def test_quadratic_monomial_counts():
    assert len(quadratic_monomials((M,), 3)) == 2
    assert len(quadratic_monomials((M, B), 3)) == 8


def test_associative_is_self_dual():
    dual = koszul_dual(AS)
    assert dual.alphabet[0].degree == 0
    assert _spans_equal(dual, AS, [3])
    assert component_dimension_bruteforce(dual, 4) == {0: 1}


def test_ncgerst_dual_dimensions_brute():
    dual = koszul_dual(NCGERST)
    for n in (2, 3, 4):
        got = component_dimension_bruteforce(dual, n)
        assert got == {-k: comb(n - 1, k) for k in range(n)}


def test_ncgerst_dual_equals_suspended_ncgerst():
    order = MonomialOrder(("b", "m"), "path-lex")
    dual = koszul_dual(NCGERST)
    suspended = suspend_presentation(NCGERST, -1)
    gb_dual = complete(dual, order, 6)
    gb_susp = complete(suspended, order, 6)
    for n in range(2, 7):
        assert hilbert(gb_dual, n) == hilbert(gb_susp, n)


@pytest.mark.parametrize("k", [3, 4, 5])
def test_heterogeneous_dual_is_partially_associative(k: int):
    dual = koszul_dual(_totally_heterogeneous(k))
    assert dual.alphabet[0].degree == k - 2
    assert _spans_equal(dual, _partially_associative(k), [2 * k - 1])


@pytest.mark.parametrize(
    "pres", [AS, NCGERST, _totally_heterogeneous(3)], ids=lambda p: p.name
)
def test_koszul_dual_is_an_involution(pres: Presentation):
    double = koszul_dual(koszul_dual(pres))
    assert all(g.degree == h.degree for g, h in zip(double.alphabet, pres.alphabet))
    arities = sorted({r.arity for r in pres.relations})
    assert _spans_equal(double, pres, arities)
