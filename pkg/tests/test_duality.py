"""Gravity and hypercommutative relation spaces annihilate each other."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from nsoperads.groebner import (
    Presentation,
    koszul_dual,
    quadratic_monomials,
    suspend_presentation,
)
from nsoperads.linalg import Subspace
from nsoperads.zoo import named_operad

ARITIES = (3, 4, 5, 6)

# generators through arity 6 so every relation of arity <= 6 is present
GRAV = named_operad("ncGrav", max_arity=6).presentation
HYPER = named_operad("ncHyperCom", max_arity=6).presentation
SGRAV = suspend_presentation(GRAV, -1, name="SncGrav")


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


def test_dual_of_suspended_gravity_is_hypercommutative():
    dual = koszul_dual(SGRAV, arities=list(ARITIES))
    for n in ARITIES:
        assert _relation_span(dual, n) == _relation_span(HYPER, n), n


def test_dual_of_hypercommutative_is_suspended_gravity():
    dual = koszul_dual(HYPER, arities=list(ARITIES))
    for n in ARITIES:
        assert _relation_span(dual, n) == _relation_span(SGRAV, n), n


def test_relation_space_dimensions_split():
    for n in ARITIES:
        hyper_dim = _relation_span(HYPER, n).dim
        grav_dim = _relation_span(SGRAV, n).dim
        total = comb(n, 2) - 1
        assert hyper_dim == n - 2
        assert grav_dim == total - (n - 2)


def test_annihilator_split_is_exhaustive():
    # the two spans together fill a complement-sized chunk per degree pair:
    # their dimensions add up to the full count of pairable monomials
    for n in ARITIES:
        hyper_dim = _relation_span(HYPER, n).dim
        grav_dim = _relation_span(SGRAV, n).dim
        assert hyper_dim + grav_dim == comb(n, 2) - 1
