"""Tests for free-operad elements, composition signs, orders, suspension."""

from __future__ import annotations

from fractions import Fraction
from random import Random

import pytest

from nsoperads.free_operad import (
    Generator,
    MonomialOrder,
    OperadElement,
    monomial_compose,
    operadic_suspension,
    parse_element,
    suspend_element,
)

M2 = Generator("m", 2, 0)
B2 = Generator("b", 2, 1)
C3 = Generator("c", 3, 0)


def _random_monomial(rng: Random, gens, target_arity: int) -> OperadElement:
    e = OperadElement.from_generator(rng.choice([g for g in gens if g.arity <= target_arity]))
    while e.arity < target_arity:
        fits = [g for g in gens if e.arity + g.arity - 1 <= target_arity]
        g = rng.choice(fits)
        e = e.compose(rng.randint(1, e.arity), OperadElement.from_generator(g))
    return e


def _random_element(rng: Random, gens, target_arity: int, size: int = 3) -> OperadElement:
    total = OperadElement.zero()
    for _ in range(size):
        total = total + _random_monomial(rng, gens, target_arity) * rng.randint(-3, 3)
    return total if not total.is_zero() else _random_monomial(rng, gens, target_arity)


def test_generator_validation():
    with pytest.raises(ValueError):
        Generator("m", 0)
    with pytest.raises(ValueError):
        Generator("1bad", 2)


def test_parse_round_trip():
    text = "m(m(1,2),3) - m(1,m(2,3))"
    e = parse_element(text, (M2,))
    assert parse_element(e.to_text(), (M2,)) == e
    assert e.arity == 3 and e.degree() == 0
    assert len(e) == 2


def test_element_arithmetic():
    x = OperadElement.from_generator(M2)
    assert (x - x).is_zero()
    assert (x + x) == x * 2
    assert (-x) * -1 == x


def test_sequential_axiom_ungraded():
    rng = Random(3)
    for _ in range(10):
        a = _random_element(rng, (M2, C3), rng.randint(2, 4))
        b = _random_element(rng, (M2, C3), rng.randint(2, 4))
        c = _random_element(rng, (M2, C3), rng.randint(2, 3))
        i = rng.randint(1, a.arity)
        j = rng.randint(1, b.arity)
        lhs = a.compose(i, b).compose(i + j - 1, c)
        rhs = a.compose(i, b.compose(j, c))
        assert lhs == rhs


def test_parallel_axiom_ungraded():
    rng = Random(4)
    for _ in range(10):
        a = _random_element(rng, (M2, C3), rng.randint(2, 4))
        b = _random_element(rng, (M2, C3), rng.randint(2, 3))
        c = _random_element(rng, (M2, C3), rng.randint(2, 3))
        i = rng.randint(1, a.arity - 1)
        j = rng.randint(i + 1, a.arity)
        lhs = a.compose(i, b).compose(j + b.arity - 1, c)
        rhs = a.compose(j, c).compose(i, b)
        assert lhs == rhs


def test_parallel_axiom_picks_up_koszul_sign():
    B = OperadElement.from_generator(B2)
    lhs = B.compose(1, B).compose(3, B)
    rhs = B.compose(2, B).compose(1, B)
    assert lhs == -rhs


def test_sequential_axiom_holds_without_sign_in_odd_degree():
    B = OperadElement.from_generator(B2)
    assert B.compose(1, B).compose(2, B) == B.compose(1, B.compose(2, B))


def test_monomial_compose_returns_sign_and_tree():
    sign, mono = monomial_compose(B2.corolla(), 2, B2.corolla())
    assert sign == 1
    assert mono.to_text() == "b(1,b(2,3))"
    assert mono.arity == 3 and mono.degree == 2 and mono.weight == 2


def test_path_lex_order_sanity():
    order = MonomialOrder(("b", "m"), "path-lex")
    M = OperadElement.from_generator(M2)
    left = next(iter(M.compose(1, M)))[0]
    right = next(iter(M.compose(2, M)))[0]
    assert order.compare(left, right) == 1
    assert order.compare(right, left) == -1
    assert order.compare(left, left) == 0
    assert order.greater(left, right)
    assert order.leading_monomial(M.compose(1, M) + M.compose(2, M)) == left
    assert order.opposite().leading_monomial(M.compose(1, M) + M.compose(2, M)) == right


def test_order_validation():
    with pytest.raises(ValueError):
        MonomialOrder(("m",), "mystery-order")
    with pytest.raises(ValueError):
        MonomialOrder(("m",), "weight-first-path-lex")


def test_suspension_regrades_generators():
    up = operadic_suspension((M2, C3), 1)
    assert up[M2].degree == 1
    assert up[C3].degree == 2
    down = operadic_suspension((M2, C3), -1)
    assert down[C3].degree == -2


def test_suspended_associativity_sign():
    M = OperadElement.from_generator(M2)
    assoc = M.compose(1, M) - M.compose(2, M)
    up = operadic_suspension((M2,), 1)
    shifted = suspend_element(assoc, up, 1)
    odd = up[M2]
    odd_elem = OperadElement.from_generator(odd)
    assert shifted == odd_elem.compose(1, odd_elem) + odd_elem.compose(2, odd_elem)


def test_suspension_round_trip_preserves_magnitudes():
    M = OperadElement.from_generator(M2)
    B = OperadElement.from_generator(B2)
    e = M.compose(1, B) - B.compose(2, M) * 2
    up_map = operadic_suspension((M2, B2), 1)
    down_map = operadic_suspension(tuple(up_map.values()), -1)
    back = suspend_element(suspend_element(e, up_map, 1), down_map, -1)
    assert {m.key(): abs(c) for m, c in back} == {m.key(): abs(c) for m, c in e}


def test_homogeneous_parts():
    M = OperadElement.from_generator(M2)
    B = OperadElement.from_generator(B2)
    mixed = M.compose(1, B) + M.compose(1, M)
    assert mixed.degrees() == {0, 1}
    assert mixed.homogeneous_part(1) == M.compose(1, B)
    assert mixed.homogeneous_part(0) == M.compose(1, M)
