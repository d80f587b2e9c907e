"""Genus-zero deformations of hypercommutative structures.

A unary operator acts infinitesimally on a family of multilinear
operations satisfying the hypercommutative exchange relations.  The
action organizes into a tower of families indexed by the power of the
gravitational parameter: the bottom family is the commutator-style
action, and each next family follows from the previous one by an exact
rational recursion.  For families coming from an associative product,
the same tower can be evaluated directly from psi-class correlator
values, and a component of the tower vanishes exactly when the
corresponding Borjeson product of the operator does, tying deformation
theory to the noncommutative order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .borjeson import check_associative, graded_commutator, iterated_product
from .correlators import CorrelatorIndex, correlator_closed
from .multilinear import MultilinearOp

__all__ = [
    "Family",
    "check_nchypercom",
    "associative_family",
    "givental_tau0",
    "givental_step",
    "givental_tower",
    "givental_direct",
    "tau_expected_degree",
    "lie_action_check",
]

Family = dict[int, MultilinearOp]


def _family_arities(family: Mapping[int, MultilinearOp]) -> list[int]:
    arities = sorted(family)
    if not arities or arities[0] != 2 or arities != list(range(2, arities[-1] + 1)):
        raise ValueError("families must cover the arities 2..cap contiguously")
    return arities


def check_nchypercom(nu: Mapping[int, MultilinearOp], max_arity: int) -> None:
    """Verify the hypercommutative exchange relations up to an arity.

    For every arity n and interior position i, the sum of compositions
    filling slots from the left must equal the sum filling the fixed
    slot i from the right; raises with the first violated (n, i).
    """
    arities = _family_arities(nu)
    space = nu[2].space
    for k in arities:
        if nu[k].arity != k or nu[k].space != space:
            raise ValueError(f"family entry at arity {k} is malformed")
    for n in range(3, max_arity + 1):
        if n > arities[-1]:
            break
        for i in range(2, n):
            total = MultilinearOp.zero(space, n, 0)
            for j in range(2, i + 1):
                total = total + nu[n - j + 1].compose_at(i - j + 1, nu[j])
            for k in range(2, n - i + 2):
                total = total - nu[n - k + 1].compose_at(i, nu[k])
            if not total.is_zero():
                raise ValueError(
                    f"exchange relation violated at arity {n}, position {i}"
                )


def associative_family(m: MultilinearOp, max_arity: int) -> Family:
    """The family with the product in arity two and zero above."""
    check_associative(m)
    family: Family = {2: m}
    for n in range(3, max_arity + 1):
        family[n] = MultilinearOp.zero(m.space, n, 0)
    return family


def givental_tau0(
    r0: MultilinearOp, nu: Mapping[int, MultilinearOp], validate: bool = True
) -> Family:
    """The bottom family of the deformation tower.

    In each arity, the operator acts on the output minus its action on
    every input slot; for an associative family this is the second
    Borjeson product in arity two and zero above.
    """
    if r0.arity != 1:
        raise ValueError("the deforming operator is unary")
    arities = _family_arities(nu)
    if validate:
        check_nchypercom(nu, arities[-1])
    tau: Family = {}
    for n in arities:
        term = r0.compose_at(1, nu[n])
        for slot in range(1, n + 1):
            term = term - nu[n].compose_at(slot, r0)
        tau[n] = term
    return tau


def givental_step(
    tau_k: Mapping[int, MultilinearOp], nu: Mapping[int, MultilinearOp]
) -> Family:
    """One rung of the deformation recursion.

    The next family in arity n collects, for every cardinality s from 2
    to n - 1 and every slot j, the composition of the previous family
    with the structure family weighted (s-1)/(n-1), minus the opposite
    composition weighted (n-s)/(n-1); exact rational arithmetic.
    """
    nu_arities = _family_arities(nu)
    tau_arities = _family_arities(tau_k)
    space = nu[2].space
    out: Family = {}
    for n in nu_arities:
        if n - 1 > tau_arities[-1] and n > 2:
            raise ValueError(f"arity cap exceeded: need the previous family at {n - 1}")
        total = MultilinearOp.zero(space, n, 0)
        for s in range(2, n):
            left = Fraction(s - 1, n - 1)
            right = Fraction(n - s, n - 1)
            for j in range(1, n - s + 2):
                total = total + tau_k[n - s + 1].compose_at(j, nu[s]).scale(left)
                total = total - nu[n - s + 1].compose_at(j, tau_k[s]).scale(right)
        out[n] = total
    return out


def givental_tower(
    r: MultilinearOp,
    nu: Mapping[int, MultilinearOp],
    k_max: int,
    validate: bool = True,
) -> list[Family]:
    """The families for gravitational weights 0..k_max."""
    tower = [givental_tau0(r, nu, validate=validate)]
    for _ in range(k_max):
        tower.append(givental_step(tower[-1], nu))
    return tower


def givental_direct(
    r: MultilinearOp, k: int, n: int, m: MultilinearOp
) -> MultilinearOp:
    """Weight-k family at arity n for an associative product, evaluated directly.

    Substitutes the n-fold products into the three term groups of the
    action and integrates the psi-class coefficients: the root term,
    the slot terms, and the interval splittings, each weighted by an
    exact correlator value.
    """
    check_associative(m)
    if r.arity != 1:
        raise ValueError("the deforming operator is unary")
    if n < 2:
        raise ValueError("families start at arity two")
    sign_k = -1 if (k - 1) % 2 else 1

    def times(op: MultilinearOp, c: int) -> MultilinearOp:
        return op.scale(Fraction(c))

    result = MultilinearOp.zero(m.space, n, 0)
    c_root = correlator_closed(CorrelatorIndex(k, (0,) * n))
    if c_root:
        result = result + times(r.compose_at(1, iterated_product(m, n)), c_root)
    for slot in range(1, n + 1):
        ds = tuple(k if pos == slot else 0 for pos in range(1, n + 1))
        c_slot = correlator_closed(CorrelatorIndex(0, ds))
        if c_slot:
            result = result + times(
                iterated_product(m, n).compose_at(slot, r), sign_k * c_slot
            )
    for p in range(1, n + 1):
        for q in range(p + 1, n + 1):
            if q - p >= n - 1:
                continue
            upper_arity = n - q + p
            lower_arity = q - p + 1
            for i in range(0, k):
                j = k - 1 - i
                ds_up = tuple(
                    j if pos == p else 0 for pos in range(1, upper_arity + 1)
                )
                c_up = correlator_closed(CorrelatorIndex(0, ds_up))
                if not c_up:
                    continue
                c_low = correlator_closed(CorrelatorIndex(i, (0,) * lower_arity))
                if not c_low:
                    continue
                term = iterated_product(m, upper_arity).compose_at(
                    p, r.compose_at(1, iterated_product(m, lower_arity))
                )
                split_sign = -1 if (i + 1) % 2 else 1
                result = result + times(term, sign_k * split_sign * c_up * c_low)
    return result


def tau_expected_degree(r_degree: int, n: int, k: int) -> int:
    """Degree of the weight-k family member at arity n."""
    return r_degree + 2 * (n - 2) - 2 * k


def lie_action_check(
    r1: MultilinearOp,
    r2: MultilinearOp,
    nu: Mapping[int, MultilinearOp],
    max_arity: int,
) -> dict:
    """Smoke test that the bottom action is a Lie algebra homomorphism.

    The weight-zero action of a unary operator on families is linear,
    so the commutator of two actions must equal the action of the
    graded commutator, arity by arity; checked exactly.  On families
    of odd degree the input-slot sum carries the Koszul sign of moving
    the operator past the family member; for the even-degree families
    of the deformation tower the sign is invisible.
    """

    def act(r: MultilinearOp, fam: Mapping[int, MultilinearOp]) -> Family:
        out: Family = {}
        for n, op in fam.items():
            sgn = -1 if (r.degree % 2) and (op.degree % 2) else 1
            term = r.compose_at(1, op)
            for slot in range(1, n + 1):
                term = term - op.compose_at(slot, r).scale(sgn)
            out[n] = term
        return out

    sign = -1 if (r1.degree % 2) and (r2.degree % 2) else 1
    bracket = graded_commutator(r1, r2)
    report: dict = {"agrees": [], "failures": []}
    one_two = act(r1, act(r2, nu))
    two_one = act(r2, act(r1, nu))
    direct = act(bracket, nu)
    for n in sorted(nu):
        if n > max_arity:
            break
        diff = one_two[n] - two_one[n].scale(sign) - direct[n]
        if diff.is_zero():
            report["agrees"].append(n)
        else:
            report["failures"].append({"arity": n, "entry": diff.support()[0]})
    report["ok"] = not report["failures"]
    return report
