"""Groebner bases for presented nonsymmetric operads.

A presentation is an alphabet of generators plus relations in the free
operad.  A lead monomial divides another monomial when it embeds as a
connected decorated subtree preserving planar input order; reduction
rewrites embedded leads through the free-operad composition so all
Koszul signs are handled in one place.  Completion processes critical
pairs (overlapping embeddings of two leads) in increasing arity of the
overlap monomial, interreducing after each addition, and certifies the
result by a final sweep in which every S-polynomial within the arity
cap reduces to zero.

The module also hosts two order-independent oracles: a brute-force
dimension computation that spans the ideal slice arity by arity, and
dimension bookkeeping for composite collections used to certify
distributive laws.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Optional, Sequence

from .free_operad import (
    Generator,
    MonomialOrder,
    OperadElement,
    TreeMonomial,
    operadic_suspension,
    parse_element,
    suspend_element,
    suspension_transport_sign,
)
from .linalg import SparseEchelon, nullspace
from .trees import compositions

Child = Optional[TreeMonomial]


# -- planar divisors ---------------------------------------------------------


def subtree_monomial(host: TreeMonomial, path: tuple[int, ...]) -> TreeMonomial:
    m = host
    for k in path:
        child = m.children[k]
        if child is None:
            raise ValueError("path runs into a leaf")
        m = child
    return m


def match_at(host: TreeMonomial, path: tuple[int, ...], pattern: TreeMonomial) -> Optional[list[Child]]:
    """Match pattern with its root at `path`; return the hanging subtrees.

    The returned list has one entry per input of the pattern, in planar
    order: the subtree of the host below that input, or None when the
    host has a bare input there.  Returns None if the pattern does not
    match.
    """
    inners: list[Child] = []

    def walk(h: TreeMonomial, p: TreeMonomial) -> bool:
        if h.gen != p.gen:
            return False
        for hc, pc in zip(h.children, p.children):
            if pc is None:
                inners.append(hc)
            else:
                if hc is None or not walk(hc, pc):
                    return False
        return True

    if walk(subtree_monomial(host, path), pattern):
        return inners
    return None


def find_embedding(host: TreeMonomial, pattern: TreeMonomial) -> Optional[tuple[tuple[int, ...], list[Child]]]:
    """First (preorder) embedding of pattern into host, or None."""
    if pattern.weight > host.weight or pattern.arity > host.arity:
        return None
    for path, gen in host.vertices_preorder():
        if gen == pattern.gen:
            inners = match_at(host, path, pattern)
            if inners is not None:
                return path, inners
    return None


def divides(pattern: TreeMonomial, host: TreeMonomial) -> bool:
    return find_embedding(host, pattern) is not None


def excise(host: TreeMonomial, path: tuple[int, ...]) -> tuple[Optional[TreeMonomial], int]:
    """Cut the subtree at `path` out, leaving a bare input in its place.

    Returns (outer monomial, input index of the cut).  The outer part is
    None when the whole monomial is cut away.
    """
    if not path:
        return None, 1

    def rec(m: TreeMonomial, p: tuple[int, ...]) -> tuple[TreeMonomial, int]:
        k = p[0]
        left = sum(1 if c is None else c.arity for c in m.children[:k])
        child = m.children[k]
        if child is None:
            raise ValueError("path runs into a leaf")
        if len(p) == 1:
            new_child: Child = None
            j = left + 1
        else:
            new_child, j_sub = rec(child, p[1:])
            j = left + j_sub
        return TreeMonomial(m.gen, m.children[:k] + (new_child,) + m.children[k + 1 :]), j

    return rec(host, path)


def embed_relation(host: TreeMonomial, path: tuple[int, ...], lead: TreeMonomial,
                   relation: OperadElement) -> OperadElement:
    """The relation placed so its lead lands on `host` at `path`.

    Builds the outer part (host minus the embedded region) composed with
    the relation composed with the hanging subtrees, entirely through
    the signed free-operad composition, then scales so the coefficient
    of `host` is exactly 1.
    """
    inners = match_at(host, path, lead)
    if inners is None:
        raise ValueError("lead does not embed at the given position")
    plugged = relation
    for i in range(len(inners), 0, -1):
        inner = inners[i - 1]
        if inner is not None:
            plugged = plugged.compose(i, OperadElement.from_monomial(inner))
    outer, j = excise(host, path)
    if outer is None:
        comp = plugged
    else:
        comp = OperadElement.from_monomial(outer).compose(j, plugged)
    q = comp.coeffs.get(host)
    if not q:
        raise AssertionError("recomposition lost the host monomial")
    return comp * (Fraction(1) / q)


# -- presentations -----------------------------------------------------------


def canonicalize_relations(relations: Iterable[OperadElement]) -> tuple[OperadElement, ...]:
    """Drop zeros (with a warning), normalize scale, deduplicate."""
    seen = {}
    for rel in relations:
        if rel.is_zero():
            warnings.warn("dropping a zero relation")
            continue
        first = min(rel.coeffs, key=lambda m: m.key())
        scaled = rel * (Fraction(1) / rel.coeffs[first])
        key = tuple(sorted(((m.key(), c) for m, c in scaled.coeffs.items())))
        seen.setdefault(key, scaled)
    return tuple(seen.values())


@dataclass(frozen=True)
class Presentation:
    """Generators and relations for a quotient of the free ns operad."""

    alphabet: tuple[Generator, ...]
    relations: tuple[OperadElement, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "relations", canonicalize_relations(self.relations))
        names = [g.name for g in self.alphabet]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        for rel in self.relations:
            for mono in rel.coeffs:
                for _, g in mono.vertices_preorder():
                    if g not in self.alphabet:
                        raise ValueError(f"relation uses unknown generator {g.name}")

    def generator(self, name: str) -> Generator:
        for g in self.alphabet:
            if g.name == name:
                return g
        raise KeyError(name)

    @property
    def homogeneity_class(self) -> str:
        """'quadratic', 'quadratic-linear' or 'general' by vertex counts."""
        weights = set()
        for rel in self.relations:
            weights.update(m.weight for m in rel.coeffs)
        if weights <= {2}:
            return "quadratic"
        if weights <= {1, 2}:
            return "quadratic-linear"
        return "general"

    def parse(self, text: str) -> OperadElement:
        return parse_element(text, self.alphabet)


@dataclass(frozen=True)
class RewriteRule:
    """A monic relation with a distinguished leading monomial."""

    lead: TreeMonomial
    relation: OperadElement  # coefficient of lead is 1

    @classmethod
    def from_element(cls, elem: OperadElement, order: MonomialOrder) -> "RewriteRule":
        lead = order.leading_monomial(elem)
        return cls(lead, elem * (Fraction(1) / elem.coeffs[lead]))

    @property
    def tail(self) -> OperadElement:
        return OperadElement.from_monomial(self.lead) - self.relation

    def sort_key(self):
        return (self.lead.arity, self.lead.weight, self.lead.key())


@dataclass
class GroebnerBasis:
    """A set of rewrite rules certified complete up to an arity cap."""

    order: MonomialOrder
    rules: list[RewriteRule]
    arity_cap: int
    complete_up_to_cap: bool = False
    added_rules: list[RewriteRule] = field(default_factory=list)
    presentation: Optional[Presentation] = None

    @property
    def leads(self) -> list[TreeMonomial]:
        return [r.lead for r in self.rules]

    def report(self) -> str:
        if not self.complete_up_to_cap:
            return f"completion not certified up to arity {self.arity_cap}"
        if not self.added_rules:
            return f"input is a Groebner basis up to arity {self.arity_cap}"
        return (
            f"Groebner basis complete up to arity {self.arity_cap}; "
            f"{len(self.added_rules)} rule(s) added"
        )


def normal_form(elem: OperadElement, rules: Sequence[RewriteRule],
                order: MonomialOrder) -> OperadElement:
    """Rewrite until no monomial contains any lead as a planar divisor."""
    work = elem
    while True:
        monos = sorted(work.coeffs, key=cmp_to_key(order.compare), reverse=True)
        hit = None
        for mono in monos:
            for rule in rules:
                emb = find_embedding(mono, rule.lead)
                if emb is not None:
                    hit = (mono, rule, emb[0])
                    break
            if hit:
                break
        if hit is None:
            return work
        mono, rule, path = hit
        comp = embed_relation(mono, path, rule.lead, rule.relation)
        work = work - comp * work.coeffs[mono]


def reduce(elem: OperadElement, basis: GroebnerBasis) -> OperadElement:
    """Normal form of an element modulo a completed basis."""
    if elem.is_zero():
        return elem
    if elem.arity is not None and elem.arity > basis.arity_cap:
        raise ValueError(f"element arity {elem.arity} exceeds cap {basis.arity_cap}")
    return normal_form(elem, basis.rules, basis.order)


# -- critical pairs ----------------------------------------------------------


def _merge(a: TreeMonomial, b: TreeMonomial) -> Optional[TreeMonomial]:
    """Least common refinement of two patterns rooted at the same vertex."""
    if a.gen != b.gen:
        return None
    kids: list[Child] = []
    for ca, cb in zip(a.children, b.children):
        if ca is None:
            kids.append(cb)
        elif cb is None:
            kids.append(ca)
        else:
            m = _merge(ca, cb)
            if m is None:
                return None
            kids.append(m)
    return TreeMonomial(a.gen, tuple(kids))


def _replace_subtree(host: TreeMonomial, path: tuple[int, ...], sub: TreeMonomial) -> TreeMonomial:
    if not path:
        return sub
    k = path[0]
    child = host.children[k]
    if child is None:
        raise ValueError("path runs into a leaf")
    new = _replace_subtree(child, path[1:], sub)
    return TreeMonomial(host.gen, host.children[:k] + (new,) + host.children[k + 1 :])


def overlap_sites(l1: TreeMonomial, l2: TreeMonomial, include_root: bool = True):
    """Common multiples of l1 and l2 with l2's root at a vertex of l1.

    Yields (w, path): w contains l1 at its root and l2 at `path`, and
    every vertex of w comes from one of the two embeddings.
    """
    for path, gen in l1.vertices_preorder():
        if not include_root and not path:
            continue
        if gen != l2.gen:
            continue
        merged = _merge(subtree_monomial(l1, path), l2)
        if merged is not None:
            yield _replace_subtree(l1, path, merged), path


def critical_sites(r1: RewriteRule, r2: RewriteRule, same: bool = False):
    """All overlap placements for the pair of rules, deduplicated.

    Yields (w, path1, path2) with r1's lead embedded at path1 and r2's
    at path2.  With same=True (one rule against itself) the swapped
    direction and the trivial total overlap are omitted.
    """
    seen = set()
    for w, path in overlap_sites(r1.lead, r2.lead, include_root=True):
        if same and not path:
            continue
        key = (w.key(), (), path)
        if key not in seen:
            seen.add(key)
            yield w, (), path
    if same:
        return
    for w, path in overlap_sites(r2.lead, r1.lead, include_root=False):
        key = (w.key(), path, ())
        if key not in seen:
            seen.add(key)
            yield w, path, ()


def s_polynomial(w: TreeMonomial, r1: RewriteRule, path1: tuple[int, ...],
                 r2: RewriteRule, path2: tuple[int, ...]) -> OperadElement:
    e1 = embed_relation(w, path1, r1.lead, r1.relation)
    e2 = embed_relation(w, path2, r2.lead, r2.relation)
    return e1 - e2


def interreduce(rules: list[RewriteRule], order: MonomialOrder) -> list[RewriteRule]:
    """Reduce every rule against the others until stable."""
    rules = sorted(rules, key=RewriteRule.sort_key)
    changed = True
    while changed:
        changed = False
        for k, rule in enumerate(rules):
            others = rules[:k] + rules[k + 1 :]
            nf = normal_form(rule.relation, others, order)
            if nf.is_zero():
                rules = others
                changed = True
                break
            if nf != rule.relation:
                rules[k] = RewriteRule.from_element(nf, order)
                rules.sort(key=RewriteRule.sort_key)
                changed = True
                break
    return rules


def complete(pres: Presentation, order: MonomialOrder, cap: int,
             max_weight: Optional[int] = None) -> GroebnerBasis:
    """Buchberger-style completion up to the given arity cap.

    Critical pairs are processed in increasing arity, then increasing
    overlap monomial; after each addition the rules are interreduced and
    the sweep restarts.  The final sweep certifies that every
    S-polynomial whose overlap monomial has arity <= cap (and weight <=
    max_weight, when given) reduces to zero.
    """
    rules = interreduce(
        [RewriteRule.from_element(r, order) for r in pres.relations], order
    )
    added: list[RewriteRule] = []
    while True:
        sites = []
        for a in range(len(rules)):
            for b in range(a, len(rules)):
                r1, r2 = rules[a], rules[b]
                for w, p1, p2 in critical_sites(r1, r2, same=(a == b)):
                    if w.arity > cap:
                        continue
                    if max_weight is not None and w.weight > max_weight:
                        continue
                    sites.append((w.arity, w.weight, w.key(), w, r1, p1, r2, p2))
        sites.sort(key=lambda s: s[:3])
        new_rule = None
        for _, _, _, w, r1, p1, r2, p2 in sites:
            s_poly = s_polynomial(w, r1, p1, r2, p2)
            nf = normal_form(s_poly, rules, order)
            if not nf.is_zero():
                new_rule = RewriteRule.from_element(nf, order)
                break
        if new_rule is None:
            return GroebnerBasis(
                order=order,
                rules=rules,
                arity_cap=cap,
                complete_up_to_cap=True,
                added_rules=added,
                presentation=pres,
            )
        added.append(new_rule)
        rules = interreduce(rules + [new_rule], order)


# -- normal monomials and dimensions -----------------------------------------


def enumerate_monomials(gens: Sequence[Generator], arity: int, max_weight: int,
                        banned: Sequence[TreeMonomial] = ()) -> list[TreeMonomial]:
    """All tree monomials of the given arity and weight <= max_weight
    containing no banned pattern as a planar divisor."""
    gens = tuple(gens)
    banned = tuple(banned)
    memo: dict[tuple[int, int], list[TreeMonomial]] = {}

    def root_clean(mono: TreeMonomial) -> bool:
        for pat in banned:
            if pat.weight <= mono.weight and pat.arity <= mono.arity:
                if pat.gen == mono.gen and match_at(mono, (), pat) is not None:
                    return False
        return True

    def exact(n: int, w: int) -> list[TreeMonomial]:
        if w < 1:
            return []
        key = (n, w)
        if key in memo:
            return memo[key]
        out: list[TreeMonomial] = []
        for g in gens:
            k = g.arity
            if k > n:
                continue
            for split in compositions(n, k):
                def fill(idx: int, remaining: int, acc: list[Child]):
                    if idx == k:
                        if remaining == 0:
                            cand = TreeMonomial(g, tuple(acc))
                            if root_clean(cand):
                                out.append(cand)
                        return
                    part = split[idx]
                    if part == 1:
                        fill(idx + 1, remaining, acc + [None])
                    low = 1
                    for wc in range(low, remaining + 1):
                        for sub in exact(part, wc):
                            fill(idx + 1, remaining - wc, acc + [sub])

                fill(0, w - 1, [])
        memo[key] = out
        return out

    result: list[TreeMonomial] = []
    for w in range(1, max_weight + 1):
        result.extend(exact(arity, w))
    return result


def default_weight_cap(gens: Sequence[Generator], arity: int,
                       max_degree: Optional[int],
                       banned: Sequence[TreeMonomial] = ()) -> int:
    """Weight bound for exhausting monomials of one arity.

    Without unary generators a monomial of arity n has at most n-1
    vertices.  With unary generators the count of unary vertices must be
    bounded either by a degree cap (unary generators of positive degree)
    or by banned length-2 unary chains, which pin unary vertices to the
    at most 2n-1 slots of the wider skeleton.
    """
    unary = [g for g in gens if g.arity == 1]
    if not unary:
        return max(arity - 1, 1)
    if max_degree is not None and all(g.degree >= 1 for g in unary):
        return max(arity - 1, 0) + max_degree
    chains_banned = all(
        any(divides(pat, TreeMonomial(u, (v.corolla(),))) for pat in banned)
        for u in unary
        for v in unary
    )
    if chains_banned:
        return max(arity - 1, 0) + 2 * arity - 1
    raise ValueError(
        "cannot bound monomial weight: need a degree cap or banned unary chains"
    )


def normal_monomials(basis: GroebnerBasis, arity: int,
                     max_degree: Optional[int] = None) -> list[TreeMonomial]:
    """Monomials of one arity avoiding every lead as a planar divisor."""
    if not basis.complete_up_to_cap:
        raise ValueError("basis is not certified complete")
    if arity > basis.arity_cap:
        raise ValueError(f"arity {arity} exceeds cap {basis.arity_cap}")
    gens = basis.presentation.alphabet if basis.presentation else tuple(
        {g for r in basis.rules for _, g in r.lead.vertices_preorder()}
    )
    cap = default_weight_cap(gens, arity, max_degree, banned=basis.leads)
    monos = enumerate_monomials(gens, arity, cap, banned=basis.leads)
    if max_degree is not None:
        monos = [m for m in monos if m.degree <= max_degree]
    return monos


def hilbert(basis: GroebnerBasis, arity: int,
            max_degree: Optional[int] = None) -> dict[int, int]:
    """Dimension per homological degree from the normal monomial count."""
    table: dict[int, int] = {}
    if arity == 1:
        table[0] = 1  # the identity operation
    for mono in normal_monomials(basis, arity, max_degree):
        table[mono.degree] = table.get(mono.degree, 0) + 1
    return dict(sorted(table.items()))


# -- brute-force dimension oracle --------------------------------------------


class IdealSlice:
    """Arity-by-arity span of the ideal generated by the relations.

    Seeds every relation and closes under single-generator composition
    on either side, tracking rank incrementally per graded cell; only
    rank-increasing elements are expanded, which is sound because spans
    are closed under the (linear) composition maps.  Relations that are
    single monomials are handled by projection: any monomial divisible
    by one is silently in the ideal, so it is dropped from every vector
    and from the monomial counts' complement.
    """

    def __init__(self, pres: Presentation, max_arity: int,
                 max_degree: Optional[int] = None, expansion_guard: int = 2_000_000):
        self.pres = pres
        self.max_arity = max_arity
        self.banned = tuple(
            next(iter(r.coeffs)) for r in pres.relations if len(r.coeffs) == 1
        )
        self.granularity = self._granularity()
        if self.granularity != "arity" and max_degree is None:
            max_degree = self._default_degree_cap()
        self.max_degree = max_degree
        self.cells: dict[tuple, SparseEchelon] = {}
        self._spanned(expansion_guard)

    # cell bookkeeping

    def _granularity(self) -> str:
        def counts_key(m: TreeMonomial):
            return tuple(sorted(m.generator_counts().items()))

        by_counts = all(
            len({counts_key(m) for m in r.coeffs}) == 1 for r in self.pres.relations
        )
        if by_counts:
            return "counts"
        by_degree = all(len(r.degrees()) == 1 for r in self.pres.relations)
        return "degree" if by_degree else "arity"

    def _default_degree_cap(self) -> int:
        big = max((g.degree for g in self.pres.alphabet if g.arity >= 2), default=0)
        uni = max((g.degree for g in self.pres.alphabet if g.arity == 1), default=0)
        return (self.max_arity - 1) * big + 2 * self.max_arity * uni

    def _cell_of(self, mono: TreeMonomial) -> tuple:
        if self.granularity == "counts":
            return (mono.arity, tuple(sorted(mono.generator_counts().items())))
        if self.granularity == "degree":
            return (mono.arity, mono.degree)
        return (mono.arity,)

    def _project(self, elem: OperadElement) -> OperadElement:
        if not self.banned:
            return elem
        return OperadElement(
            {m: c for m, c in elem.coeffs.items()
             if not any(divides(p, m) for p in self.banned)}
        )

    def _split_cells(self, elem: OperadElement) -> dict[tuple, dict]:
        parts: dict[tuple, dict] = {}
        for m, c in elem.coeffs.items():
            parts.setdefault(self._cell_of(m), {})[m.key()] = c
        return parts

    def _mono_by_key(self, elem: OperadElement) -> dict:
        return {m.key(): m for m in elem.coeffs}

    def _within_caps(self, elem: OperadElement) -> bool:
        if elem.is_zero():
            return False
        if elem.arity > self.max_arity:
            return False
        if self.max_degree is not None:
            if min(m.degree for m in elem.coeffs) > self.max_degree:
                return False
        return True

    def _spanned(self, guard: int):
        queue: deque[OperadElement] = deque()
        spent = 0

        def offer(elem: OperadElement):
            nonlocal spent
            elem = self._project(elem)
            if not self._within_caps(elem):
                return
            new_rank = False
            for cell, row in self._split_cells(elem).items():
                ech = self.cells.setdefault(cell, SparseEchelon())
                if ech.add(row):
                    new_rank = True
            if new_rank:
                queue.append(elem)
                spent += 1
                if spent > guard:
                    raise RuntimeError("ideal-slice expansion guard exceeded")

        for rel in self.pres.relations:
            if len(rel.coeffs) == 1:
                continue  # fully absorbed by the projection
            offer(rel)
        while queue:
            elem = queue.popleft()
            for g in self.pres.alphabet:
                outer = OperadElement.from_generator(g)
                for i in range(1, g.arity + 1):
                    offer(outer.compose(i, elem))
                for i in range(1, elem.arity + 1):
                    offer(elem.compose(i, outer))

    # queries

    def contains(self, elem: OperadElement) -> bool:
        elem = self._project(elem)
        if elem.is_zero():
            return True
        for cell, row in self._split_cells(elem).items():
            ech = self.cells.get(cell)
            if ech is None or not ech.contains(row):
                return False
        return True

    def _survivor_monomials(self, arity: int) -> list[TreeMonomial]:
        cap = default_weight_cap(self.pres.alphabet, arity, self.max_degree,
                                 banned=self.banned)
        monos = enumerate_monomials(self.pres.alphabet, arity, cap, banned=self.banned)
        if self.max_degree is not None:
            monos = [m for m in monos if m.degree <= self.max_degree]
        return monos

    def dimension_by_degree(self, arity: int) -> dict[int, int]:
        if self.granularity == "arity":
            raise ValueError("relations are not graded; only totals are defined")
        if arity > self.max_arity:
            raise ValueError("arity beyond computed range")
        table: dict[int, int] = {}
        for m in self._survivor_monomials(arity):
            table[m.degree] = table.get(m.degree, 0) + 1
        if arity == 1:
            table[0] = table.get(0, 0) + 1
        for cell, ech in self.cells.items():
            if cell[0] != arity:
                continue
            degree = self._cell_degree(cell)
            table[degree] = table.get(degree, 0) - ech.rank
        return {d: v for d, v in sorted(table.items()) if v}

    def _cell_degree(self, cell: tuple) -> int:
        if self.granularity == "degree":
            return cell[1]
        counts = dict(cell[1])
        return sum(self.pres.generator(name).degree * k for name, k in counts.items())

    def dimension_total(self, arity: int) -> int:
        if arity > self.max_arity:
            raise ValueError("arity beyond computed range")
        total = len(self._survivor_monomials(arity)) + (1 if arity == 1 else 0)
        for cell, ech in self.cells.items():
            if cell[0] == arity:
                total -= ech.rank
        return total

    def dimension_of_counts(self, arity: int, counts: dict[str, int]) -> int:
        """Dimension of the slice with the given generator multiplicities."""
        if self.granularity != "counts":
            raise ValueError("relations are not multigraded by generator counts")
        counts = {k: v for k, v in counts.items() if v}
        key = (arity, tuple(sorted(counts.items())))
        monos = [
            m for m in self._survivor_monomials(arity)
            if m.generator_counts() == counts
        ]
        total = len(monos)
        if arity == 1 and all(v == 0 for v in counts.values()):
            total += 1
        ech = self.cells.get(key)
        return total - (ech.rank if ech else 0)


def component_dimension_bruteforce(pres: Presentation, arity: int,
                                   max_degree: Optional[int] = None) -> dict[int, int]:
    """Dimension per degree of the arity component, by exact linear algebra."""
    return IdealSlice(pres, arity, max_degree).dimension_by_degree(arity)


def component_dimension_total(pres: Presentation, arity: int,
                              max_degree: Optional[int] = None) -> int:
    return IdealSlice(pres, arity, max_degree).dimension_total(arity)


# -- Koszul duality ----------------------------------------------------------


def quadratic_monomials(gens: Sequence[Generator], arity: int) -> list[TreeMonomial]:
    """All two-vertex monomials g composed with h, of one composite arity."""
    out = []
    for g in gens:
        for i in range(1, g.arity + 1):
            for h in gens:
                if g.arity + h.arity - 1 == arity:
                    out.append(TreeMonomial(
                        g, tuple(
                            h.corolla() if k == i - 1 else None
                            for k in range(g.arity)
                        )
                    ))
    return sorted(out, key=lambda m: m.key())


def dual_generators(gens: Sequence[Generator]) -> dict[Generator, Generator]:
    """g maps to a generator of the same name and arity, degree (arity-2)-deg."""
    return {g: Generator(g.name, g.arity, (g.arity - 2) - g.degree) for g in gens}


def suspend_presentation(pres: Presentation, power: int = 1,
                         name: str = "") -> Presentation:
    """Operadic suspension of a presented operad.

    Generators are regraded by power*(arity-1) and every relation is
    transported with the suspension signs of suspend_element.
    """
    mapping = operadic_suspension(pres.alphabet, power)
    alphabet = tuple(mapping[g] for g in pres.alphabet)
    relations = tuple(
        suspend_element(r, mapping, power) for r in pres.relations
    )
    if not name and pres.name:
        name = "S{}{}".format("" if power == 1 else power, pres.name)
    return Presentation(alphabet, relations, name=name)


def pairing_sign(mono: TreeMonomial) -> int:
    """Sign with which a two-vertex monomial pairs against its dual basis.

    A two-vertex monomial with inner generator of arity q in slot i pairs
    with its dual-generator twin with coefficient (-1)^((q-1)i).  This
    diagonal is the unique minimal choice compatible with the module's
    composition and suspension signs: it sends associativity of an even
    generator to associativity, pairs the k-ary totally associative and
    partially associative relation patterns, and is its own transpose on
    dual degrees so that annihilators of annihilators return the original
    relation space.
    """
    for slot, child in enumerate(mono.children, start=1):
        if child is not None:
            return -1 if (child.gen.arity - 1) * slot % 2 else 1
    raise ValueError("expected a two-vertex monomial")


def koszul_dual(pres: Presentation, name: str = "",
                arities: Optional[Sequence[int]] = None) -> Presentation:
    """Quadratic dual: relations are the annihilator of the input relations.

    Two-vertex monomials pair basis to dual basis (same shape, same
    generators) with the coefficient from pairing_sign; the annihilator
    is taken with respect to that pairing.  Dual generators keep their
    names with degree (arity-2)-degree.

    By default the annihilator is taken in each arity where the input
    has relations; pass `arities` to dualize other components too (for a
    truncated presentation of an infinite family the components beyond
    the truncation are not meaningful).
    """
    if pres.homogeneity_class != "quadratic":
        raise ValueError("Koszul dual requires a quadratic presentation")
    duals = dual_generators(pres.alphabet)
    dual_alphabet = tuple(duals[g] for g in pres.alphabet)

    def dualize(mono: TreeMonomial) -> TreeMonomial:
        kids = tuple(None if c is None else dualize(c) for c in mono.children)
        return TreeMonomial(duals[mono.gen], kids)

    if arities is None:
        arities = sorted({r.arity for r in pres.relations})
    dual_relations: list[OperadElement] = []
    for n in arities:
        basis = quadratic_monomials(pres.alphabet, n)
        if not basis:
            continue
        index = {m.key(): k for k, m in enumerate(basis)}
        signs = [pairing_sign(m) for m in basis]
        rows = []
        for r in pres.relations:
            if r.arity != n:
                continue
            row = [Fraction(0)] * len(basis)
            for m, c in r.coeffs.items():
                k = index[m.key()]
                row[k] = c * signs[k]
            rows.append(row)
        for vec in nullspace(rows, len(basis)):
            dual_relations.append(OperadElement(
                {dualize(basis[k]): v for k, v in enumerate(vec) if v}
            ))
    return Presentation(dual_alphabet, tuple(dual_relations),
                        name=name or (pres.name + "!" if pres.name else "dual"))


# -- distributive laws -------------------------------------------------------


def composite_dimensions(p_dims: dict[int, dict[int, int]],
                         q_dims: dict[int, dict[int, int]],
                         arity: int) -> dict[int, int]:
    """Graded dimension of the composite collection (P after Q) at one arity.

    p_dims / q_dims map arity to a degree-to-dimension table; the
    composite sums over k and over planar splittings of the inputs.
    """

    def poly_mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for da, va in a.items():
            for db, vb in b.items():
                out[da + db] = out.get(da + db, 0) + va * vb
        return out

    total: dict[int, int] = {}
    for k in range(1, arity + 1):
        pk = p_dims.get(k, {})
        if not pk:
            continue
        for split in compositions(arity, k):
            prod = {0: 1}
            ok = True
            for part in split:
                qp = q_dims.get(part, {})
                if not qp:
                    ok = False
                    break
                prod = poly_mul(prod, qp)
            if not ok:
                continue
            for d, v in poly_mul(pk, prod).items():
                total[d] = total.get(d, 0) + v
    return {d: v for d, v in sorted(total.items()) if v}


def distributive_law_check(pq: Presentation, p: Presentation, q: Presentation,
                           cap: int, max_degree: Optional[int] = None) -> dict:
    """Compare graded dimensions of pq against the composite of p and q."""
    pq_slice = IdealSlice(pq, cap, max_degree)
    p_slice = IdealSlice(p, cap, max_degree)
    q_slice = IdealSlice(q, cap, max_degree)
    p_dims = {n: p_slice.dimension_by_degree(n) for n in range(1, cap + 1)}
    q_dims = {n: q_slice.dimension_by_degree(n) for n in range(1, cap + 1)}
    detail = {}
    ok = True
    for n in range(1, cap + 1):
        lhs = pq_slice.dimension_by_degree(n)
        rhs = composite_dimensions(p_dims, q_dims, n)
        match = lhs == rhs
        ok = ok and match
        detail[n] = {"quotient": lhs, "composite": rhs, "match": match}
    return {"match": ok, "arities": detail}


# -- serialization -----------------------------------------------------------


def presentation_to_text(pres: Presentation) -> str:
    lines = [f"operad {pres.name}" if pres.name else "operad"]
    for g in pres.alphabet:
        lines.append(f"generator {g.name} {g.arity} {g.degree}")
    for r in pres.relations:
        lines.append(f"relation {r.to_text()}")
    return "\n".join(lines) + "\n"


def presentation_from_text(text: str) -> Presentation:
    name = ""
    gens: list[Generator] = []
    rel_lines: list[str] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(" ")
        if head == "operad":
            name = rest.strip()
        elif head == "generator":
            parts = rest.split()
            if len(parts) != 3:
                raise ValueError(f"bad generator line: {line!r}")
            gens.append(Generator(parts[0], int(parts[1]), int(parts[2])))
        elif head == "relation":
            rel_lines.append(rest)
        else:
            raise ValueError(f"unknown line: {line!r}")
    relations = tuple(parse_element(t, gens) for t in rel_lines)
    return Presentation(tuple(gens), relations, name=name)
