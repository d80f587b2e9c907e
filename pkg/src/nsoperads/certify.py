"""Machine certificates for the package's headline computations.

Each certificate bundles one family of cross-checks: dimension tables
computed three independent ways, completion of the rewriting systems,
mutual annihilation of dual relation spaces, the correlator recursion
against its closed form, the three vertex rules of the polytope and its
normal fan, the composition axioms of brick configurations, the
Borjeson product calculus, the deformation recursion, and the Betti
tables of the real points.  A certificate either passes, with a short
summary of what was covered, or fails with the first concrete witness.

All arithmetic is exact; random sampling uses an explicit seed so every
run is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from random import Random
from typing import Callable, Sequence

from .borjeson import (
    Symbol,
    bar_algebra,
    borjeson,
    commutator_check,
    diffop_decompose,
    preserves_associative,
    random_symbol,
    reliable_window,
    rho,
)
from .brick import (
    SubspaceConfig,
    brick_compose,
    random_config,
    random_corolla_config,
    stratum_of,
)
from .correlators import (
    CorrelatorIndex,
    all_indices,
    correlator_closed,
    correlator_trr,
    nonzero_indices,
)
from .free_operad import OperadElement
from .givental import (
    associative_family,
    givental_direct,
    givental_tau0,
    givental_tower,
)
from .groebner import (
    Presentation,
    complete,
    koszul_dual,
    quadratic_monomials,
    suspend_presentation,
)
from .linalg import Subspace
from .multilinear import EndoSeries, GradedSpace, MultilinearOp, TensorAlgebraTrunc
from .ordinals import Ordinal
from .polytopes import (
    complex_betti,
    fan_verify,
    h_vector,
    loday_polytope,
    loday_vertex,
    loday_via_minkowski,
    normal_fan,
    vertex_missing_basis,
)
from .polytopes import real_betti as real_betti_topological
from .trees import PlanarTree, enumerate_trees, one_edge_trees
from .zoo import (
    catalan,
    certify_dimensions,
    euler_characteristic_real,
    narayana,
    named_operad,
    real_betti,
)

__all__ = [
    "Certificate",
    "certificate_dimension_tables",
    "certificate_groebner_bases",
    "certificate_koszul_duality",
    "certificate_correlators",
    "certificate_polytope_fan",
    "certificate_brick_axioms",
    "certificate_borjeson_calculus",
    "certificate_givental_action",
    "certificate_real_betti",
    "run_all",
    "CERTIFICATES",
]


@dataclass(frozen=True)
class Certificate:
    """Outcome of one certificate battery."""

    number: int
    name: str
    ok: bool
    detail: str

    def line(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        return f"{verdict} [{self.number}] {self.name}: {self.detail}"


class _Failure(Exception):
    """First witness of a failed check inside a certificate."""


def _check(condition: bool, witness: str) -> None:
    if not condition:
        raise _Failure(witness)


def _guarded(number: int, name: str, body: Callable[[], str]) -> Certificate:
    try:
        return Certificate(number, name, True, body())
    except (_Failure, ValueError, AssertionError) as exc:
        return Certificate(number, name, False, str(exc))


def _random_unary(
    alg: TensorAlgebraTrunc, degree: int, rng: Random, terms: int = 6
) -> MultilinearOp:
    """A random degree-homogeneous unary operator on a word algebra."""
    degs = alg.space.degrees
    pool: dict = {}
    for _ in range(terms * 3):
        i = rng.randrange(alg.space.total_dim)
        outs = [o for o in range(alg.space.total_dim) if degs[o] == degs[i] + degree]
        if not outs:
            continue
        o = rng.choice(outs)
        key = (o, (i,))
        pool[key] = pool.get(key, Fraction(0)) + Fraction(rng.randint(-3, 3))
        if len(pool) >= terms:
            break
    return MultilinearOp(
        alg.space, 1, degree, {k: v for k, v in pool.items() if v}
    )


# -- 1. dimension tables ------------------------------------------------------


def certificate_dimension_tables() -> Certificate:
    """Groebner counts, brute-force ranks and closed forms must agree."""

    def body() -> str:
        rep = certify_dimensions("ncHyperCom", 7)
        catalans = {2: 1, 3: 2, 4: 5, 5: 14, 6: 42, 7: 132}
        for n in range(2, 8):
            table = rep["tables"][n]["groebner"]
            _check(
                sum(table.values()) == catalans[n],
                f"ncHyperCom arity {n}: total {sum(table.values())}, "
                f"expected {catalans[n]}",
            )
            refined = {2 * k: narayana(n, k) for k in range(n - 1) if narayana(n, k)}
            _check(
                table == refined,
                f"ncHyperCom arity {n}: graded table {table} is not the "
                f"refined count {refined}",
            )
        rep = certify_dimensions("ncGrav", 7)
        for n in range(2, 8):
            total = rep["tables"][n]["total"]
            _check(
                total == 2 ** (n - 2),
                f"ncGrav arity {n}: total {total}, expected {2 ** (n - 2)}",
            )
        rep = certify_dimensions("ncGerst", 6)
        for n in range(1, 7):
            table = rep["tables"][n]["groebner"]
            binomials = {k: comb(n - 1, k) for k in range(n)}
            _check(
                table == binomials,
                f"ncGerst arity {n}: graded table {table}, "
                f"expected {binomials}",
            )
        rep = certify_dimensions("qncBV", 4)
        for n in range(1, 5):
            total = rep["tables"][n]["total"]
            _check(
                total == 2 ** (2 * n - 1),
                f"qncBV arity {n}: total {total}, expected {2 ** (2 * n - 1)}",
            )
        return (
            "ncHyperCom(<=7) refined Catalan, ncGrav(<=7) powers of two, "
            "ncGerst(<=6) binomials, qncBV(<=4) powers of four; "
            "three routes agree throughout"
        )

    return _guarded(1, "dimension-tables", body)


# -- 2. Groebner certificates -------------------------------------------------


def certificate_groebner_bases() -> Certificate:
    """Both headline rewriting systems are already complete at arity 7."""

    def body() -> str:
        grav = named_operad("ncGrav", max_arity=7)
        gb = complete(grav.presentation, grav.preferred_order, 7)
        _check(gb.complete_up_to_cap, "ncGrav completion was not certified")
        _check(
            not gb.added_rules,
            "ncGrav completion added a rule with lead "
            + (gb.added_rules[0].lead.to_text() if gb.added_rules else ""),
        )
        hyper = named_operad("ncHyperCom", max_arity=7)
        gbh = complete(hyper.presentation, hyper.preferred_order, 7)
        _check(gbh.complete_up_to_cap, "ncHyperCom completion was not certified")
        _check(
            not gbh.added_rules,
            "ncHyperCom completion added a rule with lead "
            + (gbh.added_rules[0].lead.to_text() if gbh.added_rules else ""),
        )
        pres = hyper.presentation
        elems = {
            j: OperadElement.from_generator(pres.generator(f"nu{j}"))
            for j in range(2, 7)
        }
        expected = {}
        for j in range(2, 7):
            for p in range(2, j + 1):
                product = elems[j].compose(p, elems[2])
                (mono,) = product.coeffs
                expected[mono.key()] = mono.to_text()
        got = {rule.lead.key(): rule.lead.to_text() for rule in gbh.rules}
        for key in sorted(set(expected) - set(got)):
            raise _Failure(f"expected leading monomial {expected[key]} is missing")
        for key in sorted(set(got) - set(expected)):
            raise _Failure(f"unexpected leading monomial {got[key]}")
        return (
            f"zero completions added at arity cap 7; the {len(got)} "
            "ncHyperCom leads are exactly the second-slot corner products"
        )

    return _guarded(2, "groebner-certificates", body)


# -- 3. Koszul duality --------------------------------------------------------


def _relation_span(pres: Presentation, arity: int) -> Subspace:
    """Row space of the arity slice of the relations, in the monomial basis."""
    basis = quadratic_monomials(pres.alphabet, arity)
    index = {mono.key(): k for k, mono in enumerate(basis)}
    rows = []
    for rel in pres.relations:
        if rel.arity != arity:
            continue
        row = [Fraction(0)] * len(basis)
        for mono, coeff in rel.coeffs.items():
            row[index[mono.key()]] = coeff
        rows.append(row)
    return Subspace(len(basis), rows)


def certificate_koszul_duality() -> Certificate:
    """The two relation spaces annihilate each other in every arity."""

    def body() -> str:
        arities = [3, 4, 5, 6]
        grav = named_operad("ncGrav", max_arity=6).presentation
        hyper = named_operad("ncHyperCom", max_arity=6).presentation
        sgrav = suspend_presentation(grav, -1, name="SncGrav")
        dual_sgrav = koszul_dual(sgrav, arities=arities)
        dual_hyper = koszul_dual(hyper, arities=arities)
        for n in arities:
            span_h = _relation_span(hyper, n)
            span_sg = _relation_span(sgrav, n)
            _check(
                _relation_span(dual_sgrav, n) == span_h,
                f"arity {n}: the annihilator of the suspended gravity "
                "relations differs from the hypercommutative relations",
            )
            _check(
                _relation_span(dual_hyper, n) == span_sg,
                f"arity {n}: the annihilator of the hypercommutative "
                "relations differs from the suspended gravity relations",
            )
            pairs = comb(n, 2) - 1
            _check(
                span_h.dim == n - 2,
                f"arity {n}: hypercommutative relations span "
                f"{span_h.dim}, expected {n - 2}",
            )
            _check(
                span_sg.dim == pairs - (n - 2),
                f"arity {n}: suspended gravity relations span "
                f"{span_sg.dim}, expected {pairs - (n - 2)}",
            )
        return (
            "mutual annihilators in arities 3..6 (lower arities hold no "
            "quadratic monomials); splits (n-2) + (C(n,2)-1-(n-2)) confirmed"
        )

    return _guarded(3, "koszul-duality", body)


# -- 4. correlators -----------------------------------------------------------


def certificate_correlators() -> Certificate:
    """Closed form and recursion agree on every index up to arity 7."""

    def body() -> str:
        total_nonzero = 0
        for n in range(2, 8):
            nonzero = 0
            for degree in range(0, n):
                for idx in all_indices(n, degree):
                    closed = correlator_closed(idx)
                    recursed = correlator_trr(idx)
                    _check(
                        closed == recursed,
                        f"closed form {closed} and recursion {recursed} "
                        f"disagree at {idx}",
                    )
                    _check(closed in (0, 1), f"value {closed} at {idx}")
                    if closed:
                        nonzero += 1
                        _check(
                            idx.ds[0] == 0 and idx.ds[-1] == 0,
                            f"nonzero value with a boundary exponent at {idx}",
                        )
            _check(
                nonzero >= 2 ** (n - 2),
                f"arity {n}: only {nonzero} nonzero correlators, "
                f"expected at least {2 ** (n - 2)}",
            )
            _check(
                nonzero == len(nonzero_indices(n)),
                f"arity {n}: index enumeration finds "
                f"{len(nonzero_indices(n))}, scan finds {nonzero}",
            )
            total_nonzero += nonzero
        triple = correlator_closed(CorrelatorIndex(0, (0, 0)))
        _check(triple == 1, f"the triple-point correlator is {triple}, not 1")
        return (
            f"exhaustive scan over degrees 0..n-1 for n<=7; {total_nonzero} "
            "nonzero values, all equal to one, none with boundary exponents"
        )

    return _guarded(4, "correlators", body)


# -- 5. polytope and fan ------------------------------------------------------


def certificate_polytope_fan() -> Certificate:
    """Three vertex rules, exact extremality, h-vector, wall equations."""

    def body() -> str:
        for n in range(2, 8):
            binary = enumerate_trees(n, binary_only=True)
            for tree in binary:
                v = loday_vertex(tree)
                w = vertex_missing_basis(tree)
                _check(
                    v == w,
                    f"vertex rules disagree on {tree.to_text()}: {v} vs {w}",
                )
                _check(
                    sum(v) == comb(n, 2),
                    f"vertex {v} of {tree.to_text()} has coordinate sum "
                    f"{sum(v)}, expected {comb(n, 2)}",
                )
            polytope = loday_polytope(n)
            polytope.verify()
            minkowski = loday_via_minkowski(n)
            _check(
                polytope.vertices == minkowski.vertices,
                f"n={n}: Minkowski vertices differ from the tree vertices",
            )
            _check(
                len(polytope.vertices) == catalan(n - 1),
                f"n={n}: {len(polytope.vertices)} vertices, "
                f"expected {catalan(n - 1)}",
            )
            h = h_vector(n)
            refined = tuple(narayana(n, k) for k in range(n - 1))
            _check(h == refined, f"n={n}: h-vector {h}, refined count {refined}")
            betti = complex_betti(n)
            _check(
                all(betti[d] == 0 for d in range(1, len(betti), 2))
                and tuple(betti[2 * k] for k in range(n - 1)) == refined,
                f"n={n}: complex Betti numbers {betti} do not match the "
                f"h-vector {refined}",
            )
        reports = [fan_verify(normal_fan(n)) for n in (4, 5)]
        return (
            "vertex rules and coordinate sums agree for n<=7; counts are "
            "Catalan; h-vector equals refined counts and even Betti numbers; "
            f"fans for n=4,5 verified with {reports[0]['walls']} and "
            f"{reports[1]['walls']} walls on their gap-equality hyperplanes"
        )

    return _guarded(5, "polytope-fan", body)


# -- 6. brick composition axioms ----------------------------------------------


def _brick_profiles(max_total: int) -> list[tuple[int, int, int]]:
    """Ordered arity triples whose double composite stays within the cap."""
    out = []
    for a in range(2, max_total):
        for b in range(2, max_total):
            for c in range(2, max_total):
                if a + b + c - 2 <= max_total:
                    out.append((a, b, c))
    return out


def certificate_brick_axioms(
    seed: int = 0,
    trials: int = 100,
    profiles: Sequence[tuple[int, int, int]] | None = None,
) -> Certificate:
    """Parallel and sequential axioms on random configuration triples."""

    def body() -> str:
        rng = Random(seed)
        trees_by_arity = {a: enumerate_trees(a) for a in range(2, 6)}
        chosen = _brick_profiles(7) if profiles is None else list(profiles)
        checked = 0
        for a, b, c in chosen:
            for _ in range(trials):
                x = random_config(
                    rng.choice(trees_by_arity[a]), rng, Ordinal(range(1, a + 1))
                )
                y = random_config(
                    rng.choice(trees_by_arity[b]),
                    rng,
                    Ordinal(range(101, 101 + b)),
                )
                z = random_config(
                    rng.choice(trees_by_arity[c]),
                    rng,
                    Ordinal(range(201, 201 + c)),
                )
                i, j = sorted(rng.sample(range(1, a + 1), 2))
                parallel_lhs = brick_compose(brick_compose(x, i, y), j, z)
                parallel_rhs = brick_compose(brick_compose(x, j, z), i, y)
                _check(
                    parallel_lhs == parallel_rhs,
                    f"parallel axiom fails at profile {(a, b, c)}, "
                    f"slots {(i, j)}, seed {seed}",
                )
                u = rng.randrange(1, a + 1)
                v = rng.randrange(101, 101 + b)
                nested_lhs = brick_compose(brick_compose(x, u, y), v, z)
                nested_rhs = brick_compose(x, u, brick_compose(y, v, z))
                _check(
                    nested_lhs == nested_rhs,
                    f"sequential axiom fails at profile {(a, b, c)}, "
                    f"slots {(u, v)}, seed {seed}",
                )
                checked += 1
        one_edge = 0
        for n in range(3, 8):
            for tree in one_edge_trees(n):
                children = tree.children
                inner_positions = [
                    k for k, child in enumerate(children) if not child.is_leaf
                ]
                _check(
                    len(inner_positions) == 1,
                    f"{tree.to_text()} is not a one-edge tree",
                )
                slot = inner_positions[0] + 1
                outer_arity = len(children)
                inner_arity = len(children[slot - 1].children)
                outer = random_corolla_config(
                    Ordinal(range(1, outer_arity + 1)), rng
                )
                inner = random_corolla_config(
                    Ordinal(range(101, 101 + inner_arity)), rng
                )
                composite = brick_compose(outer, slot, inner)
                _check(
                    stratum_of(composite) == tree,
                    f"stratum of the composite over {tree.to_text()} "
                    f"is {stratum_of(composite).to_text()}",
                )
                one_edge += 1
        label = "profile" if len(chosen) == 1 else "profiles"
        return (
            f"both axioms on {checked} random rational triples across "
            f"{len(chosen)} arity {label}; composite strata match all "
            f"{one_edge} one-edge grafts"
        )

    return _guarded(6, "brick-axioms", body)


# -- 7. Borjeson calculus -----------------------------------------------------


def _three_dim_nilpotent() -> tuple[GradedSpace, MultilinearOp]:
    """The associative algebra on x, x^2, x^3 with x^4 = 0."""
    space = GradedSpace((0, 0, 0), ("x", "xx", "xxx"))
    product = MultilinearOp(
        space,
        2,
        0,
        {
            (1, (0, 0)): Fraction(1),
            (2, (0, 1)): Fraction(1),
            (2, (1, 0)): Fraction(1),
        },
    )
    return space, product


def certificate_borjeson_calculus(seed: int = 0) -> Certificate:
    """Product engines, commutators, symbol round trips, bar differential."""

    def body() -> str:
        rng = Random(seed)
        alg = TensorAlgebraTrunc(GradedSpace.ungraded(2), 4)
        m = alg.product()
        for _ in range(5):
            op = _random_unary(alg, 0, rng, 8)
            for n in range(1, 7):
                borjeson(op, m, n)
        graded = TensorAlgebraTrunc(GradedSpace((0, 1), ("e", "f")), 3)
        gm = graded.product()
        for d1, d2 in ((0, 0), (0, 1), (1, 1)):
            op1 = _random_unary(graded, d1, rng, 5)
            op2 = _random_unary(graded, d2, rng, 5)
            report = commutator_check(op1, op2, gm, 5)
            _check(
                report["ok"],
                f"commutator expansion fails for degrees {(d1, d2)}: "
                f"{report['failures'][:1]}",
            )
        for order in (1, 2, 3):
            symbol = random_symbol(alg, order, rng, terms=4)
            op = rho(symbol, alg)
            _check(
                reliable_window(borjeson(op, m, order + 1), alg).is_zero(),
                f"an order-{order} symbol violates the vanishing bound",
            )
            back = diffop_decompose(op, alg)
            _check(
                len(back) == 1
                and back[0].arity == order
                and back[0].entries == symbol.entries,
                f"round trip fails on an order-{order} symbol",
            )
        mixed = _random_unary(alg, 0, rng, 12)
        pieces = diffop_decompose(mixed, alg)
        total = MultilinearOp.zero(alg.space, 1, mixed.degree)
        for piece in pieces:
            total = total + rho(piece, alg)
        _check(total == mixed, "symbol decomposition does not resum")
        _, product = _three_dim_nilpotent()
        bar, deltas = bar_algebra({2: product}, 4)
        concat = bar.product()
        _check(
            deltas[1].compose_at(1, deltas[1]).is_zero(),
            "the bar differential does not square to zero",
        )
        _check(
            reliable_window(borjeson(deltas[1], concat, 3), bar).is_zero(),
            "the third product of the bar differential does not vanish",
        )
        _check(
            not reliable_window(borjeson(deltas[1], concat, 2), bar).is_zero(),
            "the bar differential is unexpectedly a derivation",
        )
        return (
            "engines agree to arity 6 on five random operators; commutator "
            "expansion holds entrywise to arity 5 in all degree mixes; "
            "symbols of order <= 3 round-trip; the bar differential of the "
            "nilpotent fixture squares to zero with third product zero"
        )

    return _guarded(7, "borjeson-calculus", body)


# -- 8. deformation recursion ---------------------------------------------------


def _deformation_vanishes(
    series: EndoSeries,
    family: dict,
    alg: TensorAlgebraTrunc | None,
) -> bool:
    """Direct route: the level-l tower of component l must vanish."""
    for level in range(len(series)):
        component = series.component(level)
        if component.is_zero():
            continue
        tower = givental_tower(component, family, level, validate=False)
        for op in tower[level].values():
            windowed = reliable_window(op, alg) if alg is not None else op
            if not windowed.is_zero():
                return False
    return True


def certificate_givental_action(seed: int = 0) -> Certificate:
    """Tower facts and the tangency test against the direct deformation."""

    def body() -> str:
        rng = Random(seed)
        letters = GradedSpace.ungraded(2)
        alg = TensorAlgebraTrunc(letters, 4)
        m = alg.product()
        family = associative_family(m, 5)
        derivation = rho(
            Symbol(letters, 1, 0, {((0,), (1,)): Fraction(1)}), alg
        )
        tau0 = givental_tau0(derivation, family)
        for n, op in tau0.items():
            _check(
                op.is_zero(),
                f"a derivation deforms the family at arity {n}",
            )
        r = _random_unary(alg, 0, rng, 8)
        tower = givental_tower(r, family, 1, validate=False)
        for n in (2, 3, 4):
            direct = givental_direct(r, 1, n, m)
            _check(
                tower[1][n] == direct,
                f"recursion and direct evaluation disagree at level 1, "
                f"arity {n}",
            )
        second_order = rho(random_symbol(alg, 2, rng, terms=4), alg)
        fixtures: list[tuple[str, EndoSeries, MultilinearOp, dict, object]] = []
        fixtures.append(
            (
                "word algebra, derivation",
                EndoSeries(alg.space, (derivation,), 0, z_degree=0),
                m,
                family,
                alg,
            )
        )
        fixtures.append(
            (
                "word algebra, derivation plus delayed second order",
                EndoSeries(alg.space, (derivation, second_order), 0, z_degree=0),
                m,
                family,
                alg,
            )
        )
        graded = TensorAlgebraTrunc(GradedSpace((0, 1), ("e", "f")), 3)
        graded_derivation = rho(
            Symbol(graded.letters, 1, 0, {((0,), (0,)): Fraction(1)}),
            graded,
        )
        fixtures.append(
            (
                "graded word algebra, derivation",
                EndoSeries(graded.space, (graded_derivation,), 0, z_degree=0),
                graded.product(),
                associative_family(graded.product(), 5),
                graded,
            )
        )
        nil_space, nil_product = _three_dim_nilpotent()
        left_multiplication = MultilinearOp(
            nil_space, 1, 0, {(1, (0,)): Fraction(1), (2, (1,)): Fraction(1)}
        )
        fixtures.append(
            (
                "nilpotent algebra, left multiplication",
                EndoSeries(nil_space, (left_multiplication,), 0, z_degree=0),
                nil_product,
                associative_family(nil_product, 5),
                None,
            )
        )
        verdicts = []
        for label, series, product, fam, window in fixtures:
            flag, _ = preserves_associative(series, product, window)
            direct = _deformation_vanishes(series, fam, window)
            _check(
                flag == direct,
                f"tangency test and direct deformation disagree on "
                f"fixture {label!r}: {flag} vs {direct}",
            )
            verdicts.append(flag)
        _check(
            verdicts.count(False) >= 1,
            "no fixture exercises the failing branch",
        )
        _check(
            verdicts.count(True) >= 2,
            "too few fixtures exercise the passing branch",
        )
        return (
            "derivations act trivially; level-1 recursion matches the "
            "direct evaluation for arities <= 4; the tangency test matches "
            f"the direct deformation on {len(fixtures)} fixtures "
            f"({verdicts.count(False)} failing)"
        )

    return _guarded(8, "givental-action", body)


# -- 9. real Betti tables -------------------------------------------------------


def certificate_real_betti() -> Certificate:
    """Betti tables of the real points against the two-parameter operad."""

    def body() -> str:
        rep = certify_dimensions("2ncGerst", 6)
        for n in range(2, 7):
            table = rep["tables"][n]["groebner"]
            topological = real_betti_topological(n)
            as_table = {d: b for d, b in enumerate(topological) if b}
            _check(
                table == as_table,
                f"arity {n}: operad dimensions {table} differ from the "
                f"Betti table {as_table}",
            )
            _check(
                table == {d: b for d, b in real_betti(n).items() if b},
                f"arity {n}: the two Betti routes disagree",
            )
        for n in range(2, 9):
            betti = real_betti_topological(n)
            chi = sum((-1) ** d * b for d, b in enumerate(betti))
            if n % 2:
                expected = 0
            else:
                half = n // 2 - 1
                expected = (-1) ** half * catalan(half)
            _check(
                chi == expected,
                f"arity {n}: Euler characteristic {chi}, expected {expected}",
            )
            _check(
                chi == euler_characteristic_real(n),
                f"arity {n}: closed-form Euler characteristic differs",
            )
        return (
            "operad dimensions match both Betti routes for n<=6; Euler "
            "characteristics follow the vanishing and signed-count rule "
            "for n<=8"
        )

    return _guarded(9, "real-betti", body)


# -- driver ---------------------------------------------------------------------


CERTIFICATES: Sequence[Callable[..., Certificate]] = (
    certificate_dimension_tables,
    certificate_groebner_bases,
    certificate_koszul_duality,
    certificate_correlators,
    certificate_polytope_fan,
    certificate_brick_axioms,
    certificate_borjeson_calculus,
    certificate_givental_action,
    certificate_real_betti,
)

_SEEDED = {
    "certificate_brick_axioms",
    "certificate_borjeson_calculus",
    "certificate_givental_action",
}


def run_all(seed: int = 0, quick: bool = False) -> list[Certificate]:
    """Run every certificate; ``quick`` is accepted for symmetry.

    The batteries are already sized for a desk-scale run, so the quick
    flag selects the same checks; it exists so callers can record which
    profile they asked for.
    """
    del quick
    results = []
    for func in CERTIFICATES:
        if func.__name__ in _SEEDED:
            results.append(func(seed=seed))
        else:
            results.append(func())
    return results
